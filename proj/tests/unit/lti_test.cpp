// Copyright 2026 The tls2p Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "tls2p/error.hpp"
#include "tls2p/lti.hpp"

namespace tls2p {
namespace {

ConvolveOptions no_tail() {
  ConvolveOptions o;
  o.require_tail = false;
  return o;
}

TEST(TransferScalarTest, Limits) {
  EXPECT_NEAR(std::abs(transfer_scalar({1.0, 0.0}, 1e9) - 1.0), 0.0, 1e-8);
  for (double kappa : {0.1, 1.0, 7.0}) {
    EXPECT_NEAR(std::abs(transfer_scalar({kappa, 0.4}, -0.4) + 1.0), 0.0, 1e-15);
  }
  const cplx g = transfer_scalar({1.0, 0.0}, 0.5);
  EXPECT_NEAR(g.real(), 0.0, 1e-15);
  EXPECT_NEAR(g.imag(), 1.0, 1e-15);
}

TEST(TransferScalarTest, AllPass) {
  for (double w : {-3.0, -0.2, 0.0, 0.7, 12.0}) {
    EXPECT_NEAR(std::abs(transfer_scalar({0.8, 0.3}, w)), 1.0, 1e-14);
  }
}

TEST(ConvolveScalarTest, PerfectAbsorption) {
  const Grid1D g = Grid1D::spanning(-20.0, 12.0, 641);
  const auto nu = convolve_scalar({1.0, 0.0}, PulseSpec::rising_exp(1.0), g);
  for (std::size_t k = 0; k < g.count; ++k) {
    const double t = g.at(k);
    const double expected = t > 0.0 ? std::exp(-0.5 * t) : 0.0;
    EXPECT_NEAR(std::abs(nu[k] - expected), 0.0, 1e-6) << "t=" << t;
  }
}

TEST(ConvolveScalarTest, WeakCouplingPassesPulse) {
  const auto xi = PulseSpec::gaussian(1.0, 1.0);
  const Grid1D g = Grid1D::spanning(-8.0, 10.0, 361);
  const auto nu = convolve_scalar({1e-6, 0.0}, xi, g, no_tail());
  for (std::size_t k = 0; k < g.count; ++k) {
    EXPECT_NEAR(std::abs(nu[k] - xi(g.at(k))), 0.0, 1e-4);
  }
}

TEST(ConvolveScalarTest, AbsorbedEnergyByFour) {
  const auto xi = PulseSpec::gaussian(1.46, 3.0);
  const Grid1D g = Grid1D::spanning(-10.0, 4.0, 1401);
  const auto nu = convolve_scalar({1.0, 0.0}, xi, g, no_tail());
  double s = 0.0;
  for (std::size_t k = 0; k < g.count; ++k) {
    const double w = (k == 0 || k + 1 == g.count) ? 0.5 : 1.0;
    s += w * (std::norm(xi(g.at(k))) - std::norm(nu[k]));
  }
  EXPECT_NEAR(s * g.step, 0.8, 0.01);
}

TEST(ConvolveScalarTest, MatchesIndependentQuadrature) {
  // nu(3.5) for a Gaussian centred at 3, frozen from an mpmath evaluation.
  const Grid1D g = Grid1D::spanning(-9.0, 4.0, 1301);
  const auto nu = convolve_scalar({1.0, 0.0}, PulseSpec::gaussian(1.46, 3.0), g, no_tail());
  EXPECT_NEAR(nu[1250].real(), -0.163996134592038, 1e-9);
  EXPECT_NEAR(nu[1250].imag(), 0.0, 1e-12);
}

TEST(ConvolveScalarTest, ShortGridThrows) {
  const Grid1D g = Grid1D::spanning(-10.0, 4.0, 141);
  EXPECT_THROW(convolve_scalar({1.0, 0.0}, PulseSpec::gaussian(1.46, 3.0), g), GridTooShort);
}

TEST(TransferMatrixTest, ResonantReflection) {
  const Matrix2 g = transfer_matrix({0.7, 0.7}, 0.0);
  EXPECT_NEAR(std::abs(g[0][0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g[1][1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g[0][1] + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g[1][0] + 1.0), 0.0, 1e-15);
}

TEST(TransferMatrixTest, HighFrequencyIdentity) {
  const Matrix2 g = transfer_matrix({1.0, 3.0}, 1e9);
  EXPECT_NEAR(std::abs(g[0][0] - 1.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(g[1][1] - 1.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(g[0][1]), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(g[1][0]), 0.0, 1e-8);
}

TEST(TransferMatrixTest, Unitary) {
  const Matrix2 g = transfer_matrix({1.0, 2.0}, 0.7);
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      const cplx v = g[m][0] * std::conj(g[n][0]) + g[m][1] * std::conj(g[n][1]);
      EXPECT_NEAR(std::abs(v - (m == n ? 1.0 : 0.0)), 0.0, 1e-12);
    }
  }
}

TEST(ConvolveMatrixTest, WeakCoupling) {
  const auto xi = PulseSpec::gaussian(1.0);
  const Grid1D g = Grid1D::spanning(-8.0, 8.0, 161);
  const TwoChannelParams p{1e-6, 1e-6};
  const auto through = convolve_matrix(p, 1, 1, xi, g, no_tail());
  const auto across = convolve_matrix(p, 1, 2, xi, g, no_tail());
  for (std::size_t k = 0; k < g.count; ++k) {
    EXPECT_NEAR(std::abs(through[k] - xi(g.at(k))), 0.0, 1e-4);
    EXPECT_NEAR(std::abs(across[k]), 0.0, 1e-4);
  }
}

TEST(ConvolveMatrixTest, CrossChannelClosedForm) {
  // kappa1 = kappa2 = gamma = 1: (2/3) e^{r/2} for r <= 0, (2/3) e^{-r} after.
  const Grid1D g = Grid1D::spanning(-20.0, 10.0, 601);
  const auto v = convolve_matrix({1.0, 1.0}, 1, 2, PulseSpec::rising_exp(1.0), g);
  for (std::size_t k = 0; k < g.count; ++k) {
    const double r = g.at(k);
    const double expected = r <= 0.0 ? 2.0 / 3.0 * std::exp(0.5 * r) : 2.0 / 3.0 * std::exp(-r);
    EXPECT_NEAR(std::abs(v[k] - expected), 0.0, 1e-6) << "r=" << r;
  }
}

TEST(ConvolveMatrixTest, LabelSwapSymmetry) {
  const auto xi = PulseSpec::gaussian(1.2, 0.5);
  const Grid1D g = Grid1D::spanning(-10.0, 20.0, 301);
  for (auto [i, j] : {std::pair{1, 1}, std::pair{1, 2}}) {
    const auto a = convolve_matrix({0.4, 1.3}, i, j, xi, g);
    const auto b = convolve_matrix({1.3, 0.4}, 3 - i, 3 - j, xi, g);
    for (std::size_t k = 0; k < g.count; ++k) EXPECT_EQ(a[k], b[k]);
  }
}

TEST(ParamsTest, Validation) {
  EXPECT_THROW(EmitterParams({0.0, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW(TwoChannelParams({1.0, -1.0}).validate(), std::invalid_argument);
  EXPECT_THROW(convolve_matrix({1.0, 1.0}, 3, 1, PulseSpec::gaussian(1.0),
                               Grid1D::spanning(-5, 20, 64)),
               std::invalid_argument);
}

}  // namespace
}  // namespace tls2p
