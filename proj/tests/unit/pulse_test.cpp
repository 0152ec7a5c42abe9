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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "tls2p/quadrature.hpp"
#include "tls2p/pulse.hpp"

namespace tls2p {
namespace {

constexpr double kPi = std::numbers::pi;

double energy(const PulseSpec& p, double lo, double hi) {
  return adaptive_quad([&](double t) { return cplx(std::norm(p(t))); }, {lo, 0.0, hi}, 1e-13)
      .real();
}

TEST(PulseTest, ShapesHaveUnitNorm) {
  EXPECT_NEAR(energy(PulseSpec::gaussian(1.46, 3.0), -30.0, 40.0), 1.0, 1e-9);
  EXPECT_NEAR(energy(PulseSpec::rising_exp(0.1), -600.0, 1.0), 1.0, 1e-9);
  EXPECT_NEAR(PulseSpec::gaussian(2.0).norm2(), 1.0, 1e-9);
  EXPECT_NEAR(PulseSpec::rising_exp(0.5).norm2(), 1.0, 1e-9);
}

TEST(PulseTest, RisingExpValues) {
  const auto p = PulseSpec::rising_exp(0.1);
  EXPECT_EQ(evaluate(p, 1.0), cplx(0.0));
  // u(0) = 0, so t = 0 still sits on the rising side.
  EXPECT_NEAR(evaluate(p, 0.0).real(), -std::sqrt(0.1), 1e-15);
  EXPECT_NEAR(evaluate(p, -2.0).real(), -std::sqrt(0.1) * std::exp(-0.1), 1e-15);
  EXPECT_EQ(p.limit(0.0, Side::right), cplx(0.0));
  EXPECT_NEAR(p.limit(0.0, Side::left).real(), -std::sqrt(0.1), 1e-15);
  EXPECT_EQ(p.breakpoints(), std::vector<double>{0.0});
}

TEST(PulseTest, GaussianPeak) {
  EXPECT_NEAR(evaluate(PulseSpec::gaussian(1.0), 0.0).real(), 0.631618777746065, 1e-12);
  EXPECT_NEAR(evaluate(PulseSpec::gaussian(1.0, 2.0), 2.0).real(), 0.631618777746065, 1e-12);
}

TEST(PulseTest, RisingExpSpectrumAtZero) {
  EXPECT_NEAR(fourier(PulseSpec::rising_exp(1.0), 0.0).real(), -0.797884560802865, 1e-12);
  EXPECT_NEAR(fourier(PulseSpec::rising_exp(1.0), 0.0).imag(), 0.0, 1e-15);
}

TEST(PulseTest, GaussianSpectrumParseval) {
  const auto p = PulseSpec::gaussian(1.3, 0.4);
  const cplx total = adaptive_quad([&](double w) { return cplx(std::norm(p.spectrum(w))); },
                                   {-40.0, 0.0, 40.0}, 1e-12);
  EXPECT_NEAR(total.real(), 1.0, 1e-10);
}

TEST(PulseTest, SampledMatchesClosedForm) {
  const auto exact = PulseSpec::rising_exp(0.5);
  const Grid1D g{-80.0, 0.01, 8001};  // last node at t = 0
  std::vector<cplx> v(g.count);
  for (std::size_t k = 0; k < g.count; ++k) v[k] = exact(g.at(k));
  const auto sampled = PulseSpec::sampled(g, v);
  EXPECT_NEAR(sampled.norm2(), 1.0, 1e-12);
  for (double t : {-10.0, -3.333, -0.5, -0.005}) {
    EXPECT_NEAR(std::abs(sampled(t) - exact(t)), 0.0, 2e-6) << "t=" << t;
  }
  for (double w : {-2.0, -0.3, 0.0, 0.25, 1.0}) {
    EXPECT_NEAR(std::abs(sampled.spectrum(w) - exact.spectrum(w)), 0.0, 1e-3) << "w=" << w;
  }
}

TEST(PulseTest, Overlaps) {
  const auto a = PulseSpec::gaussian(1.0);
  EXPECT_NEAR(std::abs(overlap(a, a) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(overlap(a, PulseSpec::gaussian(1.0, 20.0))), 0.0, 1e-9);
  EXPECT_NEAR(overlap(a, PulseSpec::gaussian(1.0, 1.0)).real(), 0.882496902584595, 1e-10);
  // <gauss|exp> has a closed form through erfc; value frozen from mpmath.
  EXPECT_NEAR(overlap(PulseSpec::gaussian(1.0), PulseSpec::rising_exp(1.0)).real(),
              -0.689274658748237, 1e-9);
}

TEST(PulseTest, TwoPhotonNormalisation) {
  const auto g = PulseSpec::gaussian(1.0);
  EXPECT_EQ(TwoPhotonInput::fock(g).n2, 2.0);
  const auto far = TwoPhotonInput::make(g, PulseSpec::gaussian(1.0, 20.0));
  EXPECT_NEAR(far.n2, 1.0, 1e-12);
  const auto near = TwoPhotonInput::make(g, PulseSpec::gaussian(1.0, 1.0));
  EXPECT_NEAR(near.n2, 1.0 + std::exp(-0.25), 1e-10);
}

TEST(PulseTest, WindowHoldsRequestedEnergy) {
  for (const auto& p : {PulseSpec::gaussian(1.46, 3.0), PulseSpec::rising_exp(0.1)}) {
    const Interval w = p.window(1e-6);
    EXPECT_NEAR(energy(p, w.lo, w.hi), 1.0, 1.1e-6);
  }
}

TEST(PulseTest, InvalidParametersThrow) {
  EXPECT_THROW(PulseSpec::gaussian(0.0), std::invalid_argument);
  EXPECT_THROW(PulseSpec::rising_exp(-1.0), std::invalid_argument);
  EXPECT_THROW(PulseSpec::sampled(Grid1D{0.0, 0.1, 8}, std::vector<cplx>(8)), std::invalid_argument);
}

TEST(PulseTest, AlignedAxisPutsJumpMidStep) {
  const std::vector<double> jumps = {0.0};
  const Grid1D g = aligned_axis({-10.0, 5.0}, 64, jumps);
  const double u = (0.0 - g.start) / g.step;
  EXPECT_NEAR(u - std::floor(u), 0.5, 1e-9);
  EXPECT_LE(g.start, -10.0);
  EXPECT_GE(g.stop(), 5.0);
}

}  // namespace
}  // namespace tls2p
