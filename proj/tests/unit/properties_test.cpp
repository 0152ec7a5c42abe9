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


// Invariants checked over seeded random configurations.

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "tls2p/fourier2d.hpp"
#include "tls2p/one_channel.hpp"
#include "tls2p/two_channel.hpp"

namespace tls2p {
namespace {

class RandomConfig : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { rng_.seed(1000 + GetParam()); }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  PulseSpec pulse() {
    if (uniform(0.0, 1.0) < 0.5) return PulseSpec::gaussian(uniform(0.4, 2.0), uniform(-1.0, 1.0));
    return PulseSpec::rising_exp(uniform(0.2, 1.5));
  }

  std::mt19937_64 rng_;
};

TEST_P(RandomConfig, TransferFunctionsAreUnitary) {
  for (int k = 0; k < 20; ++k) {
    const double w = uniform(-10.0, 10.0);
    EXPECT_NEAR(std::abs(transfer_scalar({uniform(0.01, 5.0), uniform(-1.0, 1.0)}, w)), 1.0, 1e-14);
    const Matrix2 g = transfer_matrix({uniform(0.01, 5.0), uniform(0.01, 5.0)}, w);
    for (int m = 0; m < 2; ++m) {
      for (int n = 0; n < 2; ++n) {
        const cplx v = g[m][0] * std::conj(g[n][0]) + g[m][1] * std::conj(g[n][1]);
        EXPECT_NEAR(std::abs(v - (m == n ? 1.0 : 0.0)), 0.0, 1e-13);
      }
    }
  }
}

TEST_P(RandomConfig, TwoPhotonNormalisationInRange) {
  const auto in = TwoPhotonInput::make(pulse(), pulse());
  EXPECT_GE(in.n2, 1.0);
  EXPECT_LE(in.n2, 2.0);
}

TEST_P(RandomConfig, MixingKernelSymmetricInInnerFrequencies) {
  const EmitterParams p{uniform(0.1, 2.0), uniform(-0.5, 0.5)};
  for (int k = 0; k < 10; ++k) {
    const double w1 = uniform(-3, 3), w2 = uniform(-3, 3), mu = uniform(-3, 3);
    const double mu2 = w1 + w2 - mu;
    EXPECT_EQ(mixing_kernel(p, w1, w2, mu, mu2), mixing_kernel(p, w1, w2, mu2, mu));
  }
}

TEST_P(RandomConfig, OneChannelFieldSymmetricAndUnitary) {
  const EmitterParams p{uniform(0.3, 2.0), uniform(-0.5, 0.5)};
  const auto in = TwoPhotonInput::make(pulse(), pulse());
  const Interval w = scattering_window(in, p.kappa);
  const Grid1D g = aligned_axis(w, 96, in.breakpoints());
  const auto f = eta_time(p, in, {g, g});
  EXPECT_LE(max_asymmetry(f.values), 1e-12);
  const OneChannelModel m(p, in, w.lo, w.hi);
  EXPECT_NEAR(m.norm(w.lo, w.hi) / (2.0 * in.n2), 1.0, 1e-3);
}

TEST_P(RandomConfig, OneChannelOracleAgreement) {
  const EmitterParams p{uniform(0.3, 2.0), uniform(-0.5, 0.5)};
  const auto in = TwoPhotonInput::make(pulse(), pulse());
  const Interval w = scattering_window(in, p.kappa);
  const OneChannelModel m(p, in, w.lo, w.hi);
  for (int k = 0; k < 3; ++k) {
    const double p1 = uniform(-2.0, 3.0), p2 = uniform(-2.0, 3.0);
    const cplx ref = brute_force_eta(p, in, p1, p2);
    EXPECT_NEAR(std::abs(m.eta(p1, p2) - ref), 0.0, 1e-6 * std::max(std::abs(ref), 1e-3));
  }
}

TEST_P(RandomConfig, TwoChannelEqualCouplingInvariants) {
  const double kappa = uniform(0.1, 1.5);
  const TwoChannelParams p{kappa, kappa};
  const auto in = TwoPhotonInput::fock(pulse());
  const Grid1D g = aligned_axis(scattering_window(in, 2.0 * kappa), 96, in.breakpoints());
  const auto f = eta_ij_time(p, in, {g, g});
  EXPECT_EQ(f.eta11.values(), f.eta22.values());
  EXPECT_LE(max_asymmetry(f.eta11), 1e-8);
  EXPECT_LE(max_asymmetry(f.eta12), 1e-8);
  const Grid1D w = Grid1D::spanning(-3.0 * kappa, 3.0 * kappa, 24);
  const auto t = T_ij_freq(p, in, {w, w});
  EXPECT_LE(max_asymmetry(t.eta11), 1e-8);
  EXPECT_LE(max_asymmetry(t.eta12), 1e-8);
  EXPECT_LE(max_asymmetry(t.eta22), 1e-8);
}

TEST_P(RandomConfig, TwoChannelOracleAndConservation) {
  const TwoChannelParams p{uniform(0.2, 1.5), uniform(0.2, 1.5)};
  const auto in = TwoPhotonInput::make(pulse(), pulse());
  const Interval w = scattering_window(in, 2.0 * p.decay());
  const TwoChannelModel m(p, in, w.lo, w.hi);
  for (int k = 0; k < 2; ++k) {
    const double p1 = uniform(-2.0, 3.0), p2 = uniform(-2.0, 3.0);
    const int i = 1 + k % 2, j = 2 - k % 2;
    const cplx ref = brute_force_eta_ij(p, in, i, j, p1, p2);
    EXPECT_NEAR(std::abs(m.amplitude(i, j, p1, p2, TwoChannelPath::automatic) - ref), 0.0,
                1e-5 * std::max(std::abs(ref), 1e-3));
  }
  const Grid1D g = aligned_axis(w, 256, in.breakpoints());
  EXPECT_NEAR(channel_probabilities(eta_ij_time(p, in, {g, g})).total(), 1.0, 1e-3);
}

TEST_P(RandomConfig, TransformKeepsExchangeSymmetry) {
  const auto a = pulse(), b = pulse();
  const auto in = TwoPhotonInput::make(a, b);
  const Grid1D g = aligned_axis(scattering_window(in, 1.0), 64, in.breakpoints());
  ComplexMatrix v(g.count, g.count);
  for (std::size_t i = 0; i < g.count; ++i) {
    for (std::size_t j = 0; j < g.count; ++j) {
      v(i, j) = a(g.at(i)) * b(g.at(j)) + a(g.at(j)) * b(g.at(i));
    }
  }
  const auto jumps = in.breakpoints();
  EXPECT_EQ(max_asymmetry(fourier2d({g, g}, v, jumps)), 0.0);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomConfig, ::testing::Range(0, 6));

}  // namespace
}  // namespace tls2p
