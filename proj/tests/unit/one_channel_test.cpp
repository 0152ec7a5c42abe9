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
#include <vector>

#include <gtest/gtest.h>

#include "tls2p/error.hpp"
#include "tls2p/fourier2d.hpp"
#include "tls2p/one_channel.hpp"

namespace tls2p {
namespace {

const double kE = std::exp(1.0);

TwoPhotonInput exp_fock(double gamma) { return TwoPhotonInput::fock(PulseSpec::rising_exp(gamma)); }

Grid2D square(const Grid1D& g) { return {g, g}; }

TEST(ZetaTest, VanishesBelowDiagonal) {
  const auto in = TwoPhotonInput::fock(PulseSpec::gaussian(1.46));
  EXPECT_EQ(zeta({1.0, 0.2}, in, -0.5, 0.5), cplx{});
  EXPECT_EQ(zeta({1.0, 0.2}, in, 1.0, 1.0 + 1e-12), cplx{});
}

TEST(ZetaTest, PerfectAbsorptionCase) {
  // gamma = kappa: nu = 0 before t = 0 and only xi^2 feeds the integral.
  const cplx v = zeta({1.0, 0.0}, exp_fock(1.0), 1.0, -1.0);
  EXPECT_NEAR(v.real(), -2.0 / (kE * kE), 1e-9);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}

TEST(ZetaTest, DiagonalIsHalfTheLimit) {
  const EmitterParams p{0.7, 0.3};
  const auto in = TwoPhotonInput::fock(PulseSpec::gaussian(1.0));
  const OneChannelModel m(p, in, -12.0, 20.0);
  for (double t : {-0.8, 0.2, 1.5}) {
    const cplx limit = m.zeta(t + 1e-7, t);
    EXPECT_NEAR(std::abs(m.zeta(t, t) - 0.5 * limit), 0.0, 1e-6 * std::abs(limit));
  }
}

TEST(OneChannelModelTest, MatchesIndependentOracle) {
  // Values from an independent mpmath evaluation of nu and the correlation
  // integral.
  {
    const EmitterParams p{1.0, 0.3};
    const auto in =
        TwoPhotonInput::make(PulseSpec::gaussian(1.46), PulseSpec::gaussian(1.2, 0.7));
    const OneChannelModel m(p, in, -12.0, 20.0);
    const struct {
      double p1, p2;
      cplx v;
    } cases[] = {{0.5, -0.3, {-0.19422980506613, 0.174102564911081}},
                 {1.2, 0.9, {-0.936972461908771, 0.433860121564849}},
                 {-0.4, 0.6, {-0.157964738398556, 0.15363510946213}}};
    for (const auto& c : cases) {
      EXPECT_NEAR(std::abs(m.eta(c.p1, c.p2) - c.v), 0.0, 1e-7 * std::abs(c.v));
    }
  }
  {
    const OneChannelModel m({0.5, 0.0}, exp_fock(0.1), -300.0, 40.0);
    EXPECT_NEAR(m.eta(2.0, -3.0).real(), -0.00190536840129813, 1e-12);
    EXPECT_NEAR(m.eta(-5.0, -1.0).real(), -0.0581106915774194, 1e-10);
  }
}

TEST(OneChannelModelTest, BruteForceAgreement) {
  const EmitterParams p{1.0, 0.0};
  const auto in = TwoPhotonInput::fock(PulseSpec::gaussian(1.46));
  const OneChannelModel m(p, in, -12.0, 20.0);
  for (auto [p1, p2] : {std::pair{0.3, -0.2}, {1.7, 1.1}, {-1.0, 2.0}, {0.0, 0.0}, {4.0, -1.5}}) {
    const cplx ref = brute_force_eta(p, in, p1, p2);
    EXPECT_NEAR(std::abs(m.eta(p1, p2) - ref), 0.0, 1e-6 * std::abs(ref)) << p1 << "," << p2;
  }
  const cplx v = brute_force_eta(p, exp_fock(1.0), 1.0, -1.0);
  EXPECT_NEAR(v.real(), -2.0 / (kE * kE), 1e-9);
}

TEST(EtaTimeTest, PerfectAbsorptionPoint) {
  // A grid with nodes at -1 and 1.
  const Grid1D g{-30.0, 0.25, 161};
  const auto f = eta_time({1.0, 0.0}, exp_fock(1.0), square(g));
  EXPECT_NEAR(f.values(116, 124).real(), -2.0 / (kE * kE), 1e-8);
  EXPECT_NEAR(f.values(124, 116).real(), -2.0 / (kE * kE), 1e-8);
  EXPECT_TRUE(f.diagonal_kink);
  EXPECT_EQ(f.jumps, std::vector<double>{0.0});
}

TEST(EtaTimeTest, WeakCouplingGivesInputProduct) {
  const auto a = PulseSpec::gaussian(1.0), b = PulseSpec::gaussian(1.3, 1.0);
  const auto in = TwoPhotonInput::make(a, b);
  const Grid1D g = Grid1D::spanning(-8.0, 9.0, 69);
  ConvolveOptions o;
  o.require_tail = false;
  const auto f = eta_time({1e-6, 0.0}, in, square(g), o);
  for (std::size_t i = 0; i < g.count; ++i) {
    for (std::size_t j = 0; j < g.count; ++j) {
      const double p1 = g.at(i), p2 = g.at(j);
      EXPECT_NEAR(std::abs(f.values(i, j) - (a(p1) * b(p2) + a(p2) * b(p1))), 0.0, 1e-4);
    }
  }
}

TEST(EtaTimeTest, TwoDiagonalPeaksAtLargeBandwidth) {
  for (auto [omega, peaks] : {std::pair{1.46, 1u}, {2.92, 2u}, {4.38, 2u}}) {
    const auto in = TwoPhotonInput::fock(PulseSpec::gaussian(omega));
    const Grid1D g = aligned_axis(scattering_window(in, 1.0), 256, in.breakpoints());
    EXPECT_EQ(diagonal_peaks(eta_time({1.0, 0.0}, in, square(g))).size(), peaks) << omega;
  }
}

TEST(EtaTimeTest, ShortGridThrows) {
  const auto in = TwoPhotonInput::fock(PulseSpec::gaussian(1.0));
  EXPECT_THROW(eta_time({0.1, 0.0}, in, square(Grid1D::spanning(-8.0, 8.0, 64))), GridTooShort);
}

TEST(MixingKernelTest, Values) {
  EXPECT_NEAR(mixing_kernel({1.0, 0.0}, 0.0, 0.0, 0.0, 0.0).real(), -16.0, 1e-14);
  EXPECT_NEAR(std::abs(mixing_kernel({1.0, 0.0}, 1e9, 0.3, 0.1, 0.2)), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(mixing_kernel({1.0, 0.0}, 0.3, -1e9, 0.1, 0.2)), 0.0, 1e-8);
  const EmitterParams p{0.6, 0.2};
  EXPECT_EQ(mixing_kernel(p, 0.1, -0.4, 0.7, -1.0), mixing_kernel(p, 0.1, -0.4, -1.0, 0.7));
}

TEST(EtaFreqTest, WeakCouplingGivesInputProduct) {
  const auto a = PulseSpec::gaussian(1.0), b = PulseSpec::gaussian(1.3, 1.0);
  // No node at w = 0: G[0] = -1 for every kappa, so the limit is not uniform there.
  const Grid1D g = Grid1D::spanning(-3.0, 3.0, 24);
  const auto f = eta_freq({1e-6, 0.0}, TwoPhotonInput::make(a, b), square(g));
  EXPECT_EQ(f.domain, Domain::frequency);
  for (std::size_t i = 0; i < g.count; ++i) {
    for (std::size_t j = 0; j < g.count; ++j) {
      const double w1 = g.at(i), w2 = g.at(j);
      const cplx ref = a.spectrum(w2) * b.spectrum(w1) + a.spectrum(w1) * b.spectrum(w2);
      EXPECT_NEAR(std::abs(f.values(i, j) - ref), 0.0, 1e-4);
    }
  }
}

TEST(EtaFreqTest, MatchesTransformedTimeField) {
  const EmitterParams p{0.5, 0.0};
  const auto in = exp_fock(0.1);
  const Grid1D g = aligned_axis(scattering_window(in, p.kappa, 1e-5, 12.0), 256, in.breakpoints());
  const auto spectrum = fourier2d(eta_time(p, in, square(g))).field;
  const auto direct = eta_freq(p, in, spectrum.grid);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < direct.values.values().size(); ++k) {
    num += std::norm(spectrum.values.values()[k] - direct.values.values()[k]);
    den += std::norm(direct.values.values()[k]);
  }
  EXPECT_LE(std::sqrt(num / den), 1e-2);
}

TEST(EtaFreqTest, AntiCorrelatedMaxima) {
  const Grid1D g = Grid1D::spanning(-1.0, 1.0, 65);
  const auto f = eta_freq({0.5, 0.0}, exp_fock(0.1), square(g));
  double top = 0.0;
  for (const cplx v : f.values.values()) top = std::max(top, std::norm(v));
  for (std::size_t i = 0; i < g.count; ++i) {
    for (std::size_t j = 0; j < g.count; ++j) {
      if (std::norm(f.values(i, j)) < top * (1.0 - 1e-9)) continue;
      EXPECT_LE(std::abs(g.at(i) + g.at(j)), g.step * (1.0 + 1e-9));
      EXPECT_GT(std::abs(g.at(i)), g.step * (1.0 + 1e-9));
    }
  }
}

TEST(TimeDensityTest, Scales) {
  const auto in = TwoPhotonInput::fock(PulseSpec::gaussian(1.46));
  const Grid1D g = aligned_axis(scattering_window(in, 1.0), 256, in.breakpoints());
  const auto f = eta_time({1.0, 0.0}, in, square(g));
  const auto normalized = time_density(f, DensityScale::normalized);
  const auto paper = time_density(f, DensityScale::paper_fock);
  for (std::size_t k = 0; k < normalized.values().size(); ++k) {
    EXPECT_DOUBLE_EQ(paper.values()[k], 0.5 * normalized.values()[k]);
  }
  double total = 0.0;
  for (double v : normalized.values()) total += v;
  EXPECT_NEAR(total * g.step * g.step, 1.0, 1e-3);

  TwoPhotonAmplitude zero = f;
  zero.values = ComplexMatrix(g.count, g.count);
  const auto empty = time_density(zero, DensityScale::normalized);
  for (double v : empty.values()) EXPECT_EQ(v, 0.0);
}

TEST(TimeDensityTest, PaperScaleNeedsFockInput) {
  const auto in = TwoPhotonInput::make(PulseSpec::gaussian(1.0), PulseSpec::gaussian(1.0, 4.0));
  const Grid1D g = aligned_axis(scattering_window(in, 1.0), 64, in.breakpoints());
  const auto f = eta_time({1.0, 0.0}, in, square(g));
  EXPECT_THROW(time_density(f, DensityScale::paper_fock), ScaleMismatch);
}

TEST(OneChannelNormTest, CubatureMatchesTwiceN2) {
  const auto in = TwoPhotonInput::make(PulseSpec::gaussian(1.0), PulseSpec::gaussian(1.5, 1.0));
  const Interval w = scattering_window(in, 0.8);
  const OneChannelModel m({0.8, 0.25}, in, w.lo, w.hi);
  EXPECT_NEAR(m.norm(w.lo, w.hi) / (2.0 * in.n2), 1.0, 1e-3);
}

}  // namespace
}  // namespace tls2p
