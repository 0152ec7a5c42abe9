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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "tls2p/cumexp.hpp"
#include "tls2p/quadrature.hpp"

namespace tls2p {
namespace {

TEST(CumExpTest, ZeroInput) {
  const Grid1D g{-1.0, 0.1, 40};
  for (const cplx v : cumexp({0.5, 0.2}, g, std::vector<cplx>(g.count))) EXPECT_EQ(v, cplx{});
}

TEST(CumExpTest, ExponentialClosedForm) {
  const cplx a{0.5, 0.3};
  const Grid1D g{-2.0, 0.02, 301};
  std::vector<cplx> f(g.count);
  for (std::size_t k = 0; k < g.count; ++k) f[k] = std::exp(a * g.at(k));
  const auto got = cumexp(a, g, f);
  for (std::size_t k = 0; k < g.count; ++k) {
    const double t = g.at(k);
    const cplx expected = std::exp(-a * t) * (std::exp(2.0 * a * t) - std::exp(2.0 * a * g.start)) /
                          (2.0 * a);
    EXPECT_NEAR(std::abs(got[k] - expected), 0.0, 1e-8) << "t=" << t;
  }
}

TEST(CumExpTest, InitialValueDecays) {
  const cplx a{0.7, -1.0};
  const Grid1D g{0.0, 0.05, 50};
  const auto got = cumexp(a, g, std::vector<cplx>(g.count), {2.0, 1.0});
  for (std::size_t k = 0; k < g.count; ++k) {
    EXPECT_NEAR(std::abs(got[k] - cplx(2.0, 1.0) * std::exp(-a * g.at(k))), 0.0, 1e-14);
  }
}

TEST(CumExpTest, AgreesWithAdaptiveQuadOnRandomSmoothInput) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const cplx a{0.2 + 0.5 * (u(rng) + 1.0), u(rng)};
    const cplx c0{u(rng), u(rng)}, c1{u(rng), u(rng)};
    const double w0 = 1.0 + u(rng), w1 = 2.0 + u(rng);
    auto f = [&](double r) { return c0 * std::sin(w0 * r) + c1 * std::exp(-w1 * r * r); };
    const Grid1D g{-3.0, 0.01, 601};
    std::vector<cplx> samples(g.count);
    for (std::size_t k = 0; k < g.count; ++k) samples[k] = f(g.at(k));
    const auto got = cumexp(a, g, samples);
    for (std::size_t k = 0; k < g.count; k += 50) {
      const double t = g.at(k);
      const cplx ref =
          adaptive_quad([&](double r) { return std::exp(-a * (t - r)) * f(r); }, g.start, t, 1e-13);
      EXPECT_NEAR(std::abs(got[k] - ref), 0.0, 1e-7) << "trial " << trial << " t=" << t;
    }
  }
}

TEST(CumExpTest, FourthOrderConvergence) {
  const cplx a{1.0, 2.0};
  auto error = [&](double h) {
    const Grid1D g{0.0, h, static_cast<std::size_t>(std::lround(2.0 / h)) + 1};
    std::vector<cplx> f(g.count);
    for (std::size_t k = 0; k < g.count; ++k) f[k] = std::cos(3.0 * g.at(k));
    const cplx got = cumexp(a, g, f).back();
    const cplx ref =
        adaptive_quad([&](double r) { return std::exp(-a * (2.0 - r)) * std::cos(3.0 * r); },
                      0.0, 2.0, 1e-14);
    return std::abs(got - ref);
  };
  const double ratio = error(0.1) / error(0.05);
  EXPECT_GT(ratio, 12.0);
}

TEST(CumExpTest, RejectsGrowingKernel) {
  const Grid1D g{0.0, 0.1, 10};
  EXPECT_THROW(cumexp({-0.1, 0.0}, g, std::vector<cplx>(g.count)), std::invalid_argument);
  EXPECT_THROW(cumexp({0.1, 0.0}, g, std::vector<cplx>(3)), std::invalid_argument);
}

}  // namespace
}  // namespace tls2p
