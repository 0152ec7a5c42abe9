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
#include "tls2p/pulse.hpp"
#include "tls2p/quadrature.hpp"

namespace tls2p {
namespace {

TEST(AdaptiveQuadTest, ZeroIntegrand) {
  EXPECT_EQ(adaptive_quad([](double) { return cplx{}; }, -3.0, 5.0, 1e-12), cplx{});
}

TEST(AdaptiveQuadTest, ComplexExponential) {
  const cplx v = adaptive_quad([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, 1.0, 1e-13);
  EXPECT_NEAR(v.real(), 0.841470984807897, 1e-13);
  EXPECT_NEAR(v.imag(), 0.459697694131860, 1e-13);
}

TEST(AdaptiveQuadTest, ReversedLimitsFlipSign) {
  auto f = [](double x) { return cplx(x * x, 1.0); };
  EXPECT_NEAR(std::abs(adaptive_quad(f, 2.0, -1.0, 1e-12) + adaptive_quad(f, -1.0, 2.0, 1e-12)),
              0.0, 1e-14);
}

TEST(AdaptiveQuadTest, LorentzianSpectrumNormalised) {
  const auto p = PulseSpec::rising_exp(1.0);
  const cplx v = adaptive_quad([&](double w) { return cplx(std::norm(p.spectrum(w))); },
                               {-1e7, -10.0, 0.0, 10.0, 1e7}, 1e-12);
  EXPECT_NEAR(v.real(), 1.0, 1e-6);
}

TEST(AdaptiveQuadTest, BreakpointsAbsorbKinks) {
  const auto r = adaptive_quad_detail([](double x) { return cplx(std::abs(x - 0.3)); },
                                      std::vector<double>{0.0, 0.3, 1.0}, 1e-14);
  EXPECT_NEAR(r.value.real(), 0.5 * (0.09 + 0.49), 1e-15);
  EXPECT_EQ(r.panels, 2u);
}

TEST(AdaptiveQuadTest, BudgetExhaustionThrows) {
  auto f = [](double x) { return cplx(std::sin(1.0 / (x + 1e-9))); };
  EXPECT_THROW(adaptive_quad(f, 0.0, 1.0, 1e-14, 20), NoConvergence);
}

TEST(AdaptiveQuadTest, NonFiniteThrows) {
  EXPECT_THROW(adaptive_quad([](double x) { return cplx(1.0 / x); }, 0.0, 1.0, 1e-10),
               NoConvergence);
}

TEST(SplitPointsTest, KeepsInteriorBreaksSorted) {
  const std::vector<double> breaks = {5.0, 0.5, -2.0, 0.5};
  EXPECT_EQ(split_points(-1.0, 1.0, breaks), (std::vector<double>{-1.0, 0.5, 1.0}));
}

}  // namespace
}  // namespace tls2p
