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

// Sums over uniform samples of piecewise-smooth lines. A line is cut at known
// positions (jumps, or kinks where only the slope breaks); each piece is
// summed with the trapezoid rule and corrected at its ends from one-sided
// derivative estimates.

#ifndef TLS2P_SRC_CUT_RULES_HPP_
#define TLS2P_SRC_CUT_RULES_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tls2p/grid.hpp"

namespace tls2p::detail {

inline constexpr int kOrders = 4;   // value and first three derivatives at each cut
inline constexpr int kStencil = 6;  // one-sided nodes for the derivative estimates

// Fornberg's finite-difference weights: w[d][i] approximates the d-th
// derivative at z from values on nodes x.
std::array<std::vector<double>, kOrders> fornberg(double z, const std::vector<double>& x);

// Excess of the node sum over the integral for s^m on a half line:
//   phi_m = sum_{j>=0} (j + delta)^m e^{mu (j + delta)} - \int_0^inf s^m e^{mu s} ds
// (both Abel-regularized), mu = -i theta.
std::array<cplx, kOrders> endpoint_excess(double theta, double delta);

// Nodes [k0, k1] between two cuts; el <= 0 and er >= 0 place the segment
// ends relative to k0 and k1 in units of the step.
struct Segment {
  long k0, k1;
  double el, er;
};

// Cuts are node coordinates u in (0, n - 1). A cut on a node is shared by
// both neighbours (a kink); otherwise the field may jump there.
std::vector<Segment> plan_segments(std::size_t n, std::vector<double> us);

// Adds a kink cut at u to the jump cuts `us`, unless it would leave a sliver
// without samples next to a jump.
void add_kink(std::vector<double>& us, double u, std::size_t n);

// Values at positions xs (node coordinates) of the piecewise-smooth line f,
// cut at us. Each point uses the nearest kStencil nodes of its own segment.
std::vector<cplx> resample_line(std::span<const cplx> f, std::vector<double> us,
                                std::span<const double> xs);

// Quadrature weights in units of the step for a line of n samples cut at us.
std::vector<double> line_weights(std::size_t n, std::vector<double> us);

}  // namespace tls2p::detail

#endif  // TLS2P_SRC_CUT_RULES_HPP_
