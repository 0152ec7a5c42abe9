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

#ifndef TLS2P_QUADRATURE_HPP_
#define TLS2P_QUADRATURE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tls2p/error.hpp"
#include "tls2p/grid.hpp"

namespace tls2p {

struct QuadResult {
  cplx value;
  double error;        // sum of the per-panel |Kronrod - Gauss| estimates
  std::size_t panels;  // panels in the final partition
};

inline constexpr std::size_t kDefaultPanelBudget = 10000;

namespace detail {

// 21-point Kronrod abscissae on [-1, 1] (non-negative half) and weights.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980783850, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// 10-point Gauss weights paired with kXgk[1], kXgk[3], ..., kXgk[9].
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  cplx value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename F>
Panel gauss_kronrod21(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx kronrod = fc * kWgk[10];
  cplx gauss{};
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const cplx sum = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= h;
  gauss *= h;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

// Global adaptive Gauss-Kronrod (G10/K21) integration of a complex integrand
// over consecutive intervals [points[0], points[1]], [points[1], points[2]], ...
// Breakpoints let the caller mark kinks and jumps. Stops once the summed error
// estimate is below tol * (1 + |result|).
template <typename F>
QuadResult adaptive_quad_detail(F&& f, std::span<const double> points, double tol,
                                std::size_t max_panels = kDefaultPanelBudget) {
  if (points.size() < 2) throw std::invalid_argument("adaptive_quad: need two limits");
  if (!(tol > 0.0)) throw std::invalid_argument("adaptive_quad: tol must be positive");
  std::vector<detail::Panel> heap;
  heap.reserve(64);
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    if (points[k + 1] == points[k]) continue;
    heap.push_back(detail::gauss_kronrod21(f, points[k], points[k + 1]));
  }
  if (heap.empty()) return {cplx{}, 0.0, 0};
  std::make_heap(heap.begin(), heap.end());
  cplx total{};
  double err = 0.0;
  for (const auto& p : heap) {
    total += p.value;
    err += p.error;
  }
  for (;;) {
    if (!std::isfinite(err) || !std::isfinite(total.real()) || !std::isfinite(total.imag())) {
      throw NoConvergence("adaptive_quad: non-finite integrand value");
    }
    if (err <= tol * (1.0 + std::abs(total))) {
      // Resum to shed drift from the running totals before accepting.
      total = {};
      err = 0.0;
      for (const auto& p : heap) {
        total += p.value;
        err += p.error;
      }
      if (err <= tol * (1.0 + std::abs(total))) return {total, err, heap.size()};
    }
    if (heap.size() >= max_panels) {
      throw NoConvergence("adaptive_quad: panel budget of " + std::to_string(max_panels) +
                          " exhausted (error estimate " + std::to_string(err) + ")");
    }
    std::pop_heap(heap.begin(), heap.end());
    const detail::Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      throw NoConvergence("adaptive_quad: panel width reached machine precision");
    }
    const detail::Panel left = detail::gauss_kronrod21(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }
}

template <typename F>
cplx adaptive_quad(F&& f, double a, double b, double tol,
                   std::size_t max_panels = kDefaultPanelBudget) {
  if (a == b) return {};
  const double sign = a < b ? 1.0 : -1.0;
  const std::array<double, 2> pts = {std::min(a, b), std::max(a, b)};
  return sign * adaptive_quad_detail(f, pts, tol, max_panels).value;
}

template <typename F>
cplx adaptive_quad(F&& f, std::initializer_list<double> points, double tol,
                   std::size_t max_panels = kDefaultPanelBudget) {
  const std::vector<double> pts(points);
  return adaptive_quad_detail(f, pts, tol, max_panels).value;
}

// Sorted breakpoints inside (a, b) framed by a and b; used to split integrals
// at known discontinuities.
std::vector<double> split_points(double a, double b, std::span<const double> breaks);

}  // namespace tls2p

#endif  // TLS2P_QUADRATURE_HPP_
