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

#include "tls2p/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cut_rules.hpp"

namespace tls2p {

double integrate_abs2(const Grid2D& grid, const ComplexMatrix& values) {
  double sum = 0.0;
  for (const cplx& v : values.values()) sum += std::norm(v);
  return sum * grid.axis1.step * grid.axis2.step;
}

namespace {

std::vector<double> cuts_on(const Grid1D& g, std::span<const double> jumps) {
  std::vector<double> us;
  for (double b : jumps) {
    const double u = (b - g.start) / g.step;
    if (u > 0.0 && u < static_cast<double>(g.count - 1)) us.push_back(u);
  }
  return us;
}

}  // namespace

double integrate_abs2(const Grid2D& grid, const ComplexMatrix& values,
                      std::span<const double> jumps, bool diagonal_kink) {
  grid.validate();
  if (values.rows() != grid.axis1.count || values.cols() != grid.axis2.count) {
    throw std::invalid_argument("integrate_abs2: matrix shape does not match grid");
  }
  const Grid1D& a1 = grid.axis1;
  const Grid1D& a2 = grid.axis2;
  const std::vector<double> cuts1 = cuts_on(a1, jumps);
  // Integrate over p1 first; the kink at p1 = p2 is gone after this pass.
  std::vector<double> inner(a2.count, 0.0);
  std::vector<double> shared;
  if (!diagonal_kink) shared = detail::line_weights(a1.count, cuts1);
  for (std::size_t b = 0; b < a2.count; ++b) {
    std::vector<double> own;
    if (diagonal_kink) {
      std::vector<double> us = cuts1;
      detail::add_kink(us, (a2.at(b) - a1.start) / a1.step, a1.count);
      own = detail::line_weights(a1.count, std::move(us));
    }
    const std::vector<double>& w = diagonal_kink ? own : shared;
    double sum = 0.0;
    for (std::size_t a = 0; a < a1.count; ++a) sum += w[a] * std::norm(values(a, b));
    inner[b] = sum * a1.step;
  }
  const std::vector<double> w2 = detail::line_weights(a2.count, cuts_on(a2, jumps));
  double total = 0.0;
  for (std::size_t b = 0; b < a2.count; ++b) total += w2[b] * inner[b];
  return total * a2.step;
}

double integrate_abs2(const TwoPhotonAmplitude& field) {
  return integrate_abs2(field.grid, field.values, field.jumps, field.diagonal_kink);
}

double max_asymmetry(const ComplexMatrix& values) {
  if (values.rows() != values.cols()) {
    throw std::invalid_argument("max_asymmetry: matrix is not square");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (std::size_t j = i + 1; j < values.cols(); ++j) {
      worst = std::max(worst, std::abs(values(i, j) - values(j, i)));
    }
  }
  return worst;
}

}  // namespace tls2p
