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

#include "tls2p/cumexp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tls2p/quadrature.hpp"

namespace tls2p {
namespace {

// Lagrange basis on nodes {0, 1, 2, 3} evaluated at u.
std::array<double, 4> lagrange4(double u) {
  return {-(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0, u * (u - 2.0) * (u - 3.0) / 2.0,
          -u * (u - 1.0) * (u - 3.0) / 2.0, u * (u - 1.0) * (u - 2.0) / 6.0};
}

}  // namespace

CumExpRule::CumExpRule(cplx a, double h) : decay_(std::exp(-a * h)), w_{} {
  if (a.real() < 0.0) throw std::invalid_argument("cumexp: Re(a) must be non-negative");
  if (!(h > 0.0)) throw std::invalid_argument("cumexp: step must be positive");
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(a) * h / 2.0)));
  const double width = h / pieces;
  for (int o = 0; o < 3; ++o) {
    for (int p = 0; p < pieces; ++p) {
      const double c = (p + 0.5) * width;
      const double half = 0.5 * width;
      auto accumulate = [&](double x, double wk) {
        const cplx kernel = std::exp(-a * (h - x)) * (wk * half);
        const auto l = lagrange4(x / h + o);
        for (int j = 0; j < 4; ++j) w_[o][j] += kernel * l[j];
      };
      for (std::size_t j = 0; j < 10; ++j) {
        accumulate(c - half * detail::kXgk[j], detail::kWgk[j]);
        accumulate(c + half * detail::kXgk[j], detail::kWgk[j]);
      }
      accumulate(c, detail::kWgk[10]);
    }
  }
}

std::vector<cplx> cumexp(cplx a, const Grid1D& grid, std::span<const cplx> f, cplx initial) {
  grid.validate();
  if (f.size() != grid.count) {
    throw std::invalid_argument("cumexp: sample count does not match grid");
  }
  const CumExpRule rule(a, grid.step);
  const std::size_t n = grid.count;
  std::vector<cplx> out(n);
  out[0] = initial;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t s = std::min(k == 0 ? 0 : k - 1, n - 4);
    const auto& w = rule.weights(static_cast<int>(k - s));
    out[k + 1] = rule.decay() * out[k] + w[0] * f[s] + w[1] * f[s + 1] + w[2] * f[s + 2] +
                 w[3] * f[s + 3];
  }
  return out;
}

}  // namespace tls2p
