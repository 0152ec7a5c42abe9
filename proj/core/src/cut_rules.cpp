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

#include "cut_rules.hpp"

#include <algorithm>
#include <cmath>

namespace tls2p::detail {

std::array<std::vector<double>, kOrders> fornberg(double z, const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::array<double, kOrders>> c(n);
  double c1 = 1.0, c4 = x[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, kOrders - 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::array<std::vector<double>, kOrders> out;
  for (int d = 0; d < kOrders; ++d) {
    for (int i = 0; i < n; ++i) out[d].push_back(c[i][d]);
  }
  return out;
}

// Excess of the node sum over the integral for s^m on a half line:
//   phi_m = sum_{j>=0} (j + delta)^m e^{mu (j + delta)} - \int_0^inf s^m e^{mu s} ds
// (both Abel-regularized), mu = -i theta. With F(mu) = e^{mu delta}/(1 - e^mu)
// + 1/mu this is the m-th derivative of F, analytic for |mu| < 2 pi.
std::array<cplx, kOrders> endpoint_excess(double theta, double delta) {
  const cplx mu(0.0, -theta);
  std::array<cplx, kOrders> phi{};
  if (std::abs(theta) < 1.5) {
    // F = -sum_{k>=1} b_k mu^{k-1}, b_k = B_k(delta) / k! from
    // sum_{j=0}^{k} b_{k-j} / (j+1)! = delta^k / k!.
    constexpr int kTerms = 40;
    std::array<double, kTerms + 1> b{};
    double dk = 1.0;  // delta^k / k!
    b[0] = 1.0;
    for (int k = 1; k <= kTerms; ++k) {
      dk *= delta / k;
      double sum = dk, fact = 1.0;
      for (int j = 1; j <= k; ++j) {
        fact /= (j + 1);
        sum -= b[k - j] * fact;
      }
      b[k] = sum;
    }
    for (int m = 0; m < kOrders; ++m) {
      cplx acc = 0.0, power = 1.0;
      for (int k = m + 1; k <= kTerms; ++k) {
        double falling = 1.0;  // (k-1)! / (k-1-m)!
        for (int r = 0; r < m; ++r) falling *= (k - 1 - r);
        acc -= b[k] * falling * power;
        power *= mu;
      }
      phi[m] = acc;
    }
    return phi;
  }
  // d/dmu [e^{mu delta} P(w)] = e^{mu delta} (delta P + (w^2 - w) P'),
  // w = 1 / (1 - e^mu), starting from P = w.
  const cplx w = 1.0 / (1.0 - std::exp(mu));
  const cplx lead = std::exp(mu * delta);
  std::vector<double> poly{0.0, 1.0};  // coefficients in w
  double sign_fact = 1.0;               // (-1)^m m!
  for (int m = 0; m < kOrders; ++m) {
    cplx pw = 0.0, wp = 1.0;
    for (double c : poly) {
      pw += c * wp;
      wp *= w;
    }
    phi[m] = lead * pw + sign_fact / std::pow(mu, m + 1);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += delta * poly[i];
      if (i > 0) {
        next[i + 1] += static_cast<double>(i) * poly[i];
        next[i] -= static_cast<double>(i) * poly[i];
      }
    }
    poly = std::move(next);
    sign_fact *= -static_cast<double>(m + 1);
  }
  return phi;
}

std::vector<Segment> plan_segments(std::size_t n, std::vector<double> us) {
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  std::vector<Segment> out;
  long k0 = 0;
  double el = 0.0;
  for (double u : us) {
    const double r = std::round(u);
    const bool on_node = std::abs(u - r) < 1e-9;
    const long k1 = on_node ? static_cast<long>(r) : static_cast<long>(std::ceil(u)) - 1;
    const long next = on_node ? static_cast<long>(r) : static_cast<long>(std::floor(u)) + 1;
    if (k1 >= k0) out.push_back({k0, k1, el, on_node ? 0.0 : u - static_cast<double>(k1)});
    k0 = next;
    el = on_node ? 0.0 : u - static_cast<double>(next);
  }
  out.push_back({k0, static_cast<long>(n) - 1, el, 0.0});
  return out;
}

// Adds a kink cut to the jump cuts `us` unless it shares a cell with a jump
// and no node lies between them; that sliver would have no samples of its
// own, while the kink is harmless over a fraction of one cell.
void add_kink(std::vector<double>& us, double u, std::size_t n) {
  if (!(u > 0.0 && u < static_cast<double>(n - 1))) return;
  if (std::abs(u - std::round(u)) > 1e-9) {
    for (double b : us) {
      const double lo = std::min(b, u), hi = std::max(b, u);
      if (std::floor(lo) + 1.0 >= hi - 1e-9) return;
    }
  }
  us.push_back(u);
}

std::vector<cplx> resample_line(std::span<const cplx> f, std::vector<double> us,
                                std::span<const double> xs) {
  const auto segments = plan_segments(f.size(), std::move(us));
  std::vector<cplx> out(xs.size());
  std::size_t si = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    while (si + 1 < segments.size() &&
           x > static_cast<double>(segments[si].k1) + segments[si].er) {
      ++si;
    }
    const Segment& s = segments[si];
    const long count = std::min<long>(kStencil, s.k1 - s.k0 + 1);
    long first = static_cast<long>(std::floor(x)) - (count - 1) / 2;
    first = std::clamp(first, s.k0, s.k1 - count + 1);
    cplx v = 0.0;
    for (long a = 0; a < count; ++a) {
      double basis = 1.0;
      for (long b = 0; b < count; ++b) {
        if (b != a) basis *= (x - static_cast<double>(first + b)) / static_cast<double>(a - b);
      }
      v += basis * f[static_cast<std::size_t>(first + a)];
    }
    out[i] = v;
  }
  return out;
}

std::vector<double> line_weights(std::size_t n, std::vector<double> us) {
  const auto segments = plan_segments(n, std::move(us));
  std::vector<double> w(n, 0.0);
  for (const Segment& s : segments) {
    for (long k = s.k0; k <= s.k1; ++k) w[static_cast<std::size_t>(k)] += 1.0;
    const int count = static_cast<int>(std::min<long>(kStencil, s.k1 - s.k0 + 1));
    // Left end: nodes to the right at j - el; right end: to the left at j + er.
    for (int side : {+1, -1}) {
      const double delta = side > 0 ? -s.el : s.er;
      const long first = side > 0 ? s.k0 : s.k1;
      std::vector<double> x;
      for (int j = 0; j < count; ++j) x.push_back(side * (j + delta));
      const auto d = fornberg(0.0, x);
      const auto phi = endpoint_excess(0.0, delta);
      double fact = 1.0, sign = 1.0;
      for (int m = 0; m < kOrders && m < count; ++m) {
        for (int j = 0; j < count; ++j) {
          w[static_cast<std::size_t>(first + side * j)] -= sign * phi[m].real() / fact * d[m][j];
        }
        fact *= m + 1;
        sign *= side;
      }
    }
  }
  return w;
}

}  // namespace tls2p::detail
