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

#include "tls2p/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tls2p/quadrature.hpp"

namespace tls2p {
namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// \int_0^1 e^{z s} ds and \int_0^1 s e^{z s} ds, with series near z = 0.
cplx phi1(cplx z) {
  if (std::abs(z) < 1.0) {
    cplx term = 1.0, sum = 0.0;
    for (int k = 0; k < 30; ++k) {
      sum += term / static_cast<double>(k + 1);
      term *= z / static_cast<double>(k + 1);
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

cplx phi2(cplx z) {
  if (std::abs(z) < 1.0) {
    cplx term = 1.0, sum = 0.0;
    for (int k = 0; k < 30; ++k) {
      sum += term / static_cast<double>(k + 2);
      term *= z / static_cast<double>(k + 1);
    }
    return sum;
  }
  return (std::exp(z) * (z - 1.0) + 1.0) / (z * z);
}

// z with erfc(z / sqrt 2) = tail, i.e. the two-sided normal quantile.
double normal_two_sided_quantile(double tail) {
  double lo = 0.0, hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (std::erfc(mid / std::sqrt(2.0)) > tail) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

cplx sampled_at(const Sampled& s, double t) {
  const double u = (t - s.grid.start) / s.grid.step;
  if (u < 0.0 || u > static_cast<double>(s.grid.count - 1)) return {};
  const auto k = std::min(static_cast<std::size_t>(u), s.grid.count - 2);
  const double frac = u - static_cast<double>(k);
  return s.values[k] + (s.values[k + 1] - s.values[k]) * frac;
}

}  // namespace

PulseSpec PulseSpec::gaussian(double omega, double tau) {
  if (!(omega > 0.0) || !std::isfinite(omega) || !std::isfinite(tau)) {
    throw std::invalid_argument("Gaussian pulse needs a positive finite bandwidth");
  }
  return PulseSpec(Gaussian{omega, tau});
}

PulseSpec PulseSpec::rising_exp(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("rising exponential pulse needs a positive finite gamma");
  }
  return PulseSpec(RisingExp{gamma});
}

PulseSpec PulseSpec::sampled(Grid1D grid, std::vector<cplx> values, bool normalize) {
  grid.validate();
  if (values.size() != grid.count) {
    throw std::invalid_argument("sampled pulse: value count does not match grid");
  }
  PulseSpec p(Sampled{grid, std::move(values)});
  if (normalize) {
    const double n = std::sqrt(p.norm2());
    if (!(n > 0.0)) throw std::invalid_argument("sampled pulse has zero norm");
    for (auto& v : std::get<Sampled>(p.shape_).values) v /= n;
  }
  return p;
}

cplx PulseSpec::operator()(double t) const {
  return std::visit(
      Overloaded{
          [t](const Gaussian& g) -> cplx {
            const double d = t - g.tau;
            return std::pow(g.omega * g.omega / (2.0 * kPi), 0.25) *
                   std::exp(-g.omega * g.omega * d * d / 4.0);
          },
          [t](const RisingExp& r) -> cplx {
            if (t > 0.0) return {};
            return -std::sqrt(r.gamma) * std::exp(r.gamma * t / 2.0);
          },
          [t](const Sampled& s) -> cplx { return sampled_at(s, t); },
      },
      shape_);
}

cplx PulseSpec::limit(double t, Side side) const {
  if (const auto* r = std::get_if<RisingExp>(&shape_); r && t == 0.0) {
    return side == Side::left ? cplx(-std::sqrt(r->gamma)) : cplx{};
  }
  if (const auto* s = std::get_if<Sampled>(&shape_)) {
    if (t == s->grid.start && side == Side::left) return {};
    if (t == s->grid.stop() && side == Side::right) return {};
  }
  return (*this)(t);
}

cplx PulseSpec::spectrum(double w) const {
  return std::visit(
      Overloaded{
          [w](const Gaussian& g) -> cplx {
            return std::pow(2.0 / (kPi * g.omega * g.omega), 0.25) *
                   std::exp(-w * w / (g.omega * g.omega)) * std::exp(cplx(0.0, -w * g.tau));
          },
          [w](const RisingExp& r) -> cplx {
            return kInvSqrt2Pi * std::sqrt(r.gamma) / cplx(-r.gamma / 2.0, w);
          },
          [w](const Sampled& s) -> cplx {
            const double h = s.grid.step;
            const cplx z(0.0, -w * h);
            const cplx p1 = phi1(z), p2 = phi2(z);
            cplx sum{};
            for (std::size_t k = 0; k + 1 < s.grid.count; ++k) {
              const cplx phase = std::exp(cplx(0.0, -w * s.grid.at(k)));
              sum += phase * (s.values[k] * p1 + (s.values[k + 1] - s.values[k]) * p2);
            }
            return kInvSqrt2Pi * h * sum;
          },
      },
      shape_);
}

double PulseSpec::norm2() const {
  if (const auto* s = std::get_if<Sampled>(&shape_)) {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < s->grid.count; ++k) {
      const cplx a = s->values[k], b = s->values[k + 1];
      sum += std::norm(a) + (a * std::conj(b)).real() + std::norm(b);
    }
    return sum * s->grid.step / 3.0;
  }
  return 1.0;
}

std::vector<double> PulseSpec::breakpoints() const {
  return std::visit(Overloaded{
                        [](const Gaussian&) { return std::vector<double>{}; },
                        [](const RisingExp&) { return std::vector<double>{0.0}; },
                        [](const Sampled& s) {
                          return std::vector<double>{s.grid.start, s.grid.stop()};
                        },
                    },
                    shape_);
}

Interval PulseSpec::window(double tail) const {
  if (!(tail > 0.0 && tail < 1.0)) throw std::invalid_argument("window: tail must be in (0, 1)");
  return std::visit(Overloaded{
                        [tail](const Gaussian& g) {
                          const double z = normal_two_sided_quantile(tail) / g.omega;
                          return Interval{g.tau - z, g.tau + z};
                        },
                        [tail](const RisingExp& r) {
                          return Interval{std::log(tail) / r.gamma, 0.0};
                        },
                        [](const Sampled& s) { return Interval{s.grid.start, s.grid.stop()}; },
                    },
                    shape_);
}

double PulseSpec::rate() const {
  return std::visit(Overloaded{
                        [](const Gaussian& g) { return g.omega; },
                        [](const RisingExp& r) { return r.gamma; },
                        [](const Sampled& s) { return 1.0 / (25.0 * s.grid.step); },
                    },
                    shape_);
}

cplx evaluate(const PulseSpec& pulse, double t) { return pulse(t); }

cplx fourier(const PulseSpec& pulse, double w) { return pulse.spectrum(w); }

cplx overlap(const PulseSpec& xi1, const PulseSpec& xi2, double tol) {
  const Interval w1 = xi1.window(1e-30), w2 = xi2.window(1e-30);
  const double lo = std::max(w1.lo, w2.lo), hi = std::min(w1.hi, w2.hi);
  if (!(hi > lo)) return {};
  std::vector<double> breaks = xi1.breakpoints();
  const auto b2 = xi2.breakpoints();
  breaks.insert(breaks.end(), b2.begin(), b2.end());
  const auto pts = split_points(lo, hi, breaks);
  auto f = [&](double t) { return std::conj(xi1(t)) * xi2(t); };
  return adaptive_quad_detail(f, pts, tol).value;
}

Interval default_window(const PulseSpec& pulse, double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("default_window: kappa must be positive");
  Interval w = pulse.window(kDefaultEnergyTail);
  w.hi += 8.0 / kappa;
  return w;
}

TwoPhotonInput TwoPhotonInput::make(PulseSpec xi1, PulseSpec xi2) {
  double n2 = 2.0;
  if (!(xi1 == xi2)) {
    n2 = std::clamp(1.0 + std::norm(overlap(xi1, xi2)), 1.0, 2.0);
  }
  return {std::move(xi1), std::move(xi2), n2};
}

std::vector<double> TwoPhotonInput::breakpoints() const {
  std::vector<double> b = xi1.breakpoints();
  const auto b2 = xi2.breakpoints();
  b.insert(b.end(), b2.begin(), b2.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

Interval scattering_window(const TwoPhotonInput& input, double rate, double tail,
                           double lifetimes) {
  if (!(rate > 0.0)) throw std::invalid_argument("scattering_window: rate must be positive");
  const Interval a = input.xi1.window(tail), b = input.xi2.window(tail);
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi) + lifetimes / rate};
}

Grid1D aligned_axis(Interval window, std::size_t points, std::span<const double> jumps) {
  if (points < 8 || !(window.hi > window.lo)) {
    throw std::invalid_argument("aligned_axis: need hi > lo and at least 8 points");
  }
  const double* jump = nullptr;
  for (const double& b : jumps) {
    if (b > window.lo && b < window.hi) {
      jump = &b;
      break;
    }
  }
  if (jump == nullptr) return Grid1D::spanning(window.lo, window.hi, points);
  const double h = (window.hi - window.lo) / static_cast<double>(points - 2);
  const double x = (*jump - window.lo) / h;
  const double start = *jump - (std::floor(x + 0.5) + 0.5) * h;
  return Grid1D{start, h, points};
}

}  // namespace tls2p
