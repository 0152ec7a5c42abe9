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

#include "tls2p/one_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tls2p/error.hpp"
#include "tls2p/quadrature.hpp"

namespace tls2p {
OneChannelModel::OneChannelModel(const EmitterParams& params, const TwoPhotonInput& input,
                                 double lo, double hi, ToleranceProfile profile)
    : params_(params), jumps_(input.breakpoints()) {
  params.validate();
  const PulseSpec* pulses[] = {&input.xi1, &input.xi2};
  const double rate = std::max(params.kappa, std::abs(params.omega_d));
  const Layout layout = fine_layout(pulses, rate, lo, hi, profile);
  const cplx a = params.decay();
  const double kappa = params.kappa;
  auto nu_of = [kappa](std::span<const cplx> v) { return v[0] - kappa * v[1]; };

  const SegmentedSignal xi1 = sample(layout, input.xi1);
  const SegmentedSignal psi1 = cumexp(a, xi1);
  const SegmentedSignal* in1[] = {&xi1, &psi1};
  nu1_ = combine(in1, nu_of);
  if (input.identical()) {
    nu2_ = nu1_;
    const SegmentedSignal* f_in[] = {&xi1, &psi1};
    const SegmentedSignal f =
        combine(f_in, [](std::span<const cplx> v) { return 2.0 * v[0] * v[1]; });
    j_ = cumexp(2.0 * a, f);
  } else {
    const SegmentedSignal xi2 = sample(layout, input.xi2);
    const SegmentedSignal psi2 = cumexp(a, xi2);
    const SegmentedSignal* in2[] = {&xi2, &psi2};
    nu2_ = combine(in2, nu_of);
    const SegmentedSignal* f_in[] = {&xi1, &psi1, &xi2, &psi2};
    const SegmentedSignal f = combine(
        f_in, [](std::span<const cplx> v) { return v[0] * v[3] + v[2] * v[1]; });
    j_ = cumexp(2.0 * a, f);
  }
}

cplx OneChannelModel::zeta(double p1, double p2) const {
  const double k2 = params_.kappa * params_.kappa;
  if (p1 < p2) return {};
  if (p1 == p2) return -k2 * j_(p2);
  return -2.0 * k2 * std::exp(-params_.decay() * (p1 - p2)) * j_(p2);
}

cplx OneChannelModel::eta(double p1, double p2) const {
  const double hi = std::max(p1, p2), lo = std::min(p1, p2);
  return nu1_(hi) * nu2_(lo) + nu1_(lo) * nu2_(hi) + zeta(hi, lo) + zeta(lo, hi);
}

double OneChannelModel::norm(double lo, double hi, double tol) const {
  // 2 \int dp2 \int_{p2}^{hi} |eta|^2 dp1, split at the jump lines.
  auto inner = [&](double p2) {
    auto f = [&](double p1) { return cplx(std::norm(eta(p1, p2))); };
    return adaptive_quad_detail(f, split_points(p2, hi, jumps_), tol).value;
  };
  if (!(hi > lo)) return 0.0;
  return 2.0 * adaptive_quad_detail(inner, split_points(lo, hi, jumps_), tol).value.real();
}

cplx zeta(const EmitterParams& params, const TwoPhotonInput& input, double p1, double p2,
          ToleranceProfile profile) {
  if (p1 < p2) return {};
  const OneChannelModel model(params, input, std::min(p1, p2), std::max(p1, p2), profile);
  return model.zeta(p1, p2);
}

TwoPhotonAmplitude eta_time(const EmitterParams& params, const TwoPhotonInput& input,
                            const Grid2D& grid, const ConvolveOptions& options) {
  params.validate();
  grid.validate();
  const PulseSpec* pulses[] = {&input.xi1, &input.xi2};
  if (options.require_tail) {
    require_tail(pulses, grid.axis1.stop(), params.kappa, 4.0);
    require_tail(pulses, grid.axis2.stop(), params.kappa, 4.0);
  }
  const double lo = std::min(grid.axis1.start, grid.axis2.start);
  const double hi = std::max(grid.axis1.stop(), grid.axis2.stop());
  const OneChannelModel model(params, input, lo, hi, options.profile);

  struct Node {
    double t;
    cplx nu1, nu2, j;
  };
  auto tabulate = [&model](const Grid1D& g) {
    std::vector<Node> out(g.count);
    for (std::size_t k = 0; k < g.count; ++k) {
      const double t = g.at(k);
      out[k] = {t, model.nu1(t), model.nu2(t), model.correlation(t)};
    }
    return out;
  };
  const auto n1 = tabulate(grid.axis1);
  const auto n2 = tabulate(grid.axis2);
  const cplx a = params.decay();
  const double k2 = params.kappa * params.kappa;
  // Both orderings go through the same expression so symmetry is exact.
  auto value = [&](const Node& hi_n, const Node& lo_n) {
    const cplx linear = hi_n.nu1 * lo_n.nu2 + lo_n.nu1 * hi_n.nu2;
    if (hi_n.t == lo_n.t) return linear - 2.0 * k2 * lo_n.j;
    return linear - 2.0 * k2 * std::exp(-a * (hi_n.t - lo_n.t)) * lo_n.j;
  };

  TwoPhotonAmplitude out;
  out.grid = grid;
  out.values = ComplexMatrix(grid.axis1.count, grid.axis2.count);
  out.domain = Domain::time;
  out.n2 = input.n2;
  out.jumps = input.breakpoints();
  out.diagonal_kink = true;
  for (std::size_t i = 0; i < n1.size(); ++i) {
    for (std::size_t k = 0; k < n2.size(); ++k) {
      out.values(i, k) = n1[i].t >= n2[k].t ? value(n1[i], n2[k]) : value(n2[k], n1[i]);
    }
  }
  return out;
}

cplx mixing_kernel(const EmitterParams& params, double w1, double w2, double mu1, double mu2) {
  return (transfer_scalar(params, w1) - 1.0) * (transfer_scalar(params, w2) - 1.0) *
         (transfer_scalar(params, mu1) + transfer_scalar(params, mu2) - 2.0);
}

double mixing_cutoff(double kappa, const TwoPhotonInput& input) {
  return 50.0 * std::max({kappa, input.xi1.rate(), input.xi2.rate()});
}

TwoPhotonAmplitude eta_freq(const EmitterParams& params, const TwoPhotonInput& input,
                            const Grid2D& grid, ToleranceProfile profile) {
  params.validate();
  grid.validate();
  const double tol = tolerances(profile).quad_tol;
  const double cutoff = mixing_cutoff(std::max(params.kappa, std::abs(params.omega_d)), input);
  const double pref = 1.0 / (std::numbers::pi * params.kappa);
  const PulseSpec& f1 = input.xi1;
  const PulseSpec& f2 = input.xi2;

  // \int f1[mu] f2[W - mu] (G[i mu] + G[i (W - mu)] - 2) dmu
  auto mixing = [&](double total) {
    auto integrand = [&](double mu) {
      const double mu2 = total - mu;
      return f1.spectrum(mu) * f2.spectrum(mu2) *
             (transfer_scalar(params, mu) + transfer_scalar(params, mu2) - 2.0);
    };
    const double c = 0.5 * total;
    const double marks[] = {0.0, total, -params.omega_d, total + params.omega_d};
    return adaptive_quad_detail(integrand, split_points(c - cutoff, c + cutoff, marks), tol).value;
  };
  auto linear = [&](double w1, double w2) {
    return transfer_scalar(params, w1) * transfer_scalar(params, w2) *
           (f1.spectrum(w2) * f2.spectrum(w1) + f1.spectrum(w1) * f2.spectrum(w2));
  };
  auto scale = [&](double w1, double w2) {
    return pref * (transfer_scalar(params, w1) - 1.0) * (transfer_scalar(params, w2) - 1.0);
  };

  TwoPhotonAmplitude out;
  out.grid = grid;
  out.values = ComplexMatrix(grid.axis1.count, grid.axis2.count);
  out.domain = Domain::frequency;
  out.n2 = input.n2;
  if (grid.square()) {
    // The mixing integral depends on w1 + w2 only, i.e. on the index sum.
    const Grid1D& g = grid.axis1;
    std::vector<cplx> cache(2 * g.count - 1);
    for (std::size_t n = 0; n < cache.size(); ++n) {
      cache[n] = mixing(2.0 * g.start + static_cast<double>(n) * g.step);
    }
    for (std::size_t i = 0; i < g.count; ++i) {
      for (std::size_t k = i; k < g.count; ++k) {
        const double w1 = g.at(i), w2 = g.at(k);
        out.values(i, k) = linear(w1, w2) + scale(w1, w2) * cache[i + k];
        out.values(k, i) = out.values(i, k);
      }
    }
  } else {
    for (std::size_t i = 0; i < grid.axis1.count; ++i) {
      for (std::size_t k = 0; k < grid.axis2.count; ++k) {
        const double w1 = grid.axis1.at(i), w2 = grid.axis2.at(k);
        out.values(i, k) = linear(w1, w2) + scale(w1, w2) * mixing(w1 + w2);
      }
    }
  }
  return out;
}

cplx brute_force_eta(const EmitterParams& params, const TwoPhotonInput& input, double p1,
                     double p2, double tol) {
  params.validate();
  const cplx a = params.decay();
  const cplx ab = std::conj(a);
  const double kappa = params.kappa;
  const double k2 = kappa * kappa;
  const PulseSpec& xi1 = input.xi1;
  const PulseSpec& xi2 = input.xi2;
  const double start = std::min(xi1.window(1e-30).lo, xi2.window(1e-30).lo);
  const std::vector<double> breaks = input.breakpoints();

  auto integrate = [&](auto&& f, double lo, double hi) -> cplx {
    if (!(hi > lo)) return {};
    return adaptive_quad_detail(f, split_points(lo, hi, breaks), tol).value;
  };
  // Psi(t) = \int e^{-a (t - r)} xi(r) dr up to t.
  auto psi = [&](const PulseSpec& xi, double t) {
    return integrate([&](double r) { return std::exp(-a * (t - r)) * xi(r); }, start, t);
  };
  auto source = [&](double t) { return xi1(t) * psi(xi2, t) + xi2(t) * psi(xi1, t); };

  auto gamma = [&](double q1, double q2) {
    const cplx s11 = psi(xi1, q1), s12 = psi(xi1, q2), s21 = psi(xi2, q1), s22 = psi(xi2, q2);
    cplx g = xi1(q1) * xi2(q2) + xi1(q2) * xi2(q1);
    g += -kappa * (xi1(q1) * s22 + xi2(q1) * s12);
    g += -kappa * (xi1(q2) * s21 + xi2(q2) * s11);
    g += k2 * (s21 * s12 + s11 * s22);
    if (q1 <= q2) {
      g += 2.0 * k2 * integrate([&](double t) {
        return std::exp(-a * (q2 - t)) * std::exp(-ab * (t - q1)) * source(t);
      }, q1, q2);
    }
    // The emitter-mediated term: the innermost time integral is done in closed
    // form, leaving e^{-a (q1 - r)} below q1 and e^{-conj(a) (r - q1)} above.
    g += -2.0 * k2 * integrate([&](double r) {
      return std::exp(-a * (q2 - r)) * std::exp(-a * (q1 - r)) * source(r);
    }, start, std::min(q1, q2));
    if (q2 > q1) {
      g += -2.0 * k2 * integrate([&](double r) {
        return std::exp(-a * (q2 - r)) * std::exp(-ab * (r - q1)) * source(r);
      }, q1, q2);
    }
    return g;
  };
  return 0.5 * (gamma(p1, p2) + gamma(p2, p1));
}

RealMatrix time_density(const TwoPhotonAmplitude& field, DensityScale scale) {
  if (field.domain != Domain::time) {
    throw std::invalid_argument("time_density: field is not in the time domain");
  }
  double factor = 0.0;
  if (scale == DensityScale::paper_fock) {
    if (std::abs(field.n2 - 2.0) > 1e-9) {
      throw ScaleMismatch("paper_fock density needs a Fock input (n2 = 2)");
    }
    factor = 1.0 / 8.0;
  } else {
    factor = 1.0 / (2.0 * field.n2);
  }
  RealMatrix out(field.values.rows(), field.values.cols());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = factor * std::norm(field.values(i, j));
  }
  return out;
}

std::vector<std::size_t> diagonal_peaks(const TwoPhotonAmplitude& field, double relative_floor) {
  if (!field.grid.square()) throw std::invalid_argument("diagonal_peaks: grid is not square");
  const std::size_t n = field.values.rows();
  std::vector<double> d(n);
  double peak = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    d[k] = std::norm(field.values(k, k));
    peak = std::max(peak, d[k]);
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (d[k] > d[k - 1] && d[k] >= d[k + 1] && d[k] >= relative_floor * peak) out.push_back(k);
  }
  return out;
}

}  // namespace tls2p
