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

#include "tls2p/two_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tls2p/error.hpp"
#include "tls2p/one_channel.hpp"
#include "tls2p/quadrature.hpp"

namespace tls2p {
namespace {

void check_channel(int c) {
  if (c != 1 && c != 2) throw std::invalid_argument("channel index must be 1 or 2");
}


const PulseSpec& pulse_of(const TwoPhotonInput& input, int p) {
  return p == 1 ? input.xi1 : input.xi2;
}

}  // namespace

TwoChannelModel::TwoChannelModel(const TwoChannelParams& params, const TwoPhotonInput& input,
                                 double lo, double hi, ToleranceProfile profile)
    : params_(params),
      input_(input),
      equal_(params.equal_coupling() && input.identical()) {
  params.validate();
  const PulseSpec* pulses[] = {&input_.xi1, &input_.xi2};
  const double k = params.decay();
  const Layout layout = fine_layout(pulses, 2.0 * k, lo, hi, profile);
  const SegmentedSignal xi1 = sample(layout, input_.xi1);
  phi_[0] = cumexp(k, xi1);
  const double s = std::sqrt(params.kappa1 * params.kappa2);
  if (input.identical()) {
    phi_[1] = phi_[0];
    const SegmentedSignal* in[] = {&xi1, &phi_[0]};
    bound_ = cumexp(2.0 * k, combine(in, [s](std::span<const cplx> v) {
                      return -2.0 * s * v[0] * v[1];
                    }));
  } else {
    const SegmentedSignal xi2 = sample(layout, input_.xi2);
    phi_[1] = cumexp(k, xi2);
    const SegmentedSignal* in[] = {&xi1, &phi_[0], &xi2, &phi_[1]};
    bound_ = cumexp(2.0 * k, combine(in, [s](std::span<const cplx> v) {
                      return -s * (v[0] * v[3] + v[2] * v[1]);
                    }));
  }
  if (equal_) {
    const double kappa = params.kappa1;
    const SegmentedSignal* in[] = {&xi1, &phi_[0]};
    bound_equal_ = cumexp(2.0 * kappa, combine(in, [kappa](std::span<const cplx> v) {
                            return -kappa * v[0] * v[1];
                          }));
  }
}

cplx TwoChannelModel::response(int m, int n, int p, double t) const {
  check_channel(m);
  check_channel(n);
  check_channel(p);
  const cplx smooth = std::sqrt(params_.kappa(m) * params_.kappa(n)) * phi_[p - 1](t);
  return m == n ? pulse_of(input_, p)(t) - smooth : -smooth;
}

cplx TwoChannelModel::ordered(int i, int j, double p1, double p2) const {
  check_channel(i);
  check_channel(j);
  if (p1 < p2) return {};
  const cplx linear = response(i, 1, 1, p1) * response(j, 2, 2, p2) +
                      response(i, 2, 2, p1) * response(j, 1, 1, p2);
  const double c = std::sqrt(params_.kappa(i) * params_.kappa(j));
  return linear + 2.0 * c * std::exp(-params_.decay() * (p1 - p2)) * bound_(p2);
}

cplx TwoChannelModel::chi(double p1, double p2) const {
  if (!equal_) {
    throw std::invalid_argument("chi needs equal coupling and identical pulses");
  }
  if (p1 < p2) return {};
  const double kappa = params_.kappa1;
  return 4.0 * kappa * std::exp(-kappa * (p1 - p2)) * bound_equal_(p2);
}

cplx TwoChannelModel::ordered_equal(int i, int j, double p1, double p2) const {
  check_channel(i);
  check_channel(j);
  if (!equal_) {
    throw std::invalid_argument("equal-coupling path needs kappa1 == kappa2 and identical pulses");
  }
  if (p1 < p2) return {};
  const cplx b1 = response(1, 1, 1, p1), b2 = response(1, 1, 1, p2);
  const cplx a1 = response(1, 2, 1, p1), a2 = response(1, 2, 1, p2);
  if (i == j) return b1 * a2 + b2 * a1 + chi(p1, p2);
  return b1 * b2 + a2 * a1 + chi(p1, p2);
}

cplx TwoChannelModel::amplitude(int i, int j, double p1, double p2, TwoChannelPath path) const {
  const bool fast = path == TwoChannelPath::equal_coupling ||
                    (path == TwoChannelPath::automatic && equal_);
  if (p1 >= p2) return fast ? ordered_equal(i, j, p1, p2) : ordered(i, j, p1, p2);
  return fast ? ordered_equal(j, i, p2, p1) : ordered(j, i, p2, p1);
}

ChannelResolvedAmplitude eta_ij_time(const TwoChannelParams& params, const TwoPhotonInput& input,
                                     const Grid2D& grid, TwoChannelPath path,
                                     const ConvolveOptions& options) {
  params.validate();
  grid.validate();
  const PulseSpec* pulses[] = {&input.xi1, &input.xi2};
  if (options.require_tail) {
    require_tail(pulses, grid.axis1.stop(), 2.0 * params.decay(), 4.0);
    require_tail(pulses, grid.axis2.stop(), 2.0 * params.decay(), 4.0);
  }
  const double lo = std::min(grid.axis1.start, grid.axis2.start);
  const double hi = std::max(grid.axis1.stop(), grid.axis2.stop());
  const TwoChannelModel model(params, input, lo, hi, options.profile);
  if (path == TwoChannelPath::equal_coupling && !model.equal_case()) {
    throw std::invalid_argument("equal-coupling path needs kappa1 == kappa2 and identical pulses");
  }
  const bool fast = path == TwoChannelPath::equal_coupling ||
                    (path == TwoChannelPath::automatic && model.equal_case());

  ChannelResolvedAmplitude out;
  out.grid = grid;
  out.domain = Domain::time;
  out.jumps = input.breakpoints();
  out.eta11 = ComplexMatrix(grid.axis1.count, grid.axis2.count);
  out.eta12 = ComplexMatrix(grid.axis1.count, grid.axis2.count);
  out.eta22 = ComplexMatrix(grid.axis1.count, grid.axis2.count);
  for (std::size_t a = 0; a < grid.axis1.count; ++a) {
    const double p1 = grid.axis1.at(a);
    for (std::size_t b = 0; b < grid.axis2.count; ++b) {
      const double p2 = grid.axis2.at(b);
      out.eta11(a, b) = model.amplitude(1, 1, p1, p2, path);
      out.eta12(a, b) = model.amplitude(1, 2, p1, p2, path);
      if (fast) {
        out.eta22(a, b) = out.eta11(a, b);
      } else {
        out.eta22(a, b) = model.amplitude(2, 2, p1, p2, path);
      }
    }
  }
  return out;
}

cplx chi(const TwoChannelParams& params, const PulseSpec& xi, double p1, double p2,
         ToleranceProfile profile) {
  if (!params.equal_coupling()) throw std::invalid_argument("chi needs kappa1 == kappa2");
  if (p1 < p2) return {};
  const TwoChannelModel model(params, TwoPhotonInput::fock(xi), p2, p1, profile);
  return model.chi(p1, p2);
}

ChannelResolvedAmplitude T_ij_freq(const TwoChannelParams& params, const TwoPhotonInput& input,
                                   const Grid2D& grid, ToleranceProfile profile) {
  params.validate();
  grid.validate();
  const double tol = tolerances(profile).quad_tol;
  const double k1 = params.kappa1, k2 = params.kappa2;
  const double s = std::sqrt(k1 * k2);
  const double pi = std::numbers::pi;
  const double pref11 = s / (pi * k1 * k1);
  const double pref12 = k2 / (pi * k1 * k1);
  const double pref22 = k2 * s / (pi * k1 * k1 * k1);
  const double cutoff = mixing_cutoff(std::max(k1, k2), input);
  const PulseSpec& f1 = input.xi1;
  const PulseSpec& f2 = input.xi2;

  // \int f1[mu] f2[W - mu] (G11[i mu] + G11[i (W - mu)] - 2) dmu
  auto mixing = [&](double total) {
    auto integrand = [&](double mu) {
      const double mu2 = total - mu;
      return f1.spectrum(mu) * f2.spectrum(mu2) *
             (transfer_matrix(params, mu)[0][0] + transfer_matrix(params, mu2)[0][0] - 2.0);
    };
    const double c = 0.5 * total;
    const double marks[] = {0.0, total};
    return adaptive_quad_detail(integrand, split_points(c - cutoff, c + cutoff, marks), tol).value;
  };
  const bool square = grid.square();
  std::vector<cplx> cache;
  if (square) {
    const Grid1D& g = grid.axis1;
    cache.resize(2 * g.count - 1);
    for (std::size_t n = 0; n < cache.size(); ++n) {
      cache[n] = mixing(2.0 * g.start + static_cast<double>(n) * g.step);
    }
  }

  ChannelResolvedAmplitude out;
  out.grid = grid;
  out.domain = Domain::frequency;
  out.eta11 = ComplexMatrix(grid.axis1.count, grid.axis2.count);
  out.eta12 = ComplexMatrix(grid.axis1.count, grid.axis2.count);
  out.eta22 = ComplexMatrix(grid.axis1.count, grid.axis2.count);
  for (std::size_t a = 0; a < grid.axis1.count; ++a) {
    const double w1 = grid.axis1.at(a);
    const Matrix2 g1 = transfer_matrix(params, w1);
    const cplx x1w1 = f1.spectrum(w1), x2w1 = f2.spectrum(w1);
    for (std::size_t b = 0; b < grid.axis2.count; ++b) {
      const double w2 = grid.axis2.at(b);
      const Matrix2 g2 = transfer_matrix(params, w2);
      const cplx x1w2 = f1.spectrum(w2), x2w2 = f2.spectrum(w2);
      const cplx kernel = (g1[0][0] - 1.0) * (g2[0][0] - 1.0) *
                          (square ? cache[a + b] : mixing(w1 + w2));
      out.eta11(a, b) = g1[0][0] * g2[0][1] * x1w1 * x2w2 + g2[0][0] * g1[0][1] * x1w2 * x2w1 +
                        pref11 * kernel;
      out.eta12(a, b) = g1[0][0] * g2[1][1] * x1w1 * x2w2 + g1[0][1] * g2[0][1] * x1w2 * x2w1 +
                        pref12 * kernel;
      out.eta22(a, b) = g1[0][1] * g2[1][1] * x1w1 * x2w2 + g2[0][1] * g1[1][1] * x1w2 * x2w1 +
                        pref22 * kernel;
    }
  }
  return out;
}

ChannelProbabilities channel_probabilities(const ChannelResolvedAmplitude& field) {
  // Time-domain fields break along p1 = p2 as well as on the jump lines.
  const bool kink = field.domain == Domain::time;
  auto norm = [&](const ComplexMatrix& m) {
    return integrate_abs2(field.grid, m, field.jumps, kink);
  };
  return {0.5 * norm(field.eta11), norm(field.eta12), 0.5 * norm(field.eta22)};
}

RealMatrix hom_difference(const ChannelResolvedAmplitude& field) {
  if (field.domain != Domain::frequency) {
    throw std::invalid_argument("hom_difference: field is not in the frequency domain");
  }
  RealMatrix out(field.eta11.rows(), field.eta11.cols());
  for (std::size_t a = 0; a < out.rows(); ++a) {
    for (std::size_t b = 0; b < out.cols(); ++b) {
      out(a, b) = 0.5 * (std::norm(field.eta11(a, b)) + std::norm(field.eta22(a, b))) -
                  std::norm(field.eta12(a, b));
    }
  }
  return out;
}

cplx brute_force_eta_ij(const TwoChannelParams& params, const TwoPhotonInput& input, int i,
                        int j, double p1, double p2, double tol) {
  params.validate();
  check_channel(i);
  check_channel(j);
  if (p1 < p2) return brute_force_eta_ij(params, input, j, i, p2, p1, tol);
  const double k = params.decay();
  const double kap[3] = {0.0, params.kappa1, params.kappa2};
  const double s = std::sqrt(params.kappa1 * params.kappa2);
  const double start = std::min(input.xi1.window(1e-30).lo, input.xi2.window(1e-30).lo);
  const std::vector<double> breaks = input.breakpoints();
  auto bar = [](int n) { return 3 - n; };
  auto xi = [&](int n, double t) { return pulse_of(input, n)(t); };
  auto integrate = [&](auto&& f, double lo, double hi, std::vector<double> marks) -> cplx {
    if (!(hi > lo)) return {};
    marks.insert(marks.end(), breaks.begin(), breaks.end());
    return adaptive_quad_detail(f, split_points(lo, hi, marks), tol).value;
  };
  // Phi_n(t) = \int e^{-K (t - r)} xi_n(r) dr up to t.
  auto phi = [&](int n, double t) {
    return integrate([&](double r) { return std::exp(-k * (t - r)) * xi(n, r); }, start, t, {});
  };
  auto decay_step = [k](double t) { return t >= 0.0 ? std::exp(-k * t) : 0.0; };

  const double q1 = p1, q2 = p2;
  const cplx phi_q1[3] = {0.0, phi(1, q1), phi(2, q1)};
  const int ib = bar(i), jb = bar(j);
  auto integrand = [&](double r) {
    const cplx phi_r[3] = {0.0, phi(1, r), phi(2, r)};
    // Correlator with its left time fixed at q1, and its integral against
    // e^{-K (q1 - tau)} over tau done in closed form.
    auto m_fixed = [&](int m, int n) {
      const int nb = bar(n);
      cplx v = 2.0 * std::sqrt(kap[m] * kap[nb]) * decay_step(r - q1) * phi_r[nb];
      if (m == nb) v -= xi(nb, q1);
      return xi(n, r) * v;
    };
    auto m_swept = [&](int m, int n) {
      const int nb = bar(n);
      const double lo = std::min(q1, r);
      cplx v = 2.0 * std::sqrt(kap[m] * kap[nb]) * phi_r[nb] *
               std::exp(-k * (q1 + r) + 2.0 * k * lo) / (2.0 * k);
      if (m == nb) v -= phi_q1[nb];
      return xi(n, r) * v;
    };
    const cplx v = kap[j] * (m_fixed(i, j) - kap[i] * m_swept(i, j)) +
                   s * (m_fixed(i, jb) - kap[i] * m_swept(i, jb)) -
                   kap[j] * s * m_swept(ib, j) - params.kappa1 * params.kappa2 * m_swept(ib, jb);
    return decay_step(q2 - r) * v;
  };
  cplx a = integrate(integrand, start, q2, {q1});
  a -= std::sqrt(kap[i] * kap[jb]) * xi(j, q2) * phi_q1[jb];
  if (i != j) a += xi(i, q1) * xi(j, q2);
  return a;
}

}  // namespace tls2p
