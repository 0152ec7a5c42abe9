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


#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <random>
#include <utility>

#include "tls2p/fourier2d.hpp"
#include "tls2p/lti.hpp"
#include "tls2p/one_channel.hpp"
#include "tls2p/two_channel.hpp"

namespace tls2p::checks {
namespace {

std::string printf_string(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Appends `text` to `detail` with a separator.
void note(std::string& detail, const std::string& text) {
  if (!detail.empty()) detail += "; ";
  detail += text;
}

Grid2D square(const Grid1D& g) { return {g, g}; }

// Trapezoid of |xi|^2 - |nu|^2 over the samples.
double absorbed(const PulseSpec& xi, const std::vector<cplx>& nu, const Grid1D& g) {
  double s = 0.0;
  for (std::size_t k = 0; k < g.count; ++k) {
    const double w = (k == 0 || k + 1 == g.count) ? 0.5 : 1.0;
    s += w * (std::norm(xi(g.at(k))) - std::norm(nu[k]));
  }
  return s * g.step;
}

Result single_photon_benchmark() {
  Result r{1, "single_photon_absorption", false, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const EmitterParams p{1.0, 0.0};
  const PulseSpec xi = PulseSpec::gaussian(1.46, 3.0);
  // The integral stops at t = 4, mid-pulse, so no decay tail is needed.
  const Grid1D g = Grid1D::spanning(-10.0, 4.0, 14001);
  ConvolveOptions opts;
  opts.require_tail = false;
  const double e = absorbed(xi, convolve_scalar(p, xi, g, opts), g);
  r.seconds = seconds_since(t0);
  r.pass = std::abs(e - 0.8) <= 0.01 && r.seconds < 1.0;
  r.detail = printf_string("absorbed by t=4: %.6f (0.8 +- 0.01), %.3f s (< 1 s)", e, r.seconds);
  return r;
}

Result perfect_absorption() {
  Result r{2, "perfect_absorption", false, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const EmitterParams p{1.0, 0.0};
  const Grid1D g = Grid1D::spanning(-20.0, 12.0, 3201);
  const auto nu = convolve_scalar(p, PulseSpec::rising_exp(1.0), g);
  double before = 0.0, after = 0.0;
  for (std::size_t k = 0; k < g.count; ++k) {
    const double t = g.at(k);
    if (t <= 0.0) {
      before = std::max(before, std::abs(nu[k]));
    } else {
      after = std::max(after, std::abs(nu[k] - std::exp(-0.5 * t)));
    }
  }
  r.seconds = seconds_since(t0);
  r.pass = before <= 1e-6 && after <= 1e-6 && r.seconds < 1.0;
  r.detail = printf_string("max|nu| t<=0: %.2e, max|nu - e^{-t/2}| t>0: %.2e (<= 1e-6), %.3f s",
                           before, after, r.seconds);
  return r;
}

struct FockCase {
  PulseSpec xi;
  double kappa;
  const char* label;
};

std::vector<FockCase> figure_cases() {
  return {{PulseSpec::gaussian(1.46), 1.0, "gauss 1.46"},
          {PulseSpec::gaussian(2.92), 1.0, "gauss 2.92"},
          {PulseSpec::gaussian(4.38), 1.0, "gauss 4.38"},
          {PulseSpec::rising_exp(0.1), 0.1, "exp k=0.1"},
          {PulseSpec::rising_exp(0.1), 0.5, "exp k=0.5"},
          {PulseSpec::rising_exp(0.1), 10.0, "exp k=10"}};
}

Result unitarity_one_channel() {
  Result r{3, "unitarity_one_channel", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& c : figure_cases()) {
    const EmitterParams p{c.kappa, 0.0};
    const auto input = TwoPhotonInput::fock(c.xi);
    const Grid1D g = aligned_axis(scattering_window(input, c.kappa), 512, input.breakpoints());
    const auto field = eta_time(p, input, square(g));
    const double grid_rel = integrate_abs2(field) / (2.0 * input.n2) - 1.0;
    const OneChannelModel model(p, input, g.start, g.stop());
    const double cub_rel = model.norm(g.start, g.stop()) / (2.0 * input.n2) - 1.0;
    const bool ok = std::abs(grid_rel) <= 1e-3 && std::abs(cub_rel) <= 1e-3;
    r.pass = r.pass && ok;
    note(r.detail, printf_string("%s: grid %.1e, cubature %.1e", c.label, grid_rel, cub_rel));
  }
  r.seconds = seconds_since(t0);
  r.pass = r.pass && r.seconds < 30.0;
  note(r.detail, printf_string("%.1f s (< 30 s)", r.seconds));
  return r;
}

Result oracle_one_channel() {
  Result r{4, "one_channel_oracle_equivalence", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  struct Case {
    EmitterParams p;
    TwoPhotonInput input;
  };
  const std::vector<Case> cases = {
      {{1.0, 0.0}, TwoPhotonInput::fock(PulseSpec::gaussian(1.46))},
      {{0.5, 0.0}, TwoPhotonInput::fock(PulseSpec::rising_exp(0.1))},
      {{1.0, 0.3}, TwoPhotonInput::make(PulseSpec::gaussian(1.46), PulseSpec::gaussian(1.2, 0.7))},
  };
  std::mt19937_64 rng(20260417);
  std::size_t points = 0;
  double worst = 0.0;
  for (const auto& c : cases) {
    const Interval w = scattering_window(c.input, c.p.kappa);
    const OneChannelModel model(c.p, c.input, w.lo, w.hi);
    // Sample where the pulses live so the relative error is meaningful.
    const Interval core = {std::min(c.input.xi1.window(1e-3).lo, c.input.xi2.window(1e-3).lo),
                           std::max(c.input.xi1.window(1e-3).hi, c.input.xi2.window(1e-3).hi) +
                               2.0 / c.p.kappa};
    std::uniform_real_distribution<double> u(core.lo, core.hi);
    for (int k = 0; k < 25; ++k) {
      const double p1 = u(rng), p2 = u(rng);
      const cplx ref = brute_force_eta(c.p, c.input, p1, p2);
      const cplx got = model.eta(p1, p2);
      worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
      ++points;
    }
  }
  r.seconds = seconds_since(t0);
  r.pass = worst <= 1e-6 && points >= 25 && r.seconds < 120.0;
  r.detail = printf_string("%zu points, max relative error %.2e (<= 1e-6), %.1f s", points, worst,
                           r.seconds);
  return r;
}

double relative_l2(const ComplexMatrix& a, const ComplexMatrix& ref) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < ref.values().size(); ++k) {
    num += std::norm(a.values()[k] - ref.values()[k]);
    den += std::norm(ref.values()[k]);
  }
  return std::sqrt(num / den);
}

Result fourier_consistency() {
  Result r{5, "fourier_consistency", false, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const EmitterParams p{0.5, 0.0};
  const auto input = TwoPhotonInput::fock(PulseSpec::rising_exp(0.1));
  // A deeper window than the default: the transform sees truncation directly.
  const Interval w = scattering_window(input, p.kappa, 1e-5, 12.0);
  const Grid1D g = aligned_axis(w, 256, input.breakpoints());
  const auto spectrum = fourier2d(eta_time(p, input, square(g)));
  const auto direct = eta_freq(p, input, spectrum.field.grid);
  const double err = relative_l2(spectrum.field.values, direct.values);
  r.seconds = seconds_since(t0);
  r.pass = err <= 1e-2 && r.seconds < 60.0;
  r.detail = printf_string("relative L2 %.2e (<= 1e-2) at 256^2, %.1f s", err, r.seconds);
  return r;
}

Result diagonal_peak_count() {
  Result r{6, "diagonal_peak_count", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<double, std::size_t> cases[] = {{1.46, 1}, {2.92, 2}};
  for (const auto& [omega, expected] : cases) {
    const auto input = TwoPhotonInput::fock(PulseSpec::gaussian(omega));
    const Grid1D g = aligned_axis(scattering_window(input, 1.0), 256, input.breakpoints());
    const auto field = eta_time({1.0, 0.0}, input, square(g));
    const std::size_t found = diagonal_peaks(field).size();
    r.pass = r.pass && found == expected;
    note(r.detail, printf_string("omega %.2f: %zu peaks (expected %zu)", omega, found, expected));
  }
  r.seconds = seconds_since(t0);
  return r;
}

Result anti_correlation() {
  Result r{7, "joint_spectrum_maxima", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const auto input = TwoPhotonInput::fock(PulseSpec::rising_exp(0.1));
  const Grid1D g = Grid1D::spanning(-1.0, 1.0, 129);
  const double h = g.step;
  for (double kappa : {0.5, 0.1, 10.0}) {
    const auto e = eta_freq({kappa, 0.0}, input, square(g));
    double top = 0.0;
    for (const auto& v : e.values.values()) top = std::max(top, std::norm(v));
    bool ok = true;
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.count; ++i) {
      for (std::size_t j = 0; j < g.count; ++j) {
        if (std::norm(e.values(i, j)) < top * (1.0 - 1e-9)) continue;
        ++count;
        const double w1 = g.at(i), w2 = g.at(j);
        const bool near_origin = std::abs(w1) <= h * (1 + 1e-9) && std::abs(w2) <= h * (1 + 1e-9);
        if (kappa == 0.5) {
          ok = ok && !near_origin && std::abs(w1 + w2) <= h * (1 + 1e-9);
        } else {
          ok = ok && near_origin;
        }
      }
    }
    r.pass = r.pass && ok;
    note(r.detail, printf_string("kappa %g: %zu maxima %s", kappa, count,
                                 ok ? (kappa == 0.5 ? "off-origin on w1+w2=0" : "at origin")
                                    : "misplaced"));
  }
  r.seconds = seconds_since(t0);
  return r;
}

Result two_channel_conservation() {
  Result r{8, "two_channel_conservation", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const auto input = TwoPhotonInput::fock(PulseSpec::rising_exp(0.1));
  for (double kappa : {0.01, 0.1, 0.5}) {
    const TwoChannelParams p{kappa, kappa};
    const Grid1D g =
        aligned_axis(scattering_window(input, 2.0 * p.decay()), 512, input.breakpoints());
    const auto probs = channel_probabilities(eta_ij_time(p, input, square(g)));
    const double dev = probs.total() - 1.0;
    r.pass = r.pass && std::abs(dev) <= 1e-3;
    note(r.detail, printf_string("kappa %g: sum - 1 = %.1e", kappa, dev));
  }
  r.seconds = seconds_since(t0);
  return r;
}

Result vanishing_quadrant() {
  Result r{9, "vanishing_cross_quadrant", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const auto input = TwoPhotonInput::fock(PulseSpec::rising_exp(0.1));
  for (double kappa : {0.01, 0.1, 0.5}) {
    const TwoChannelParams p{kappa, kappa};
    const Grid1D g =
        aligned_axis(scattering_window(input, 2.0 * p.decay()), 256, input.breakpoints());
    for (auto path : {TwoChannelPath::equal_coupling, TwoChannelPath::general}) {
      const auto f = eta_ij_time(p, input, square(g), path);
      double worst = 0.0;
      for (std::size_t i = 0; i < g.count; ++i) {
        for (std::size_t j = 0; j < g.count; ++j) {
          if (g.at(i) > 0.0 && g.at(j) > 0.0) {
            worst = std::max(worst, std::abs(0.5 * (f.eta12(i, j) + f.eta12(j, i))));
          }
        }
      }
      r.pass = r.pass && worst <= 1e-8;
      note(r.detail, printf_string("kappa %g %s: %.1e", kappa,
                                   path == TwoChannelPath::general ? "general" : "equal", worst));
    }
  }
  r.seconds = seconds_since(t0);
  return r;
}

Result hom_structure() {
  Result r{10, "hom_structure", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const double gamma = 0.1;
  const auto input = TwoPhotonInput::fock(PulseSpec::rising_exp(gamma));
  const Grid1D g = Grid1D::spanning(-1.0, 1.0, 129);
  const std::size_t n = g.count, mid = n / 2;

  // kappa = 0.1: bunching along the whole anti-diagonal.
  {
    const auto h = hom_difference(T_ij_freq({0.1, 0.1}, input, square(g)));
    double low = h(0, n - 1);
    for (std::size_t i = 0; i < n; ++i) low = std::min(low, h(i, n - 1 - i));
    r.pass = r.pass && low > 0.0;
    note(r.detail, printf_string("kappa 0.1: min on w1+w2=0 %.2e (> 0)", low));
  }
  // kappa = 0.01: positive at the origin, and the positive anti-diagonal
  // and the significant positive region both stay within a few gamma.
  {
    const auto h = hom_difference(T_ij_freq({0.01, 0.01}, input, square(g)));
    double top = 0.0;
    for (double v : h.values()) top = std::max(top, v);
    double anti = 0.0, significant = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double radius = std::hypot(g.at(i), g.at(j));
        if (i + j == n - 1 && h(i, j) > 0.0) anti = std::max(anti, radius);
        if (h(i, j) > 1e-2 * top) significant = std::max(significant, radius);
      }
    }
    const bool ok = h(mid, mid) > 0.0 && anti <= 0.5 * gamma && significant <= 5.0 * gamma;
    r.pass = r.pass && ok;
    note(r.detail, printf_string("kappa 0.01: H(0,0) %.2e, positive w1+w2=0 within r=%.3f "
                                 "(<= %.2f), 1%% region within r=%.3f (<= %.2f)",
                                 h(mid, mid), anti, 0.5 * gamma, significant, 5.0 * gamma));
  }
  r.seconds = seconds_since(t0);
  return r;
}

Result oracle_two_channel() {
  Result r{11, "two_channel_oracle_equivalence", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const TwoChannelParams p{1.0, 1.0};
  const auto input = TwoPhotonInput::fock(PulseSpec::rising_exp(1.0));
  const Interval w = scattering_window(input, 2.0 * p.decay());
  const TwoChannelModel model(p, input, w.lo, w.hi);
  const std::pair<double, double> pts[] = {{-1.0, -2.0}, {0.5, -0.5}, {1.5, 0.3},  {-0.3, 0.8},
                                           {2.0, -1.0},  {0.0, -1.2}, {-2.5, -0.4}, {0.7, 0.7},
                                           {1.1, 2.2}};
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& [p1, p2] : pts) {
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        const cplx ref = brute_force_eta_ij(p, input, i, j, p1, p2);
        const cplx got = model.amplitude(i, j, p1, p2, TwoChannelPath::automatic);
        // Cross-channel values vanish for p1, p2 > 0; compare those absolutely.
        const double scale = std::max(std::abs(ref), 1e-3);
        worst = std::max(worst, std::abs(got - ref) / scale);
        ++count;
      }
    }
  }
  note(r.detail, printf_string("%zu oracle values, max relative error %.2e (<= 1e-5)", count,
                               worst));
  r.pass = worst <= 1e-5;

  // Fast versus general path on a grid.
  const Grid1D g = aligned_axis(w, 128, input.breakpoints());
  const auto fast = eta_ij_time(p, input, square(g), TwoChannelPath::equal_coupling);
  const auto general = eta_ij_time(p, input, square(g), TwoChannelPath::general);
  double diff = 0.0;
  for (std::size_t k = 0; k < fast.eta11.values().size(); ++k) {
    diff = std::max({diff, std::abs(fast.eta11.values()[k] - general.eta11.values()[k]),
                     std::abs(fast.eta12.values()[k] - general.eta12.values()[k]),
                     std::abs(fast.eta22.values()[k] - general.eta22.values()[k])});
  }
  r.pass = r.pass && diff <= 1e-10;
  note(r.detail, printf_string("fast vs general path %.1e (<= 1e-10)", diff));
  r.seconds = seconds_since(t0);
  return r;
}

Result exchange_symmetry() {
  Result r{12, "t_exchange_symmetry", true, {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  const Grid1D g = Grid1D::spanning(-1.0, 1.0, 64);
  struct Case {
    TwoChannelParams p;
    TwoPhotonInput input;
    bool cross;  // T12 is symmetric only for equal coupling and identical pulses
    const char* label;
  };
  const std::vector<Case> cases = {
      {{0.1, 0.1}, TwoPhotonInput::fock(PulseSpec::rising_exp(0.1)), true, "exp k=0.1"},
      {{0.5, 0.5}, TwoPhotonInput::fock(PulseSpec::gaussian(0.3)), true, "gauss k=0.5"},
      {{0.1, 0.3}, TwoPhotonInput::fock(PulseSpec::rising_exp(0.1)), false, "exp k=0.1/0.3"},
      {{0.1, 0.3},
       TwoPhotonInput::make(PulseSpec::rising_exp(0.1), PulseSpec::gaussian(0.2, 3.0)),
       false, "mixed k=0.1/0.3"},
  };
  for (const auto& c : cases) {
    const auto t = T_ij_freq(c.p, c.input, square(g));
    double worst = std::max(max_asymmetry(t.eta11), max_asymmetry(t.eta22));
    if (c.cross) worst = std::max(worst, max_asymmetry(t.eta12));
    r.pass = r.pass && worst <= 1e-6;
    note(r.detail, printf_string("%s: %.1e", c.label, worst));
  }
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace

const std::vector<Check>& all() {
  static const std::vector<Check> checks = {
      {1, "single_photon_absorption", single_photon_benchmark},
      {2, "perfect_absorption", perfect_absorption},
      {3, "unitarity_one_channel", unitarity_one_channel},
      {4, "one_channel_oracle_equivalence", oracle_one_channel},
      {5, "fourier_consistency", fourier_consistency},
      {6, "diagonal_peak_count", diagonal_peak_count},
      {7, "joint_spectrum_maxima", anti_correlation},
      {8, "two_channel_conservation", two_channel_conservation},
      {9, "vanishing_cross_quadrant", vanishing_quadrant},
      {10, "hom_structure", hom_structure},
      {11, "two_channel_oracle_equivalence", oracle_two_channel},
      {12, "t_exchange_symmetry", exchange_symmetry},
  };
  return checks;
}

std::vector<Result> run_all(const std::function<void(const Result&)>& on_result) {
  std::vector<Result> out;
  for (const auto& c : all()) {
    Result r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {c.id, c.name, false, std::string("exception: ") + e.what(), seconds_since(t0)};
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format(const Result& r) {
  return printf_string("[%s] %2d %s: %s", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                       r.detail.c_str());
}

}  // namespace tls2p::checks
