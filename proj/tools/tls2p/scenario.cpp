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


#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "checks.hpp"
#include "tls2p/error.hpp"
#include "tls2p/fourier2d.hpp"
#include "tls2p/lti.hpp"
#include "tls2p/one_channel.hpp"
#include "tls2p/two_channel.hpp"

namespace tls2p::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kUnitarityTolerance = 1e-3;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json describe(const PulseSpec& p) {
  if (const auto* g = std::get_if<Gaussian>(&p.shape())) {
    return {{"type", "gaussian"}, {"omega", g->omega}, {"tau", g->tau}};
  }
  if (const auto* r = std::get_if<RisingExp>(&p.shape())) {
    return {{"type", "rising_exp"}, {"gamma", r->gamma}};
  }
  const auto& s = std::get<Sampled>(p.shape());
  return {{"type", "sampled"}, {"start", s.grid.start}, {"step", s.grid.step},
          {"points", s.grid.count}};
}

json describe(const Grid1D& g) {
  return {{"start", g.start}, {"step", g.step}, {"points", g.count}, {"stop", g.stop()}};
}

json unitarity(double value) {
  return {{"value", value},
          {"target", 1.0},
          {"tolerance", kUnitarityTolerance},
          {"pass", std::abs(value - 1.0) <= kUnitarityTolerance}};
}

TwoPhotonInput input_of(const ScenarioConfig& c) {
  return TwoPhotonInput::make(*c.pulse, c.pulse2 ? *c.pulse2 : *c.pulse);
}

double fastest(const TwoPhotonInput& in, double rate) {
  return std::max({rate, in.xi1.rate(), in.xi2.rate()});
}

Grid1D time_axis(const ScenarioConfig& c, const TwoPhotonInput& in, double rate) {
  if (c.grid.start) return Grid1D::spanning(*c.grid.start, *c.grid.stop, c.grid.points);
  return aligned_axis(scattering_window(in, rate), c.grid.points, in.breakpoints());
}

Grid1D frequency_axis_for(const ScenarioConfig& c, const TwoPhotonInput& in, double rate) {
  if (c.grid.start) return Grid1D::spanning(*c.grid.start, *c.grid.stop, c.grid.points);
  const double w = 8.0 * fastest(in, rate);
  return Grid1D::spanning(-w, w, c.grid.points);
}

void write_text(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << body;
}

void write_grid_csv(const fs::path& path, const Grid2D& g, const char* h1, const char* h2,
                    const std::vector<std::pair<const char*, const ComplexMatrix*>>& blocks) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  const bool tagged = blocks.size() > 1;
  if (tagged) out << "channel_pair,";
  out << h1 << ',' << h2 << ",re,im\n";
  for (const auto& [tag, m] : blocks) {
    for (std::size_t i = 0; i < g.axis1.count; ++i) {
      for (std::size_t j = 0; j < g.axis2.count; ++j) {
        if (tagged) out << tag << ',';
        const cplx v = (*m)(i, j);
        out << num(g.axis1.at(i)) << ',' << num(g.axis2.at(j)) << ',' << num(v.real()) << ','
            << num(v.imag()) << '\n';
      }
    }
  }
}

// gnuplot heatmap of |amplitude|^2 / divisor for each block.
std::string heatmap_script(const char* xlabel, const char* ylabel, double divisor,
                           const std::vector<std::string>& pairs) {
  std::string s;
  s += "# Generated by tls2p. Run with: gnuplot -persist plot.gp\n";
  s += "set datafile separator ','\n";
  s += "set view map\nset size square\nset palette rgbformulae 33,13,10\n";
  s += std::string("set xlabel '") + xlabel + "'\nset ylabel '" + ylabel + "'\n";
  const std::string density = "(($re)**2 + ($im)**2) / " + num(divisor);
  if (pairs.empty()) {
    s += "set title 'density'\n";
    s += "splot 'field.csv' skip 1 using 1:2:((($3)**2 + ($4)**2) / " + num(divisor) +
         ") with pm3d notitle\n";
    return s;
  }
  s += "set multiplot layout 1," + std::to_string(pairs.size()) + "\n";
  for (const auto& p : pairs) {
    s += "set title 'channels " + p + "'\n";
    s += "splot 'field.csv' skip 1 using 2:3:(($1 == " + p + ") ? (($4)**2 + ($5)**2) / " +
         num(divisor) + " : NaN) with pm3d notitle\n";
  }
  s += "unset multiplot\n";
  return s;
}

json params_json(const ScenarioConfig& c) {
  if (is_two_channel(c.mode)) {
    return {{"kappa1", c.channels.kappa1}, {"kappa2", c.channels.kappa2}};
  }
  return {{"kappa", c.emitter.kappa}, {"omega_d", c.emitter.omega_d}};
}

json base_meta(const ScenarioConfig& c) {
  json meta;
  meta["mode"] = mode_name(c.mode);
  meta["parameters"] = params_json(c);
  meta["tolerance_profile"] = c.profile == ToleranceProfile::tight ? "tight" : "figure";
  meta["scale"] = c.scale == DensityScale::paper_fock ? "paper_fock" : "normalized";
  if (c.pulse) {
    meta["pulses"] = json::array({describe(*c.pulse)});
    if (c.mode != Mode::single_photon) {
      meta["pulses"].push_back(describe(c.pulse2 ? *c.pulse2 : *c.pulse));
    }
  }
  return meta;
}

double scale_divisor(const ScenarioConfig& c, double n2) {
  if (c.scale == DensityScale::paper_fock) {
    if (std::abs(n2 - 2.0) > 1e-9) throw ScaleMismatch("paper_fock scale needs a Fock input");
    return 8.0;
  }
  return 2.0 * n2;
}

int run_single_photon(const ScenarioConfig& c, json& meta, const fs::path& dir) {
  const PulseSpec& xi = *c.pulse;
  const double rate = fastest(TwoPhotonInput::fock(xi), c.emitter.kappa);
  ConvolveOptions opts;
  opts.profile = c.profile;
  Grid1D g;
  if (c.grid.start) {
    g = Grid1D::spanning(*c.grid.start, *c.grid.stop, c.grid.points);
  } else {
    g = Grid1D::spanning(default_window(xi, c.emitter.kappa).lo,
                         default_window(xi, c.emitter.kappa).hi, c.grid.points);
  }
  const auto nu = convolve_scalar(c.emitter, xi, g, opts);

  // Energy absorbed by t = 4 on a fine grid ending exactly there.
  const double lo = xi.window(1e-14).lo;
  double absorbed = 0.0;
  if (lo < 4.0) {
    const double h = 0.02 / rate;
    const auto n = static_cast<std::size_t>(std::max(2001.0, std::ceil((4.0 - lo) / h) + 1));
    const Grid1D fine = Grid1D::spanning(lo, 4.0, n);
    ConvolveOptions partial = opts;
    partial.require_tail = false;
    const auto nu_fine = convolve_scalar(c.emitter, xi, fine, partial);
    for (std::size_t k = 0; k < n; ++k) {
      const double w = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
      absorbed += w * (std::norm(xi(fine.at(k))) - std::norm(nu_fine[k]));
    }
    absorbed *= fine.step;
  }

  double out_energy = 0.0, in_energy = 0.0;
  std::ofstream csv(dir / "field.csv", std::ios::binary);
  if (!csv) throw Error("cannot write field.csv");
  csv << "t,xi_re,xi_im,nu_re,nu_im\n";
  for (std::size_t k = 0; k < g.count; ++k) {
    const double w = (k == 0 || k + 1 == g.count) ? 0.5 : 1.0;
    const cplx x = xi(g.at(k));
    out_energy += w * std::norm(nu[k]);
    in_energy += w * std::norm(x);
    csv << num(g.at(k)) << ',' << num(x.real()) << ',' << num(x.imag()) << ','
        << num(nu[k].real()) << ',' << num(nu[k].imag()) << '\n';
  }
  meta["grid"] = describe(g);
  meta["absorbed_by_t4"] = absorbed;
  meta["checks"]["unitarity"] = unitarity(out_energy / in_energy);
  write_text(dir / "plot.gp",
             "# Generated by tls2p. Run with: gnuplot -persist plot.gp\n"
             "set datafile separator ','\nset xlabel 't'\nset ylabel 'energy density'\n"
             "plot 'field.csv' skip 1 using 1:(($2)**2 + ($3)**2) with lines title '|xi|^2', \\\n"
             "     '' skip 1 using 1:(($4)**2 + ($5)**2) with lines title '|nu|^2'\n");
  return kExitOk;
}

int run_one_channel(const ScenarioConfig& c, json& meta, const fs::path& dir) {
  const TwoPhotonInput in = input_of(c);
  const double divisor = scale_divisor(c, in.n2);
  const double rate = c.emitter.kappa;
  if (c.mode == Mode::one_channel_time) {
    const Grid1D g = time_axis(c, in, rate);
    ConvolveOptions opts;
    opts.profile = c.profile;
    const auto field = eta_time(c.emitter, in, {g, g}, opts);
    write_grid_csv(dir / "field.csv", field.grid, "p1", "p2", {{"", &field.values}});
    const auto density = time_density(field, c.scale);
    meta["grid"] = describe(g);
    meta["diagonal_peak_count"] = diagonal_peaks(field).size();
    meta["density_max"] = *std::max_element(density.values().begin(), density.values().end());
    meta["checks"]["unitarity"] = unitarity(integrate_abs2(field) / (2.0 * in.n2));
    write_text(dir / "plot.gp", heatmap_script("p1", "p2", divisor, {}));
  } else {
    const Grid1D g = frequency_axis_for(c, in, rate);
    const auto field = eta_freq(c.emitter, in, {g, g}, c.profile);
    write_grid_csv(dir / "field.csv", field.grid, "w1", "w2", {{"", &field.values}});
    meta["grid"] = describe(g);
    // The spectrum is truncated by the grid; check unitarity in time instead.
    const Interval w = scattering_window(in, rate);
    const OneChannelModel model(c.emitter, in, w.lo, w.hi, c.profile);
    meta["checks"]["unitarity"] = unitarity(model.norm(w.lo, w.hi) / (2.0 * in.n2));
    meta["spectrum_norm_on_grid"] = integrate_abs2(field.grid, field.values) / (2.0 * in.n2);
    write_text(dir / "plot.gp", heatmap_script("w1", "w2", divisor, {}));
  }
  return kExitOk;
}

json probabilities_json(const ChannelProbabilities& p) {
  return {{"both_ch1", p.both_ch1}, {"split", p.split}, {"both_ch2", p.both_ch2},
          {"total", p.total()}};
}

int run_two_channel(const ScenarioConfig& c, json& meta, const fs::path& dir) {
  const TwoPhotonInput in = input_of(c);
  const double rate = 2.0 * c.channels.decay();
  ConvolveOptions opts;
  opts.profile = c.profile;
  const std::vector<std::string> pairs = {"11", "12", "22"};
  if (c.mode == Mode::two_channel_time) {
    const Grid1D g = time_axis(c, in, rate);
    const auto field = eta_ij_time(c.channels, in, {g, g}, TwoChannelPath::automatic, opts);
    write_grid_csv(dir / "field.csv", field.grid, "p1", "p2",
                   {{"11", &field.eta11}, {"12", &field.eta12}, {"22", &field.eta22}});
    const auto probs = channel_probabilities(field);
    meta["grid"] = describe(g);
    meta["probabilities"] = probabilities_json(probs);
    meta["checks"]["total_probability"] = unitarity(probs.total());
    write_text(dir / "plot.gp", heatmap_script("p1", "p2", 1.0, pairs));
  } else {
    const Grid1D g = frequency_axis_for(c, in, rate);
    const auto field = T_ij_freq(c.channels, in, {g, g}, c.profile);
    write_grid_csv(dir / "field.csv", field.grid, "w1", "w2",
                   {{"11", &field.eta11}, {"12", &field.eta12}, {"22", &field.eta22}});
    const auto hom = hom_difference(field);
    const auto [lo, hi] = std::minmax_element(hom.values().begin(), hom.values().end());
    meta["grid"] = describe(g);
    meta["hom_difference"] = {{"min", *lo}, {"max", *hi}};
    // Probabilities come from a time-domain companion grid.
    const Grid1D t = aligned_axis(scattering_window(in, rate), 256, in.breakpoints());
    const auto probs =
        channel_probabilities(eta_ij_time(c.channels, in, {t, t}, TwoChannelPath::automatic));
    meta["probabilities"] = probabilities_json(probs);
    meta["checks"]["total_probability"] = unitarity(probs.total());
    write_text(dir / "plot.gp", heatmap_script("w1", "w2", 1.0, pairs));
  }
  return kExitOk;
}

int run_validate(json& meta, std::ostream& log) {
  json list = json::array();
  bool ok = true;
  checks::run_all([&](const checks::Result& r) {
    log << checks::format(r) << std::endl;
    ok = ok && r.pass;
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                    {"seconds", r.seconds}});
    if (r.id == 3) meta["checks"]["unitarity"] = {{"pass", r.pass}, {"detail", r.detail}};
  });
  meta["acceptance"] = list;
  meta["all_passed"] = ok;
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

int run(const ScenarioConfig& c, std::ostream& log) {
  const fs::path dir(c.output);
  fs::create_directories(dir);
  json meta = base_meta(c);
  int code = kExitOk;
  switch (c.mode) {
    case Mode::single_photon: code = run_single_photon(c, meta, dir); break;
    case Mode::one_channel_time:
    case Mode::one_channel_freq: code = run_one_channel(c, meta, dir); break;
    case Mode::two_channel_time:
    case Mode::two_channel_freq: code = run_two_channel(c, meta, dir); break;
    case Mode::validate: code = run_validate(meta, log); break;
  }
  write_text(dir / "meta.json", meta.dump(2) + "\n");
  if (c.mode != Mode::validate) log << "wrote " << (dir / "field.csv").string() << std::endl;
  return code;
}

}  // namespace tls2p::cli
