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


#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tls2p/error.hpp"

namespace tls2p::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& field, const std::string& what) {
  throw ConfigError(origin + ": field '" + field + "' " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& origin,
                    const std::string& prefix) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) fail(origin, prefix + key, "is not a recognised key");
  }
}

double number(const json& obj, const std::string& key, const std::string& origin,
              const std::string& prefix) {
  const json& v = obj.at(key);
  if (!v.is_number()) fail(origin, prefix + key, "must be a number, got " + v.dump());
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(origin, prefix + key, "must be finite");
  return x;
}

double positive(const json& obj, const std::string& key, const std::string& origin,
                const std::string& prefix) {
  const double x = number(obj, key, origin, prefix);
  if (!(x > 0.0)) fail(origin, prefix + key, "must be positive");
  return x;
}

std::string text(const json& obj, const std::string& key, const std::string& origin) {
  const json& v = obj.at(key);
  if (!v.is_string()) fail(origin, key, "must be a string, got " + v.dump());
  return v.get<std::string>();
}

std::vector<double> numbers(const json& obj, const std::string& key, const std::string& origin,
                            const std::string& prefix) {
  const json& v = obj.at(key);
  if (!v.is_array()) fail(origin, prefix + key, "must be an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_number()) {
      fail(origin, prefix + key + "[" + std::to_string(k) + "]", "must be a number");
    }
    out.push_back(v[k].get<double>());
  }
  return out;
}

PulseSpec parse_pulse(const json& p, const std::string& origin, const std::string& name) {
  const std::string prefix = name + ".";
  if (!p.is_object()) fail(origin, name, "must be an object");
  if (!p.contains("type")) fail(origin, prefix + "type", "is required");
  const std::string type = text(p, "type", origin);
  if (type == "gaussian") {
    reject_unknown(p, {"type", "omega", "tau"}, origin, prefix);
    if (!p.contains("omega")) fail(origin, prefix + "omega", "is required");
    const double tau = p.contains("tau") ? number(p, "tau", origin, prefix) : 0.0;
    return PulseSpec::gaussian(positive(p, "omega", origin, prefix), tau);
  }
  if (type == "rising_exp") {
    reject_unknown(p, {"type", "gamma"}, origin, prefix);
    if (!p.contains("gamma")) fail(origin, prefix + "gamma", "is required");
    return PulseSpec::rising_exp(positive(p, "gamma", origin, prefix));
  }
  if (type == "sampled") {
    reject_unknown(p, {"type", "start", "step", "re", "im"}, origin, prefix);
    for (const char* key : {"start", "step", "re"}) {
      if (!p.contains(key)) fail(origin, prefix + key, "is required");
    }
    const std::vector<double> re = numbers(p, "re", origin, prefix);
    const std::vector<double> im =
        p.contains("im") ? numbers(p, "im", origin, prefix) : std::vector<double>(re.size());
    if (im.size() != re.size()) fail(origin, prefix + "im", "must match the length of re");
    std::vector<cplx> values(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) values[k] = {re[k], im[k]};
    Grid1D g{number(p, "start", origin, prefix), positive(p, "step", origin, prefix), re.size()};
    try {
      return PulseSpec::sampled(g, std::move(values));
    } catch (const std::invalid_argument& e) {
      fail(origin, name, e.what());
    }
  }
  fail(origin, prefix + "type", "must be gaussian, rising_exp or sampled, got '" + type + "'");
}

Mode parse_mode(const std::string& s, const std::string& origin) {
  static const std::pair<const char*, Mode> names[] = {
      {"one_channel_time", Mode::one_channel_time}, {"one_channel_freq", Mode::one_channel_freq},
      {"two_channel_time", Mode::two_channel_time}, {"two_channel_freq", Mode::two_channel_freq},
      {"single_photon", Mode::single_photon},       {"validate", Mode::validate}};
  for (const auto& [name, mode] : names) {
    if (s == name) return mode;
  }
  fail(origin, "mode", "has unknown value '" + s + "'");
}

}  // namespace

bool is_two_channel(Mode mode) {
  return mode == Mode::two_channel_time || mode == Mode::two_channel_freq;
}

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::one_channel_time: return "one_channel_time";
    case Mode::one_channel_freq: return "one_channel_freq";
    case Mode::two_channel_time: return "two_channel_time";
    case Mode::two_channel_freq: return "two_channel_freq";
    case Mode::single_photon: return "single_photon";
    case Mode::validate: return "validate";
  }
  return "unknown";
}

ScenarioConfig parse_config_text(const std::string& source, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    // The message carries the line and column.
    throw ConfigError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(origin + ": top level must be an object");
  reject_unknown(doc,
                 {"mode", "kappa", "omega_d", "kappa1", "kappa2", "pulse", "pulse2", "grid",
                  "tolerance_profile", "output", "scale"},
                 origin, "");

  ScenarioConfig c;
  if (!doc.contains("mode")) fail(origin, "mode", "is required");
  c.mode = parse_mode(text(doc, "mode", origin), origin);

  if (is_two_channel(c.mode)) {
    // The two-channel model has no detuning.
    if (doc.contains("omega_d")) fail(origin, "omega_d", "is not allowed in two-channel modes");
    if (doc.contains("kappa")) {
      if (doc.contains("kappa1") || doc.contains("kappa2")) {
        fail(origin, "kappa", "conflicts with kappa1/kappa2");
      }
      const double k = positive(doc, "kappa", origin, "");
      c.channels = {k, k};
    } else {
      if (!doc.contains("kappa1") || !doc.contains("kappa2")) {
        fail(origin, "kappa1", "and kappa2 (or kappa) are required");
      }
      c.channels = {positive(doc, "kappa1", origin, ""), positive(doc, "kappa2", origin, "")};
    }
  } else {
    for (const char* key : {"kappa1", "kappa2"}) {
      if (doc.contains(key)) fail(origin, key, "is only valid in two-channel modes");
    }
    if (doc.contains("kappa")) {
      c.emitter.kappa = positive(doc, "kappa", origin, "");
    } else if (c.mode != Mode::validate) {
      fail(origin, "kappa", "is required");
    }
    if (doc.contains("omega_d")) c.emitter.omega_d = number(doc, "omega_d", origin, "");
  }

  if (doc.contains("pulse")) {
    c.pulse = parse_pulse(doc.at("pulse"), origin, "pulse");
  } else if (c.mode != Mode::validate) {
    fail(origin, "pulse", "is required");
  }
  if (doc.contains("pulse2")) {
    if (c.mode == Mode::single_photon) fail(origin, "pulse2", "is not used by single_photon");
    c.pulse2 = parse_pulse(doc.at("pulse2"), origin, "pulse2");
  }

  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    if (!g.is_object()) fail(origin, "grid", "must be an object");
    reject_unknown(g, {"start", "stop", "points"}, origin, "grid.");
    if (g.contains("start") != g.contains("stop")) {
      fail(origin, "grid", "needs both start and stop or neither");
    }
    if (g.contains("start")) {
      c.grid.start = number(g, "start", origin, "grid.");
      c.grid.stop = number(g, "stop", origin, "grid.");
      if (!(*c.grid.stop > *c.grid.start)) fail(origin, "grid.stop", "must exceed grid.start");
    }
    if (g.contains("points")) {
      const json& v = g.at("points");
      if (!v.is_number_integer() || v.get<long long>() < 8) {
        fail(origin, "grid.points", "must be an integer >= 8");
      }
      c.grid.points = v.get<std::size_t>();
    }
  }

  if (doc.contains("tolerance_profile")) {
    const std::string s = text(doc, "tolerance_profile", origin);
    if (s == "tight") {
      c.profile = ToleranceProfile::tight;
    } else if (s == "figure") {
      c.profile = ToleranceProfile::figure;
    } else {
      fail(origin, "tolerance_profile", "must be tight or figure");
    }
  }
  if (doc.contains("scale")) {
    const std::string s = text(doc, "scale", origin);
    if (s == "normalized") {
      c.scale = DensityScale::normalized;
    } else if (s == "paper_fock") {
      c.scale = DensityScale::paper_fock;
    } else {
      fail(origin, "scale", "must be normalized or paper_fock");
    }
  }
  if (doc.contains("output")) c.output = text(doc, "output", origin);
  return c;
}

ScenarioConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

namespace {

PulseSpec override_pulse(const PulseSpec& p, const Overrides& o) {
  if (const auto* g = std::get_if<Gaussian>(&p.shape())) {
    if (o.gamma) throw ConfigError("--gamma: pulse is gaussian; use --omega");
    return o.omega ? PulseSpec::gaussian(*o.omega, g->tau) : p;
  }
  if (std::holds_alternative<RisingExp>(p.shape())) {
    if (o.omega) throw ConfigError("--omega: pulse is rising_exp; use --gamma");
    return o.gamma ? PulseSpec::rising_exp(*o.gamma) : p;
  }
  if (o.gamma || o.omega) throw ConfigError("--gamma/--omega: sampled pulses have no parameter");
  return p;
}

}  // namespace

void apply_overrides(ScenarioConfig& c, const Overrides& o) {
  if (o.kappa) {
    if (!(*o.kappa > 0.0)) throw ConfigError("--kappa: must be positive");
    c.emitter.kappa = *o.kappa;
    c.channels = {*o.kappa, *o.kappa};
  }
  for (const auto* v : {&o.gamma, &o.omega}) {
    if (*v && !(**v > 0.0)) throw ConfigError("--gamma/--omega: must be positive");
  }
  if (o.gamma || o.omega) {
    if (!c.pulse) throw ConfigError("--gamma/--omega: config has no pulse");
    c.pulse = override_pulse(*c.pulse, o);
    if (c.pulse2) c.pulse2 = override_pulse(*c.pulse2, o);
  }
  if (o.grid_points) {
    if (*o.grid_points < 8) throw ConfigError("--grid-points: must be >= 8");
    c.grid.points = *o.grid_points;
  }
  if (o.out) c.output = *o.out;
}

}  // namespace tls2p::cli
