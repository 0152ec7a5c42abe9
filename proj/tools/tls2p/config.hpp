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


#ifndef TLS2P_TOOLS_CONFIG_HPP_
#define TLS2P_TOOLS_CONFIG_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "tls2p/grid.hpp"
#include "tls2p/lti.hpp"
#include "tls2p/one_channel.hpp"
#include "tls2p/pulse.hpp"

namespace tls2p::cli {

enum class Mode {
  one_channel_time,
  one_channel_freq,
  two_channel_time,
  two_channel_freq,
  single_photon,
  validate,
};

struct GridSpec {
  std::optional<double> start;  // both bounds or neither
  std::optional<double> stop;
  std::size_t points = 512;
};

struct ScenarioConfig {
  Mode mode = Mode::validate;
  EmitterParams emitter{1.0, 0.0};
  TwoChannelParams channels{1.0, 1.0};
  std::optional<PulseSpec> pulse;
  std::optional<PulseSpec> pulse2;  // defaults to `pulse`
  GridSpec grid;
  ToleranceProfile profile = ToleranceProfile::figure;
  DensityScale scale = DensityScale::normalized;
  std::string output = "out";
};

struct Overrides {
  std::optional<double> kappa;
  std::optional<double> gamma;
  std::optional<double> omega;
  std::optional<std::size_t> grid_points;
  std::optional<std::string> out;
};

bool is_two_channel(Mode mode);
const char* mode_name(Mode mode);

// `origin` names the source in error messages.
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin = "config");
ScenarioConfig parse_config(const std::string& path);

// Throws ConfigError if an override does not fit the scenario.
void apply_overrides(ScenarioConfig& config, const Overrides& overrides);

}  // namespace tls2p::cli

#endif  // TLS2P_TOOLS_CONFIG_HPP_
