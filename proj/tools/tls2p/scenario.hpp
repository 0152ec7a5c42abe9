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


#ifndef TLS2P_TOOLS_SCENARIO_HPP_
#define TLS2P_TOOLS_SCENARIO_HPP_

#include <ostream>

#include "config.hpp"

namespace tls2p::cli {

enum ExitCode {
  kExitOk = 0,
  kExitConfig = 1,
  kExitNumerical = 2,
  kExitValidation = 3,
};

// Runs the scenario and writes field.csv, meta.json and plot.gp under
// config.output (validate writes meta.json only). Progress goes to `log`.
// Returns kExitOk or kExitValidation; library errors propagate.
int run(const ScenarioConfig& config, std::ostream& log);

}  // namespace tls2p::cli

#endif  // TLS2P_TOOLS_SCENARIO_HPP_
