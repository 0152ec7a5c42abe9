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


#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "scenario.hpp"
#include "tls2p/error.hpp"

int main(int argc, char** argv) {
  using namespace tls2p::cli;
  CLI::App app{"Two-photon scattering off a two-level emitter"};
  std::string path;
  Overrides o;
  double kappa = 0, gamma = 0, omega = 0;
  std::size_t points = 0;
  std::string out;
  app.add_option("config", path, "JSON scenario file")->required();
  auto* k = app.add_option("--kappa", kappa, "Coupling rate (both channels in two-channel modes)");
  auto* g = app.add_option("--gamma", gamma, "Rising-exponential FWHM");
  auto* w = app.add_option("--omega", omega, "Gaussian bandwidth");
  auto* n = app.add_option("--grid-points", points, "Points per grid axis");
  auto* d = app.add_option("--out", out, "Output directory");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (*k) o.kappa = kappa;
  if (*g) o.gamma = gamma;
  if (*w) o.omega = omega;
  if (*n) o.grid_points = points;
  if (*d) o.out = out;

  try {
    ScenarioConfig config = parse_config(path);
    apply_overrides(config, o);
    return run(config, std::cout);
  } catch (const tls2p::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tls2p::ScaleMismatch& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure in " << path << ": " << e.what() << '\n';
    return kExitNumerical;
  }
}
