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


#ifndef TLS2P_TOOLS_CHECKS_HPP_
#define TLS2P_TOOLS_CHECKS_HPP_

#include <functional>
#include <string>
#include <vector>

namespace tls2p::checks {

struct Result {
  int id;
  std::string name;
  bool pass;
  std::string detail;  // measured values against their thresholds
  double seconds;
};

struct Check {
  int id;
  std::string name;
  std::function<Result()> run;
};

// The numbered acceptance checks, in order.
const std::vector<Check>& all();

// Runs every check; exceptions count as failures.
std::vector<Result> run_all(const std::function<void(const Result&)>& on_result = {});

std::string format(const Result& r);

}  // namespace tls2p::checks

#endif  // TLS2P_TOOLS_CHECKS_HPP_
