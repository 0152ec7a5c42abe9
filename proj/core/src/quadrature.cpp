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

#include "tls2p/quadrature.hpp"

namespace tls2p {

std::vector<double> split_points(double a, double b, std::span<const double> breaks) {
  std::vector<double> out{a};
  std::vector<double> inner;
  for (double x : breaks) {
    if (x > a && x < b) inner.push_back(x);
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(b);
  return out;
}

}  // namespace tls2p
