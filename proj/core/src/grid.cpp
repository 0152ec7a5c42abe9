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

#include "tls2p/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tls2p {

void Grid1D::validate() const {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start)) {
    throw std::invalid_argument("Grid1D: step must be positive and finite");
  }
  if (count < 8) {
    throw std::invalid_argument("Grid1D: count must be at least 8, got " +
                                std::to_string(count));
  }
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = at(k);
  return out;
}

Grid1D Grid1D::spanning(double lo, double hi, std::size_t points) {
  if (points < 2 || !(hi > lo)) {
    throw std::invalid_argument("Grid1D::spanning: need hi > lo and points >= 2");
  }
  Grid1D g{lo, (hi - lo) / static_cast<double>(points - 1), points};
  g.validate();
  return g;
}

void Grid2D::validate() const {
  axis1.validate();
  axis2.validate();
}

Tolerances tolerances(ToleranceProfile profile) {
  switch (profile) {
    case ToleranceProfile::tight:
      return {1e-8, 0.01};
    case ToleranceProfile::figure:
      return {1e-5, 0.04};
  }
  return {1e-8, 0.01};
}

}  // namespace tls2p
