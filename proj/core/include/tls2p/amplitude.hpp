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

#ifndef TLS2P_AMPLITUDE_HPP_
#define TLS2P_AMPLITUDE_HPP_

#include <span>
#include <vector>

#include "tls2p/grid.hpp"

namespace tls2p {

enum class Domain { time, frequency };

// Complex two-photon field eta(p1, p2) or eta[w1, w2] on a Grid2D.
struct TwoPhotonAmplitude {
  Grid2D grid;
  ComplexMatrix values;
  Domain domain = Domain::time;
  double n2 = 2.0;
  // Time-domain lines p = b (on either axis) across which the field jumps.
  std::vector<double> jumps;
  // Continuous across p1 = p2 but with a slope jump there.
  bool diagonal_kink = false;
};

// h1 h2 sum |values|^2: the double integral of |eta|^2 over the grid cells.
double integrate_abs2(const Grid2D& grid, const ComplexMatrix& values);

// \iint |values|^2 over the grid with end corrections at the jump lines and,
// if requested, at the diagonal kink; fourth order for piecewise-smooth fields.
double integrate_abs2(const Grid2D& grid, const ComplexMatrix& values,
                      std::span<const double> jumps, bool diagonal_kink);
double integrate_abs2(const TwoPhotonAmplitude& field);

// Largest |v(a, b) - v(b, a)| over a square grid.
double max_asymmetry(const ComplexMatrix& values);

}  // namespace tls2p

#endif  // TLS2P_AMPLITUDE_HPP_
