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

#ifndef TLS2P_FOURIER2D_HPP_
#define TLS2P_FOURIER2D_HPP_

#include <span>

#include "tls2p/amplitude.hpp"
#include "tls2p/grid.hpp"

namespace tls2p {

// Frequency axis induced by a time axis of N nodes and step h:
// w_m = 2 pi (m - floor(N/2)) / (N h).
Grid1D frequency_axis(const Grid1D& time_axis);

inline constexpr double kBoundaryLeakRatio = 1e-6;

struct FourierResult {
  TwoPhotonAmplitude field;
  double boundary_ratio;  // max |eta| on the grid edge over max |eta|
  bool boundary_leak;     // boundary_ratio >= kBoundaryLeakRatio
};

// (1/2 pi) \iint e^{-i (w1 p1 + w2 p2)} eta(p1, p2) dp1 dp2 on the induced grid.
//
// Each axis is integrated exactly against a piecewise-cubic interpolant of the
// samples, cut at the jump lines and, for fields with a diagonal kink, at
// p1 = p2. The field is taken to vanish outside the grid. One FFT per axis
// carries the bulk; only nodes next to a cut get individual weights.
FourierResult fourier2d(const TwoPhotonAmplitude& field);
ComplexMatrix fourier2d(const Grid2D& grid, const ComplexMatrix& values,
                        std::span<const double> jumps, bool diagonal_kink = false,
                        double* boundary_ratio = nullptr);

// Trapezoidal inverse back onto `time_grid`; accurate for spectra that are
// negligible at the edge of the frequency grid.
TwoPhotonAmplitude inverse_fourier2d(const TwoPhotonAmplitude& spectrum, const Grid2D& time_grid);

}  // namespace tls2p

#endif  // TLS2P_FOURIER2D_HPP_
