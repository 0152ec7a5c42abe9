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

#ifndef TLS2P_LTI_HPP_
#define TLS2P_LTI_HPP_

#include <array>
#include <span>
#include <vector>

#include "tls2p/grid.hpp"
#include "tls2p/pulse.hpp"

namespace tls2p {

// Two-level emitter coupled to one channel.
struct EmitterParams {
  double kappa;
  double omega_d = 0.0;

  void validate() const;
  // Decay constant of the scalar impulse response: kappa / 2 + i omega_d.
  cplx decay() const { return {kappa / 2.0, omega_d}; }
};

// Two-level emitter coupled to two counter-propagating channels, no detuning.
struct TwoChannelParams {
  double kappa1;
  double kappa2;

  void validate() const;
  // (kappa1 + kappa2) / 2.
  double decay() const { return 0.5 * (kappa1 + kappa2); }
  double kappa(int channel) const { return channel == 1 ? kappa1 : kappa2; }
  bool equal_coupling() const { return kappa1 == kappa2; }
};

using Matrix2 = std::array<std::array<cplx, 2>, 2>;

// G[i w] = (i w + i omega_d - kappa/2) / (i w + i omega_d + kappa/2).
cplx transfer_scalar(const EmitterParams& params, double w);

// 2x2 transfer matrix; entry [m-1][n-1] is G_mn[i w].
Matrix2 transfer_matrix(const TwoChannelParams& params, double w);

struct ConvolveOptions {
  ToleranceProfile profile = ToleranceProfile::tight;
  // Throw GridTooShort when the grid ends less than 4 lifetimes after the pulse.
  bool require_tail = true;
};

// nu = g_G * xi sampled on `grid`.
std::vector<cplx> convolve_scalar(const EmitterParams& params, const PulseSpec& pulse,
                                  const Grid1D& grid, const ConvolveOptions& options = {});

// g_{G_ij} * xi sampled on `grid`; channels are 1 or 2.
std::vector<cplx> convolve_matrix(const TwoChannelParams& params, int i, int j,
                                  const PulseSpec& pulse, const Grid1D& grid,
                                  const ConvolveOptions& options = {});

// Throws GridTooShort unless `stop` lies at least `lifetimes / rate` past the
// end of every pulse.
void require_tail(std::span<const PulseSpec* const> pulses, double stop, double rate,
                  double lifetimes);

}  // namespace tls2p

#endif  // TLS2P_LTI_HPP_
