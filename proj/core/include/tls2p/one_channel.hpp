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

#ifndef TLS2P_ONE_CHANNEL_HPP_
#define TLS2P_ONE_CHANNEL_HPP_

#include <cstddef>
#include <vector>

#include "tls2p/amplitude.hpp"
#include "tls2p/grid.hpp"
#include "tls2p/lti.hpp"
#include "tls2p/pulse.hpp"
#include "tls2p/sampling.hpp"

namespace tls2p {

// Time-domain output of a two-level emitter in one channel, tabulated once on a
// fine grid covering [lo, hi] and then evaluated pointwise.
//
//   eta(p1, p2) = nu1(p1) nu2(p2) + nu1(p2) nu2(p1) + zeta(p1, p2) + zeta(p2, p1)
//   zeta(p1, p2) = -2 kappa^2 e^{-a (p1 - p2)} J(p2)   for p1 > p2, 0 for p1 < p2
//   J(t) = \int_{-inf}^{t} e^{-2a (t - r)} [xi1 Psi2 + xi2 Psi1](r) dr
//
// with a = kappa / 2 + i omega_d and Psi = e^{-a t} * xi. On the diagonal zeta
// takes half the adjacent limit so that eta is continuous.
class OneChannelModel {
 public:
  OneChannelModel(const EmitterParams& params, const TwoPhotonInput& input, double lo, double hi,
                  ToleranceProfile profile = ToleranceProfile::tight);

  cplx nu1(double t) const { return nu1_(t); }
  cplx nu2(double t) const { return nu2_(t); }
  // The correlation integral J above.
  cplx correlation(double t) const { return j_(t); }
  cplx zeta(double p1, double p2) const;
  cplx eta(double p1, double p2) const;

  // \iint |eta|^2 over [lo, hi]^2 by nested adaptive quadrature.
  double norm(double lo, double hi, double tol = 1e-9) const;

  const EmitterParams& params() const { return params_; }

 private:
  EmitterParams params_;
  std::vector<double> jumps_;
  SegmentedSignal nu1_;
  SegmentedSignal nu2_;
  SegmentedSignal j_;
};

cplx zeta(const EmitterParams& params, const TwoPhotonInput& input, double p1, double p2,
          ToleranceProfile profile = ToleranceProfile::tight);

// eta(p1, p2) on `grid`; exchange-symmetric bit for bit on square grids.
TwoPhotonAmplitude eta_time(const EmitterParams& params, const TwoPhotonInput& input,
                            const Grid2D& grid, const ConvolveOptions& options = {});

// (G[i w1] - 1)(G[i w2] - 1)(G[i mu1] + G[i mu2] - 2).
cplx mixing_kernel(const EmitterParams& params, double w1, double w2, double mu1, double mu2);

// Half-width of the mu integration window around (w1 + w2) / 2.
double mixing_cutoff(double kappa, const TwoPhotonInput& input);

// eta[w1, w2] with the mixing integral evaluated by adaptive quadrature.
TwoPhotonAmplitude eta_freq(const EmitterParams& params, const TwoPhotonInput& input,
                            const Grid2D& grid,
                            ToleranceProfile profile = ToleranceProfile::tight);

// Brute-force reference: the sixteen-term output amplitude with every delta
// collapsed, integrated by nested adaptive quadrature and symmetrized.
cplx brute_force_eta(const EmitterParams& params, const TwoPhotonInput& input, double p1,
                     double p2, double tol = 1e-10);

enum class DensityScale {
  normalized,  // |eta|^2 / (2 n2), integrates to 1
  paper_fock,  // |eta|^2 / 8, the figure convention for Fock inputs
};

RealMatrix time_density(const TwoPhotonAmplitude& field, DensityScale scale);

// Indices k of strict local maxima of |eta(k, k)|^2 along the diagonal of a
// square grid whose height is at least `relative_floor` of the diagonal maximum.
std::vector<std::size_t> diagonal_peaks(const TwoPhotonAmplitude& field,
                                        double relative_floor = 0.01);

}  // namespace tls2p

#endif  // TLS2P_ONE_CHANNEL_HPP_
