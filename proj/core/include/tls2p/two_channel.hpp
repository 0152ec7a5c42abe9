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

#ifndef TLS2P_TWO_CHANNEL_HPP_
#define TLS2P_TWO_CHANNEL_HPP_

#include <vector>

#include "tls2p/amplitude.hpp"
#include "tls2p/grid.hpp"
#include "tls2p/lti.hpp"
#include "tls2p/pulse.hpp"
#include "tls2p/sampling.hpp"

namespace tls2p {

// Channel-resolved two-photon field. The photon described by input.xi1 enters
// channel 1 and the one described by input.xi2 enters channel 2.
//
// In the time domain eta_ij(p1, p2) is the amplitude of finding a photon in
// channel i at p1 and one in channel j at p2; eta11 and eta22 are symmetric.
// In the frequency domain the matrices hold T11, T12 and T22.
struct ChannelResolvedAmplitude {
  Grid2D grid;
  ComplexMatrix eta11;
  ComplexMatrix eta12;
  ComplexMatrix eta22;
  Domain domain = Domain::time;
  std::vector<double> jumps;
};

enum class TwoChannelPath {
  automatic,       // equal_coupling when it applies, general otherwise
  equal_coupling,  // kappa1 == kappa2 and identical pulses only
  general,
};

// Time-domain tables for the two-channel emitter over [lo, hi].
class TwoChannelModel {
 public:
  TwoChannelModel(const TwoChannelParams& params, const TwoPhotonInput& input, double lo,
                  double hi, ToleranceProfile profile = ToleranceProfile::tight);

  // g_{G_mn} * xi_p at t.
  cplx response(int m, int n, int p, double t) const;
  // eta_ij(p1, p2) for p1 >= p2 (zero for p1 < p2), general coupling.
  cplx ordered(int i, int j, double p1, double p2) const;
  // Equal-coupling forms for identical pulses; i, j in {1, 2}.
  cplx ordered_equal(int i, int j, double p1, double p2) const;
  // Background fluorescence term for equal coupling and identical pulses.
  cplx chi(double p1, double p2) const;
  // Coefficient of b_i^dag(p1) b_j^dag(p2) for any ordering of p1, p2.
  cplx amplitude(int i, int j, double p1, double p2, TwoChannelPath path) const;

  bool equal_case() const { return equal_; }

 private:
  TwoChannelParams params_;
  TwoPhotonInput input_;
  bool equal_;
  SegmentedSignal phi_[2];
  SegmentedSignal bound_;       // general correlation integral
  SegmentedSignal bound_equal_; // equal-coupling correlation integral
};

ChannelResolvedAmplitude eta_ij_time(const TwoChannelParams& params, const TwoPhotonInput& input,
                                     const Grid2D& grid,
                                     TwoChannelPath path = TwoChannelPath::automatic,
                                     const ConvolveOptions& options = {});

// chi(p1, p2) for kappa1 == kappa2 and one pulse shape xi.
cplx chi(const TwoChannelParams& params, const PulseSpec& xi, double p1, double p2,
         ToleranceProfile profile = ToleranceProfile::tight);

// T11, T12, T22 on `grid` with the mixing integral by adaptive quadrature.
ChannelResolvedAmplitude T_ij_freq(const TwoChannelParams& params, const TwoPhotonInput& input,
                                   const Grid2D& grid,
                                   ToleranceProfile profile = ToleranceProfile::tight);

struct ChannelProbabilities {
  double both_ch1;
  double split;
  double both_ch2;
  double total() const { return both_ch1 + split + both_ch2; }
};

// Weights 1/2, 1, 1/2 on the integrated |eta11|^2, |eta12|^2, |eta22|^2.
ChannelProbabilities channel_probabilities(const ChannelResolvedAmplitude& field);

// (|T11|^2 + |T22|^2) / 2 - |T12|^2 pointwise.
RealMatrix hom_difference(const ChannelResolvedAmplitude& field);

// Brute-force reference for eta_ij built from the output correlators with the
// deltas collapsed, integrated by nested adaptive quadrature.
cplx brute_force_eta_ij(const TwoChannelParams& params, const TwoPhotonInput& input, int i,
                        int j, double p1, double p2, double tol = 1e-10);

}  // namespace tls2p

#endif  // TLS2P_TWO_CHANNEL_HPP_
