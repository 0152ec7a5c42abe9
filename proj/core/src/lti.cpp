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

#include "tls2p/lti.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tls2p/error.hpp"
#include "tls2p/sampling.hpp"

namespace tls2p {

void EmitterParams::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("EmitterParams: kappa must be positive");
  }
  if (!std::isfinite(omega_d)) throw std::invalid_argument("EmitterParams: omega_d not finite");
}

void TwoChannelParams::validate() const {
  if (!(kappa1 > 0.0) || !(kappa2 > 0.0) || !std::isfinite(kappa1) || !std::isfinite(kappa2)) {
    throw std::invalid_argument("TwoChannelParams: kappa1 and kappa2 must be positive");
  }
}

cplx transfer_scalar(const EmitterParams& params, double w) {
  const cplx s(0.0, w + params.omega_d);
  return (s - params.kappa / 2.0) / (s + params.kappa / 2.0);
}

Matrix2 transfer_matrix(const TwoChannelParams& params, double w) {
  const cplx s(0.0, w);
  const double half_diff = 0.5 * (params.kappa1 - params.kappa2);
  const cplx den = s + params.decay();
  const cplx off = -std::sqrt(params.kappa1 * params.kappa2) / den;
  return {{{(s - half_diff) / den, off}, {off, (s + half_diff) / den}}};
}

void require_tail(std::span<const PulseSpec* const> pulses, double stop, double rate,
                  double lifetimes) {
  for (const PulseSpec* p : pulses) {
    const double end = p->window(kDefaultEnergyTail).hi;
    if (stop - end < lifetimes / rate) {
      throw GridTooShort("grid ends at " + std::to_string(stop) + ", less than " +
                         std::to_string(lifetimes) + " lifetimes after the pulse end " +
                         std::to_string(end));
    }
  }
}

namespace {

// Samples `fine` on the nodes of `grid`.
std::vector<cplx> resample(const SegmentedSignal& fine, const Grid1D& grid) {
  std::vector<cplx> out(grid.count);
  for (std::size_t k = 0; k < grid.count; ++k) out[k] = fine(grid.at(k));
  return out;
}

}  // namespace

std::vector<cplx> convolve_scalar(const EmitterParams& params, const PulseSpec& pulse,
                                  const Grid1D& grid, const ConvolveOptions& options) {
  params.validate();
  grid.validate();
  const PulseSpec* pulses[] = {&pulse};
  if (options.require_tail) require_tail(pulses, grid.stop(), params.kappa, 4.0);
  const double rate = std::max(params.kappa, std::abs(params.omega_d));
  const Layout layout = fine_layout(pulses, rate, grid.start, grid.stop(), options.profile);
  const SegmentedSignal xi = sample(layout, pulse);
  const SegmentedSignal psi = cumexp(params.decay(), xi);
  const SegmentedSignal* in[] = {&xi, &psi};
  const double kappa = params.kappa;
  const SegmentedSignal nu =
      combine(in, [kappa](std::span<const cplx> v) { return v[0] - kappa * v[1]; });
  return resample(nu, grid);
}

std::vector<cplx> convolve_matrix(const TwoChannelParams& params, int i, int j,
                                  const PulseSpec& pulse, const Grid1D& grid,
                                  const ConvolveOptions& options) {
  params.validate();
  grid.validate();
  if ((i != 1 && i != 2) || (j != 1 && j != 2)) {
    throw std::invalid_argument("convolve_matrix: channels must be 1 or 2");
  }
  const PulseSpec* pulses[] = {&pulse};
  if (options.require_tail) require_tail(pulses, grid.stop(), 2.0 * params.decay(), 4.0);
  const Layout layout =
      fine_layout(pulses, 2.0 * params.decay(), grid.start, grid.stop(), options.profile);
  const SegmentedSignal xi = sample(layout, pulse);
  const SegmentedSignal phi = cumexp(params.decay(), xi);
  const double direct = i == j ? 1.0 : 0.0;
  const double weight = std::sqrt(params.kappa(i) * params.kappa(j));
  const SegmentedSignal* in[] = {&xi, &phi};
  const SegmentedSignal out = combine(in, [direct, weight](std::span<const cplx> v) {
    return direct * v[0] - weight * v[1];
  });
  return resample(out, grid);
}

}  // namespace tls2p
