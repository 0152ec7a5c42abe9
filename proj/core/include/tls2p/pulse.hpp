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

#ifndef TLS2P_PULSE_HPP_
#define TLS2P_PULSE_HPP_

#include <span>
#include <variant>
#include <vector>

#include "tls2p/grid.hpp"

namespace tls2p {

// xi(t) = (Omega^2 / 2 pi)^{1/4} exp(-Omega^2 (t - tau)^2 / 4).
struct Gaussian {
  double omega;
  double tau = 0.0;
  bool operator==(const Gaussian&) const = default;
};

// xi(t) = -sqrt(gamma) exp(gamma t / 2) for t <= 0, zero for t > 0.
struct RisingExp {
  double gamma;
  bool operator==(const RisingExp&) const = default;
};

// Linear interpolation of complex samples; zero outside [start, stop].
struct Sampled {
  Grid1D grid;
  std::vector<cplx> values;
  bool operator==(const Sampled&) const = default;
};

enum class Side { left, right };

struct Interval {
  double lo;
  double hi;
};

// Immutable single-photon pulse shape with unit L2 norm.
class PulseSpec {
 public:
  using Shape = std::variant<Gaussian, RisingExp, Sampled>;

  static PulseSpec gaussian(double omega, double tau = 0.0);
  static PulseSpec rising_exp(double gamma);
  // Rescales the samples to unit norm unless `normalize` is false.
  static PulseSpec sampled(Grid1D grid, std::vector<cplx> values, bool normalize = true);

  const Shape& shape() const { return shape_; }

  cplx operator()(double t) const;
  // One-sided limit at t; equals operator() away from breakpoints.
  cplx limit(double t, Side side) const;
  // Continuous transform (1/sqrt(2 pi)) \int e^{-i w t} xi(t) dt.
  cplx spectrum(double w) const;

  // Exact L2 norm squared of the shape as evaluated.
  double norm2() const;
  // Points where xi or its derivatives jump.
  std::vector<double> breakpoints() const;
  // Smallest interval holding all but `tail` of the pulse energy.
  Interval window(double tail) const;
  // Fastest time scale of the shape in 1/time; a step of c / rate() resolves it.
  double rate() const;

  bool operator==(const PulseSpec&) const = default;

 private:
  explicit PulseSpec(Shape shape) : shape_(std::move(shape)) {}
  Shape shape_;
};

cplx evaluate(const PulseSpec& pulse, double t);
cplx fourier(const PulseSpec& pulse, double w);

// <xi1|xi2> = \int conj(xi1(t)) xi2(t) dt by adaptive quadrature.
cplx overlap(const PulseSpec& xi1, const PulseSpec& xi2, double tol = 1e-12);

// Energy fraction used for default windows and the deep fine-sampling window.
inline constexpr double kDefaultEnergyTail = 1e-4;

// Default time window for a pulse scattered by an emitter of rate kappa:
// 99.99% of the energy, extended by 8 / kappa on the late side.
Interval default_window(const PulseSpec& pulse, double kappa);

// `points` uniform nodes covering [window.lo, window.hi] with the first jump
// (if any) placed halfway between two nodes, so cell sums stay second order.
Grid1D aligned_axis(Interval window, std::size_t points, std::span<const double> jumps);

struct TwoPhotonInput {
  PulseSpec xi1;
  PulseSpec xi2;
  double n2;  // 1 + |<xi1|xi2>|^2

  static TwoPhotonInput make(PulseSpec xi1, PulseSpec xi2);
  static TwoPhotonInput fock(const PulseSpec& xi) { return make(xi, xi); }
  bool identical() const { return xi1 == xi2; }
  std::vector<double> breakpoints() const;
};

// Union of the pulses' energy windows (all but `tail`), extended by
// `lifetimes / rate` on the late side.
Interval scattering_window(const TwoPhotonInput& input, double rate,
                           double tail = kDefaultEnergyTail, double lifetimes = 8.0);

}  // namespace tls2p

#endif  // TLS2P_PULSE_HPP_
