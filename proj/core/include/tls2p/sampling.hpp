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

#ifndef TLS2P_SAMPLING_HPP_
#define TLS2P_SAMPLING_HPP_

#include <functional>
#include <span>
#include <vector>

#include "tls2p/grid.hpp"
#include "tls2p/pulse.hpp"

namespace tls2p {

// Piecewise-uniform sampling of a signal that may jump at segment joints.
//
// Each segment is a closed uniform grid; the nodes at its ends hold one-sided
// limits. Evaluation interpolates with a cubic inside the segment and treats a
// joint as part of the segment on its left, matching left-continuous pulses.
class SegmentedSignal {
 public:
  struct Segment {
    Grid1D grid;
    std::vector<cplx> values;
  };

  SegmentedSignal() = default;
  explicit SegmentedSignal(std::vector<Segment> segments);

  // Zero before the first segment. Throws GridTooShort past the last one.
  cplx operator()(double t) const;

  const std::vector<Segment>& segments() const { return segments_; }
  double lo() const { return segments_.front().grid.start; }
  double hi() const { return segments_.back().grid.stop(); }

 private:
  std::vector<Segment> segments_;
};

using Layout = std::vector<Grid1D>;

// Splits [lo, hi] at the breakpoints that fall inside it and lays a uniform grid
// with step at most `step` (and at least 8 nodes) on every piece.
Layout make_layout(double lo, double hi, std::span<const double> breaks, double step);

// Fine layout for convolving the given pulses with exponential kernels of rate up
// to `rate`: starts deep enough that the pulses carry negligible energy and
// extends to cover [lo, hi].
Layout fine_layout(std::span<const PulseSpec* const> pulses, double rate, double lo, double hi,
                   ToleranceProfile profile);

// Samples f(t, side) on every node, passing Side::right at segment starts and
// Side::left elsewhere.
SegmentedSignal sample(const Layout& layout, const std::function<cplx(double, Side)>& f);
SegmentedSignal sample(const Layout& layout, const PulseSpec& pulse);

// Node-wise combination of signals sharing one layout.
SegmentedSignal combine(std::span<const SegmentedSignal* const> inputs,
                        const std::function<cplx(std::span<const cplx>)>& f);

// Running integral \int_{lo}^{t} e^{-a (t - r)} f(r) dr carried across segments.
SegmentedSignal cumexp(cplx a, const SegmentedSignal& f);

}  // namespace tls2p

#endif  // TLS2P_SAMPLING_HPP_
