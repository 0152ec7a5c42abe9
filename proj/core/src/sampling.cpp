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

#include "tls2p/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tls2p/cumexp.hpp"
#include "tls2p/error.hpp"
#include "tls2p/quadrature.hpp"

namespace tls2p {

SegmentedSignal::SegmentedSignal(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw std::invalid_argument("SegmentedSignal: no segments");
  for (const auto& s : segments_) {
    if (s.values.size() != s.grid.count || s.grid.count < 4) {
      throw std::invalid_argument("SegmentedSignal: malformed segment");
    }
  }
}

cplx SegmentedSignal::operator()(double t) const {
  if (t < lo()) return {};
  // Grid ends recomputed from start + k * step may overshoot by rounding.
  if (t > hi() && t - hi() <= 1e-9 * segments_.back().grid.step) t = hi();
  if (t > hi()) {
    throw GridTooShort("sampled signal ends at " + std::to_string(hi()) +
                       ", evaluation requested at " + std::to_string(t));
  }
  const auto it = std::lower_bound(segments_.begin(), segments_.end(), t,
                                   [](const Segment& s, double x) { return s.grid.stop() < x; });
  const Segment& seg = *it;
  const std::size_t n = seg.grid.count;
  const double u = std::clamp((t - seg.grid.start) / seg.grid.step, 0.0,
                              static_cast<double>(n - 1));
  const auto k = std::min(static_cast<std::size_t>(u), n - 2);
  const std::size_t s = std::min(k == 0 ? 0 : k - 1, n - 4);
  const double x = u - static_cast<double>(s);
  const double l0 = -(x - 1.0) * (x - 2.0) * (x - 3.0) / 6.0;
  const double l1 = x * (x - 2.0) * (x - 3.0) / 2.0;
  const double l2 = -x * (x - 1.0) * (x - 3.0) / 2.0;
  const double l3 = x * (x - 1.0) * (x - 2.0) / 6.0;
  const auto& v = seg.values;
  return l0 * v[s] + l1 * v[s + 1] + l2 * v[s + 2] + l3 * v[s + 3];
}

Layout make_layout(double lo, double hi, std::span<const double> breaks, double step) {
  if (!(hi > lo) || !(step > 0.0)) throw std::invalid_argument("make_layout: empty range");
  const auto pts = split_points(lo, hi, breaks);
  Layout out;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double a = pts[k], b = pts[k + 1];
    const auto cells = std::max<std::size_t>(7, static_cast<std::size_t>(std::ceil((b - a) / step)));
    out.push_back(Grid1D{a, (b - a) / static_cast<double>(cells), cells + 1});
  }
  return out;
}

Layout fine_layout(std::span<const PulseSpec* const> pulses, double rate, double lo, double hi,
                   ToleranceProfile profile) {
  const Tolerances tol = tolerances(profile);
  const double tail = profile == ToleranceProfile::tight ? 1e-16 : 1e-10;
  double start = lo;
  std::vector<double> breaks;
  double fastest = rate;
  for (const PulseSpec* p : pulses) {
    start = std::min(start, p->window(tail).lo);
    const auto b = p->breakpoints();
    breaks.insert(breaks.end(), b.begin(), b.end());
    fastest = std::max(fastest, p->rate());
  }
  return make_layout(start, std::max(hi, start + 1.0 / fastest), breaks, tol.fine_step / fastest);
}

SegmentedSignal sample(const Layout& layout, const std::function<cplx(double, Side)>& f) {
  std::vector<SegmentedSignal::Segment> segs;
  segs.reserve(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const Grid1D& g = layout[i];
    SegmentedSignal::Segment s{g, std::vector<cplx>(g.count)};
    for (std::size_t k = 0; k + 1 < g.count; ++k) {
      s.values[k] = f(g.at(k), k == 0 ? Side::right : Side::left);
    }
    // The closing node sits exactly on the next joint, free of rounding.
    const double end = i + 1 < layout.size() ? layout[i + 1].start : g.stop();
    s.values.back() = f(end, Side::left);
    segs.push_back(std::move(s));
  }
  return SegmentedSignal(std::move(segs));
}

SegmentedSignal sample(const Layout& layout, const PulseSpec& pulse) {
  return sample(layout, [&pulse](double t, Side side) { return pulse.limit(t, side); });
}

SegmentedSignal combine(std::span<const SegmentedSignal* const> inputs,
                        const std::function<cplx(std::span<const cplx>)>& f) {
  if (inputs.empty()) throw std::invalid_argument("combine: no inputs");
  const auto& ref = inputs.front()->segments();
  std::vector<SegmentedSignal::Segment> segs;
  std::vector<cplx> args(inputs.size());
  for (std::size_t s = 0; s < ref.size(); ++s) {
    SegmentedSignal::Segment out{ref[s].grid, std::vector<cplx>(ref[s].grid.count)};
    for (std::size_t k = 0; k < ref[s].grid.count; ++k) {
      for (std::size_t i = 0; i < inputs.size(); ++i) args[i] = inputs[i]->segments()[s].values[k];
      out.values[k] = f(args);
    }
    segs.push_back(std::move(out));
  }
  return SegmentedSignal(std::move(segs));
}

SegmentedSignal cumexp(cplx a, const SegmentedSignal& f) {
  std::vector<SegmentedSignal::Segment> segs;
  cplx carry{};
  for (const auto& s : f.segments()) {
    auto v = cumexp(a, s.grid, s.values, carry);
    carry = v.back();
    segs.push_back({s.grid, std::move(v)});
  }
  return SegmentedSignal(std::move(segs));
}

}  // namespace tls2p
