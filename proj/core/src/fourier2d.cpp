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

#include "tls2p/fourier2d.hpp"

#include "cut_rules.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tls2p {
namespace {

using detail::kOrders;
using detail::kStencil;
using detail::Segment;

constexpr double kPi = std::numbers::pi;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Strided in-place 1D FFTs over every line of a row-major matrix.
void fft_lines(ComplexMatrix& m, int axis, int sign) {
  const int n = static_cast<int>(axis == 0 ? m.rows() : m.cols());
  const int howmany = static_cast<int>(axis == 0 ? m.cols() : m.rows());
  const int stride = axis == 0 ? static_cast<int>(m.cols()) : 1;
  const int dist = axis == 0 ? 1 : static_cast<int>(m.cols());
  auto* data = reinterpret_cast<fftw_complex*>(m.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_many_dft(1, &n, howmany, data, nullptr, stride, dist, data, nullptr, stride,
                              dist, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  if (plan == nullptr) throw std::runtime_error("fourier2d: FFTW planning failed");
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

// One segment end: offset delta of the nearest node from the end, the side
// the nodes lie on (+1 right, -1 left) and derivative weights per order.
struct EndKind {
  int side;
  double delta;
  int nodes;
  std::array<std::vector<double>, kOrders> weights;
};

struct EndRef {
  std::size_t kind;
  long node;      // node nearest the end
  double offset;  // end position in node coordinates
};

// Per-line corrections: segment ends and nodes counted by two segments.
struct LinePlan {
  std::vector<EndRef> ends;
  std::vector<long> shared;
};

std::size_t intern_kind(std::vector<EndKind>& kinds, int side, double delta, int nodes) {
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i].side == side && kinds[i].delta == delta && kinds[i].nodes == nodes) return i;
  }
  std::vector<double> x;
  for (int j = 0; j < nodes; ++j) x.push_back(side * (j + delta));
  kinds.push_back({side, delta, nodes, detail::fornberg(0.0, x)});
  return kinds.size() - 1;
}

// Forward transform along one axis. Each line is cut at the jumps and, when
// `kink_axis` is given, at p_axis = p_other. The bulk is the plain DFT sum;
// every cut adds an endpoint correction built from one-sided derivative
// estimates, exact for piecewise cubics and spectrally accurate in between.
//
// Only the first `active` nodes carry data; the rest are zero padding.
void forward_axis(ComplexMatrix& m, int axis, const Grid1D& g, std::span<const double> jumps,
                  const Grid1D* kink_axis, std::size_t active) {
  const std::size_t n = g.count;
  const std::size_t lines = axis == 0 ? m.cols() : m.rows();
  auto idx = [&](std::size_t line, std::size_t k) {
    return axis == 0 ? k * m.cols() + line : line * m.cols() + k;
  };
  std::vector<double> jump_us;
  for (double b : jumps) {
    const double u = (b - g.start) / g.step;
    if (u > 0.0 && u < static_cast<double>(active - 1)) jump_us.push_back(u);
  }
  std::vector<EndKind> kinds;
  std::vector<LinePlan> plans(lines);
  for (std::size_t line = 0; line < lines; ++line) {
    std::vector<double> us = jump_us;
    if (kink_axis != nullptr) {
      detail::add_kink(us, (kink_axis->at(line) - g.start) / g.step, active);
    }
    const auto segments = detail::plan_segments(active, std::move(us));
    LinePlan& plan = plans[line];
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const Segment& s = segments[i];
      const int count = static_cast<int>(std::min<long>(kStencil, s.k1 - s.k0 + 1));
      plan.ends.push_back({intern_kind(kinds, +1, -s.el, count), s.k0,
                           static_cast<double>(s.k0) + s.el});
      plan.ends.push_back({intern_kind(kinds, -1, s.er, count), s.k1,
                           static_cast<double>(s.k1) + s.er});
      if (i + 1 < segments.size() && segments[i + 1].k0 == s.k1) plan.shared.push_back(s.k1);
    }
  }
  const ComplexMatrix original = m;
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx shift = std::polar(1.0, 2.0 * kPi * static_cast<double>((half * k) % n) /
                                           static_cast<double>(n));
    for (std::size_t line = 0; line < lines; ++line) m.data()[idx(line, k)] *= shift;
  }
  fft_lines(m, axis, FFTW_FORWARD);
  const Grid1D w = frequency_axis(g);
  const double scale = g.step / std::sqrt(2.0 * kPi);
  std::vector<std::vector<cplx>> kind_weights(kinds.size());
  for (std::size_t k = 0; k < n; ++k) {
    const double om = w.at(k);
    const double theta = om * g.step;
    // Node weights of each end kind, relative to the phase at the end.
    for (std::size_t q = 0; q < kinds.size(); ++q) {
      const EndKind& kind = kinds[q];
      const auto phi = detail::endpoint_excess(kind.side * theta, kind.delta);
      std::vector<cplx>& kw = kind_weights[q];
      kw.assign(kind.nodes, 0.0);
      double fact = 1.0, sign = 1.0;
      for (int d = 0; d < kOrders && d < kind.nodes; ++d) {
        for (int j = 0; j < kind.nodes; ++j) kw[j] += sign * phi[d] / fact * kind.weights[d][j];
        fact *= d + 1;
        sign *= kind.side;
      }
    }
    const cplx factor = scale * std::polar(1.0, -om * g.start);
    for (std::size_t line = 0; line < lines; ++line) {
      const LinePlan& plan = plans[line];
      cplx v = m.data()[idx(line, k)];
      for (const EndRef& e : plan.ends) {
        const EndKind& kind = kinds[e.kind];
        const std::vector<cplx>& kw = kind_weights[e.kind];
        cplx d = 0.0;
        for (int j = 0; j < kind.nodes; ++j) {
          d += kw[j] * original.data()[idx(line, static_cast<std::size_t>(e.node + kind.side * j))];
        }
        v -= std::polar(1.0, -theta * e.offset) * d;
      }
      for (long node : plan.shared) {
        v += std::polar(1.0, -theta * static_cast<double>(node)) *
             original.data()[idx(line, static_cast<std::size_t>(node))];
      }
      m.data()[idx(line, k)] = factor * v;
    }
  }
}

void inverse_axis(ComplexMatrix& m, int axis, const Grid1D& g) {
  const std::size_t n = g.count;
  const std::size_t lines = axis == 0 ? m.cols() : m.rows();
  auto at = [&](std::size_t line, std::size_t k) -> cplx& {
    return axis == 0 ? m(k, line) : m(line, k);
  };
  const Grid1D w = frequency_axis(g);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx factor = std::polar(1.0, w.at(k) * g.start);
    for (std::size_t line = 0; line < lines; ++line) at(line, k) *= factor;
  }
  fft_lines(m, axis, FFTW_BACKWARD);
  const std::size_t half = n / 2;
  const double scale = w.step / std::sqrt(2.0 * kPi);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx shift = scale * std::polar(1.0, -2.0 * kPi * static_cast<double>((half * k) % n) /
                                                   static_cast<double>(n));
    for (std::size_t line = 0; line < lines; ++line) at(line, k) *= shift;
  }
}

double edge_ratio(const ComplexMatrix& v) {
  double peak = 0.0, edge = 0.0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < v.cols(); ++j) {
      const double a = std::abs(v(i, j));
      peak = std::max(peak, a);
      if (i == 0 || j == 0 || i + 1 == v.rows() || j + 1 == v.cols()) edge = std::max(edge, a);
    }
  }
  return peak > 0.0 ? edge / peak : 0.0;
}

}  // namespace

Grid1D frequency_axis(const Grid1D& time_axis) {
  time_axis.validate();
  const double n = static_cast<double>(time_axis.count);
  const double dw = 2.0 * kPi / (n * time_axis.step);
  return Grid1D{-dw * static_cast<double>(time_axis.count / 2), dw, time_axis.count};
}

namespace {

ComplexMatrix transform(const Grid2D& grid, const ComplexMatrix& values,
                        std::span<const double> jumps, bool diagonal_kink) {
  if (!diagonal_kink) {
    ComplexMatrix m = values;
    forward_axis(m, 0, grid.axis1, jumps, nullptr, grid.axis1.count);
    forward_axis(m, 1, grid.axis2, jumps, nullptr, grid.axis2.count);
    return m;
  }
  // The kink's spectrum runs along w1 + w2 = 0 past the corners of the grid,
  // where a second DFT at the original step would fold it back. Resample p2
  // at a third of the step first (jumps on half steps stay between nodes),
  // then cut every p1 line at the kink and transform.
  constexpr std::size_t kRefine = 3;
  const Grid1D& a1 = grid.axis1;
  const Grid1D& a2 = grid.axis2;
  const std::size_t n1 = a1.count, n2 = a2.count;
  const Grid1D fine{a2.start, a2.step / kRefine, kRefine * n2};
  const std::size_t active = kRefine * (n2 - 1) + 1;
  std::vector<double> jump_us;
  for (double b : jumps) {
    const double u = (b - a2.start) / a2.step;
    if (u > 0.0 && u < static_cast<double>(n2 - 1)) jump_us.push_back(u);
  }
  std::vector<double> xs(active);
  for (std::size_t k = 0; k < active; ++k) xs[k] = static_cast<double>(k) / kRefine;
  ComplexMatrix m(n1, fine.count);
  std::vector<cplx> column(n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t k = 0; k < n2; ++k) column[k] = values(i, k);
    std::vector<double> us = jump_us;
    detail::add_kink(us, (a1.at(i) - a2.start) / a2.step, n2);
    const auto line = detail::resample_line(column, std::move(us), xs);
    for (std::size_t k = 0; k < active; ++k) m(i, k) = line[k];
  }
  forward_axis(m, 0, a1, jumps, &fine, n1);
  forward_axis(m, 1, fine, jumps, nullptr, active);
  // The fine frequency axis holds the original one at an offset of n2 nodes.
  ComplexMatrix out(n1, n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t k = 0; k < n2; ++k) out(i, k) = m(i, k + n2);
  }
  return out;
}

}  // namespace

ComplexMatrix fourier2d(const Grid2D& grid, const ComplexMatrix& values,
                        std::span<const double> jumps, bool diagonal_kink, double* boundary_ratio) {
  grid.validate();
  if (values.rows() != grid.axis1.count || values.cols() != grid.axis2.count) {
    throw std::invalid_argument("fourier2d: matrix shape does not match grid");
  }
  if (boundary_ratio != nullptr) *boundary_ratio = edge_ratio(values);
  ComplexMatrix out = transform(grid, values, jumps, diagonal_kink);
  // The two axis passes round differently; keep exchange symmetry exact.
  if (grid.square() && max_asymmetry(values) == 0.0) {
    for (std::size_t i = 0; i < out.rows(); ++i) {
      for (std::size_t k = i + 1; k < out.cols(); ++k) {
        const cplx mean = 0.5 * (out(i, k) + out(k, i));
        out(i, k) = mean;
        out(k, i) = mean;
      }
    }
  }
  return out;
}

FourierResult fourier2d(const TwoPhotonAmplitude& field) {
  if (field.domain != Domain::time) {
    throw std::invalid_argument("fourier2d: field is not in the time domain");
  }
  double ratio = 0.0;
  TwoPhotonAmplitude out;
  out.values = fourier2d(field.grid, field.values, field.jumps, field.diagonal_kink, &ratio);
  out.grid = {frequency_axis(field.grid.axis1), frequency_axis(field.grid.axis2)};
  out.domain = Domain::frequency;
  out.n2 = field.n2;
  return {std::move(out), ratio, ratio >= kBoundaryLeakRatio};
}

TwoPhotonAmplitude inverse_fourier2d(const TwoPhotonAmplitude& spectrum, const Grid2D& time_grid) {
  if (spectrum.domain != Domain::frequency) {
    throw std::invalid_argument("inverse_fourier2d: field is not in the frequency domain");
  }
  time_grid.validate();
  if (!(spectrum.grid.axis1 == frequency_axis(time_grid.axis1)) ||
      !(spectrum.grid.axis2 == frequency_axis(time_grid.axis2))) {
    throw std::invalid_argument("inverse_fourier2d: spectrum grid is not induced by time_grid");
  }
  TwoPhotonAmplitude out;
  out.values = spectrum.values;
  inverse_axis(out.values, 0, time_grid.axis1);
  inverse_axis(out.values, 1, time_grid.axis2);
  out.grid = time_grid;
  out.domain = Domain::time;
  out.n2 = spectrum.n2;
  return out;
}

}  // namespace tls2p
