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

#ifndef TLS2P_GRID_HPP_
#define TLS2P_GRID_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace tls2p {

using cplx = std::complex<double>;

// Uniform lattice start + k * step for k = 0 .. count - 1.
struct Grid1D {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 8;

  // Throws std::invalid_argument unless step > 0 and count >= 8.
  void validate() const;

  double at(std::size_t k) const { return start + static_cast<double>(k) * step; }
  double stop() const { return at(count - 1); }
  std::vector<double> nodes() const;

  // `points` nodes spanning [lo, hi] inclusive.
  static Grid1D spanning(double lo, double hi, std::size_t points);

  bool operator==(const Grid1D&) const = default;
};

struct Grid2D {
  Grid1D axis1;
  Grid1D axis2;

  void validate() const;
  bool square() const { return axis1 == axis2; }

  bool operator==(const Grid2D&) const = default;
};

// Dense row-major matrix; rows follow axis1, columns follow axis2.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  const std::vector<T>& values() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<cplx>;
using RealMatrix = Matrix<double>;

// Accuracy presets. `tight` backs oracles and tests; `figure` backs plots.
enum class ToleranceProfile { tight, figure };

struct Tolerances {
  double quad_tol;     // relative tolerance handed to adaptive_quad
  double fine_step;    // fine sampling step in units of the fastest rate
};

Tolerances tolerances(ToleranceProfile profile);

}  // namespace tls2p

#endif  // TLS2P_GRID_HPP_
