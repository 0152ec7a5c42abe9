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

#ifndef TLS2P_CUMEXP_HPP_
#define TLS2P_CUMEXP_HPP_

#include <array>
#include <span>
#include <vector>

#include "tls2p/grid.hpp"

namespace tls2p {

// One step of the exponentially weighted running integral on a uniform grid.
//
// Over [t_k, t_k + h] the samples are replaced by the cubic through four
// neighbouring nodes and integrated against e^{-a (t_k + h - r)} exactly, so
// the recursion is fourth-order accurate and stable for Re(a) >= 0.
class CumExpRule {
 public:
  CumExpRule(cplx a, double h);

  cplx decay() const { return decay_; }
  // Weights for the step whose left node sits at stencil position `offset`
  // (0 for the first step, 1 in the interior, 2 for the last step).
  const std::array<cplx, 4>& weights(int offset) const { return w_[offset]; }

 private:
  cplx decay_;
  std::array<std::array<cplx, 4>, 3> w_;
};

// Returns I_k = e^{-a (t_k - t_0)} initial + \int_{t_0}^{t_k} e^{-a (t_k - r)} f(r) dr
// for every node t_k of `grid`. Requires Re(a) >= 0 and f.size() == grid.count.
std::vector<cplx> cumexp(cplx a, const Grid1D& grid, std::span<const cplx> f,
                         cplx initial = {});

}  // namespace tls2p

#endif  // TLS2P_CUMEXP_HPP_
