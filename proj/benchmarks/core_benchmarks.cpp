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


#include <vector>

#include <benchmark/benchmark.h>

#include "tls2p/cumexp.hpp"
#include "tls2p/fourier2d.hpp"
#include "tls2p/lti.hpp"
#include "tls2p/one_channel.hpp"
#include "tls2p/two_channel.hpp"

namespace tls2p {
namespace {

TwoPhotonInput exp_fock() { return TwoPhotonInput::fock(PulseSpec::rising_exp(0.1)); }

Grid1D window_axis(const TwoPhotonInput& in, double rate, std::size_t n) {
  return aligned_axis(scattering_window(in, rate), n, in.breakpoints());
}

void BM_CumExp(benchmark::State& state) {
  const Grid1D g{-10.0, 0.01, static_cast<std::size_t>(state.range(0))};
  std::vector<cplx> f(g.count);
  for (std::size_t k = 0; k < g.count; ++k) f[k] = std::exp(-0.1 * g.at(k) * g.at(k));
  for (auto _ : state) benchmark::DoNotOptimize(cumexp({0.5, 0.2}, g, f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CumExp)->Arg(1 << 10)->Arg(1 << 14);

void BM_ConvolveScalar(benchmark::State& state) {
  const Grid1D g = Grid1D::spanning(-10.0, 20.0, 3001);
  const auto xi = PulseSpec::gaussian(1.46, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_scalar({1.0, 0.0}, xi, g));
}
BENCHMARK(BM_ConvolveScalar)->Unit(benchmark::kMillisecond);

void BM_EtaTime(benchmark::State& state) {
  const auto in = exp_fock();
  const Grid1D g = window_axis(in, 0.5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eta_time({0.5, 0.0}, in, {g, g}));
}
BENCHMARK(BM_EtaTime)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_EtaFreq(benchmark::State& state) {
  const auto in = exp_fock();
  const Grid1D g = Grid1D::spanning(-1.0, 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eta_freq({0.5, 0.0}, in, {g, g}));
}
BENCHMARK(BM_EtaFreq)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Fourier2d(benchmark::State& state) {
  const auto in = exp_fock();
  const Grid1D g = window_axis(in, 0.5, static_cast<std::size_t>(state.range(0)));
  auto field = eta_time({0.5, 0.0}, in, {g, g});
  field.diagonal_kink = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(fourier2d(field));
}
BENCHMARK(BM_Fourier2d)
    ->ArgsProduct({{256, 512}, {0, 1}})
    ->ArgNames({"n", "kink"})
    ->Unit(benchmark::kMillisecond);

void BM_EtaIjTime(benchmark::State& state) {
  const auto in = exp_fock();
  const TwoChannelParams p{0.1, 0.1};
  const Grid1D g = window_axis(in, 0.2, 256);
  const auto path = state.range(0) ? TwoChannelPath::general : TwoChannelPath::equal_coupling;
  for (auto _ : state) benchmark::DoNotOptimize(eta_ij_time(p, in, {g, g}, path));
}
BENCHMARK(BM_EtaIjTime)->Arg(0)->Arg(1)->ArgName("general")->Unit(benchmark::kMillisecond);

void BM_TijFreq(benchmark::State& state) {
  const auto in = exp_fock();
  const Grid1D g = Grid1D::spanning(-1.0, 1.0, 129);
  for (auto _ : state) benchmark::DoNotOptimize(T_ij_freq({0.1, 0.1}, in, {g, g}));
}
BENCHMARK(BM_TijFreq)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tls2p

BENCHMARK_MAIN();
