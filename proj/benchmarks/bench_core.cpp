// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the pieces that dominate sweep runtime.

#include <benchmark/benchmark.h>

#include "qkdrates/bb84.hpp"
#include "qkdrates/entanglement.hpp"
#include "qkdrates/key_rates.hpp"
#include "qkdrates/wiretap.hpp"

namespace {

using namespace qkdrates;

gauss::CovarianceMatrix ten_mode_state() {
  gauss::CovarianceMatrix v = gauss::tmsv_cov(0.7);
  for (int i = 0; i < 4; ++i) v = gauss::tensor(v, gauss::tmsv_cov(0.7 + 0.1 * i));
  for (int i = 0; i + 1 < 10; ++i)
    v = gauss::apply_symplectic(gauss::beamsplitter(0.6, i, i + 1, 10), v);
  return v;
}

void BM_SymplecticEigenvalues10(benchmark::State& state) {
  gauss::CovarianceMatrix v = ten_mode_state();
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss::symplectic_eigenvalues(v));
}
BENCHMARK(BM_SymplecticEigenvalues10);

void BM_RrThermalNumeric(benchmark::State& state) {
  wiretap::ChannelParams p{0.6, 0.1, 0.5, 10.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(rates::hashing_rr_numeric(p).bits_per_mode);
}
BENCHMARK(BM_RrThermalNumeric);

void BM_ClosestSepThreeMode(benchmark::State& state) {
  wiretap::JointState st =
      wiretap::build_joint_state(wiretap::ChannelParams{0.6, 0.1, 0.5, 10.0});
  gauss::CovarianceMatrix v = wiretap::marginal(st, {"A", "B", "F"});
  for (auto _ : state)
    benchmark::DoNotOptimize(bounds::closest_sep_three_mode(v).c);
}
BENCHMARK(BM_ClosestSepThreeMode);

void BM_GaussianRelativeEntropy(benchmark::State& state) {
  wiretap::JointState st =
      wiretap::build_joint_state(wiretap::ChannelParams{0.6, 0.1, 0.5, 10.0});
  gauss::CovarianceMatrix v = wiretap::marginal(st, {"A", "B", "F"});
  gauss::CovarianceMatrix w = bounds::closest_sep_three_mode(v).cov;
  for (auto _ : state)
    benchmark::DoNotOptimize(bounds::gaussian_relative_entropy(v, w));
}
BENCHMARK(BM_GaussianRelativeEntropy);

void BM_Bb84OptimizeMu(benchmark::State& state) {
  bb84::Bb84Params p;
  p.rate_R = 1e9;
  p.eta = 0.005;
  p.eta_e = 0.1 * (1.0 - p.eta);
  p.n_d = 1e-4;
  p.f_l = 1.1;
  for (auto _ : state)
    benchmark::DoNotOptimize(bb84::optimize_mu(p, true).skr_star);
}
BENCHMARK(BM_Bb84OptimizeMu);

}  // namespace

BENCHMARK_MAIN();
