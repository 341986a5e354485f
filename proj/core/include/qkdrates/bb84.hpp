// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Asymptotic decoy-state BB84 secret key rates over a lossy channel with
// dark counts, for an unrestricted eavesdropper and for one that only
// collects a fraction of the lost light. Includes a pulse-by-pulse
// Monte Carlo cross-check of the click statistics.
#pragma once

#include <cstdint>

namespace qkdrates::bb84 {

struct Bb84Params {
  double rate_R = 1.0;  // pulse rate, pulses/s
  double eta = 1.0;     // Alice-to-Bob transmissivity, (0, 1]
  double eta_e = 0.0;   // Alice-to-Eve transmissivity, [0, 1)
  double n_d = 0.0;     // mean dark counts per detector per pulse window
  double f_l = 1.0;     // reconciliation inefficiency, >= 1
  double mu = 0.0;      // signal mean photon number

  void validate() const;
};

// Binary entropy in bits; h2(0) = h2(1) = 0.
double h2(double p);

// Probability that exactly one of Bob's two detectors clicks.
double p_sift(const Bb84Params& params);

struct ConditionalProbs {
  double a0_given_b1 = 0;     // Alice sent vacuum | sifted
  double a1_given_b1 = 0;     // Alice sent a single photon | sifted
  double be_given_a1b1 = 0;   // wrong detector | single photon and sifted
  double be = 0;              // wrong detector | sifted
};

ConditionalProbs conditional_probs(const Bb84Params& params);

// Key rates in bits/s, clamped at zero.
double skr_unrestricted(const Bb84Params& params);
double skr_restricted(const Bb84Params& params);

struct MuOptimum {
  double mu_star = 0;
  double skr_star = 0;
  bool flat = false;  // no positive rate anywhere on the bracket
};

// Coarse log-grid scan plus golden-section refinement of the signal
// intensity. `base.mu` is ignored.
MuOptimum optimize_mu(const Bb84Params& base, bool restricted,
                      double mu_lo = 1e-3, double mu_hi = 10.0,
                      int coarse_points = 200);

// Tallies from the Monte Carlo pulse simulation.
struct PulseCounts {
  std::uint64_t pulses = 0;
  std::uint64_t sifted = 0;            // exactly one detector clicked
  std::uint64_t sift_errors = 0;       // the wrong detector clicked
  std::uint64_t vacuum_sifted = 0;     // sifted with 0 photons sent
  std::uint64_t single_sifted = 0;     // sifted with 1 photon sent
  std::uint64_t single_errors = 0;     // error among single-photon pulses
  std::uint64_t eve_zero_sifted = 0;   // sifted with Eve collecting 0 photons
};

// Simulates matched-basis pulses: Poisson photon numbers, binomial
// transmission to Bob and to Eve, Bernoulli dark counts per detector.
PulseCounts simulate_pulses(const Bb84Params& params, std::uint64_t n_pulses,
                            std::uint64_t seed);

}  // namespace qkdrates::bb84
