// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "qkdrates/bb84.hpp"
#include "qkdrates/common.hpp"

using namespace qkdrates;
using namespace qkdrates::bb84;

namespace {

// Reference link budget used throughout the comparison plots.
Bb84Params table_params(double mu) {
  Bb84Params p;
  p.rate_R = 1e9;
  p.eta = 0.005;
  p.eta_e = 0.01 * (1.0 - 0.005);
  p.n_d = 1e-4;
  p.f_l = 1.1;
  p.mu = mu;
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("bb84");

TEST_CASE("binary entropy") {
  CHECK(h2(0.0) == 0.0);
  CHECK(h2(1.0) == 0.0);
  CHECK(h2(0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h2(0.11) == doctest::Approx(0.499916).epsilon(1e-5));
  CHECK_THROWS_AS(h2(-0.01), domain_error);
  CHECK_THROWS_AS(h2(1.01), domain_error);
}

TEST_CASE("sift probability") {
  Bb84Params p;
  p.eta = 1.0;
  p.mu = 0.0;
  p.n_d = 0.0;
  CHECK(p_sift(p) == 0.0);

  p.eta = 0.5;
  p.mu = 0.2;  // eta*mu = 0.1
  CHECK(p_sift(p) == doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-12));

  double prev = -1.0;
  for (double mu : {0.01, 0.1, 1.0, 5.0}) {
    Bb84Params q = table_params(mu);
    CHECK(p_sift(q) > prev);
    prev = p_sift(q);
  }
}

TEST_CASE("conditional click probabilities") {
  // No dark counts: no vacuum sifts and no wrong-detector clicks.
  Bb84Params clean = table_params(0.3);
  clean.n_d = 0.0;
  ConditionalProbs cp = conditional_probs(clean);
  CHECK(cp.a0_given_b1 == 0.0);
  CHECK(cp.be == 0.0);

  for (double mu : {0.01, 0.3, 2.0}) {
    ConditionalProbs c = conditional_probs(table_params(mu));
    for (double pr : {c.a0_given_b1, c.a1_given_b1, c.be_given_a1b1, c.be}) {
      CHECK(pr >= 0.0);
      CHECK(pr <= 1.0);
    }
    CHECK(c.a0_given_b1 + c.a1_given_b1 <= 1.0 + 1e-12);
  }

  Bb84Params dead;
  dead.mu = 0.0;
  dead.n_d = 0.0;
  CHECK_THROWS_AS(conditional_probs(dead), domain_error);
}

TEST_CASE("key rate closed forms") {
  CHECK(skr_unrestricted(table_params(0.0)) == 0.0);
  CHECK(skr_restricted(table_params(0.0)) == 0.0);

  // Without dark counts the unrestricted rate collapses to
  // R * mu * eta * exp(-mu) / 2 (single-photon term only).
  for (double mu : {0.05, 0.5, 1.5}) {
    Bb84Params p = table_params(mu);
    p.n_d = 0.0;
    CHECK(skr_unrestricted(p) ==
          doctest::Approx(p.rate_R * mu * p.eta * std::exp(-mu) / 2.0)
              .epsilon(1e-12));
  }

  // Blind Eve: the restricted rate is the full sifted-and-corrected yield.
  Bb84Params blind = table_params(0.2);
  blind.eta_e = 0.0;
  ConditionalProbs c = conditional_probs(blind);
  CHECK(skr_restricted(blind) ==
        doctest::Approx(blind.rate_R * p_sift(blind) *
                        (1.0 - blind.f_l * h2(c.be)) / 2.0)
            .epsilon(1e-12));

  // Full leakage with bright pulses: nothing survives.
  Bb84Params leaky = table_params(5.0);
  leaky.eta_e = 0.995;
  CHECK(skr_restricted(leaky) == 0.0);

  // Restriction only helps.
  for (double mu : {0.01, 0.1, 1.0, 5.0}) {
    Bb84Params p = table_params(mu);
    CHECK(skr_restricted(p) >= skr_unrestricted(p));
    CHECK(skr_unrestricted(p) <= p.rate_R / 2.0);
  }
}

TEST_CASE("intensity optimization") {
  Bb84Params base = table_params(0.0);
  MuOptimum unres = optimize_mu(base, false);
  MuOptimum res = optimize_mu(base, true);
  CHECK(!unres.flat);
  CHECK(!res.flat);
  CHECK(unres.skr_star > 0.0);
  CHECK(res.skr_star > unres.skr_star);
  // Restricted collection tolerates brighter pulses.
  CHECK(res.mu_star > unres.mu_star);

  // Unrestricted Eve taking all lost light forces weak pulses.
  Bb84Params full = base;
  full.eta_e = 1.0 - full.eta;
  MuOptimum worst = optimize_mu(full, true);
  CHECK(worst.mu_star < 1.0);

  // Hopeless link: flat landscape flag.
  Bb84Params bad;
  bad.eta = 1e-3;
  bad.n_d = 0.3;
  bad.f_l = 1.2;
  bad.eta_e = 0.99;
  MuOptimum flat = optimize_mu(bad, true);
  CHECK(flat.flat);
  CHECK(flat.skr_star == 0.0);
}

TEST_CASE("pulse simulation") {
  Bb84Params p = table_params(0.1);
  PulseCounts a = simulate_pulses(p, 200000, 42);
  PulseCounts b = simulate_pulses(p, 200000, 42);
  CHECK(a.sifted == b.sifted);
  CHECK(a.sift_errors == b.sift_errors);
  CHECK(a.eve_zero_sifted == b.eve_zero_sifted);

  CHECK(a.pulses == 200000);
  CHECK(a.sift_errors <= a.sifted);
  CHECK(a.vacuum_sifted + a.single_sifted <= a.sifted);
  CHECK(a.single_errors <= a.single_sifted);

  // Agreement with the closed-form sift probability at 4 sigma.
  double p_b1 = p_sift(p);
  double sigma = std::sqrt(p_b1 * (1 - p_b1) / 200000.0);
  CHECK(std::abs(double(a.sifted) / 200000.0 - p_b1) <= 4.0 * sigma);

  // Bob plus Eve cannot exceed the photons that exist.
  Bb84Params impossible = table_params(0.1);
  impossible.eta = 0.7;
  impossible.eta_e = 0.5;
  CHECK_THROWS_AS(simulate_pulses(impossible, 10, 1), domain_error);
}

TEST_SUITE_END();
