// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "qkdrates/entanglement.hpp"
#include "qkdrates/key_rates.hpp"

using namespace qkdrates;
using namespace qkdrates::bounds;
using wiretap::ChannelParams;

namespace {

gauss::CovarianceMatrix abf_marginal(const ChannelParams& p) {
  return wiretap::marginal(wiretap::build_joint_state(p), {"A", "B", "F"});
}

}  // namespace

TEST_SUITE_BEGIN("entanglement");

TEST_CASE("partial transpose eigenvalue") {
  // Product of vacua saturates the uncertainty bound.
  CHECK(ppt_min_eig(gauss::vacuum_cov(2), {1}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // Entangled TMSV fails the criterion.
  CHECK(ppt_min_eig(gauss::tmsv_cov(1.0), {1}) < -0.1);
  CHECK_THROWS_AS(ppt_min_eig(gauss::vacuum_cov(2), {2}), domain_error);
}

TEST_CASE("closest separable two-mode state") {
  CHECK(closest_sep_two_mode(3.0, 3.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(closest_sep_two_mode(1.0, 17.0) == 0.0);
  CHECK_THROWS_AS(closest_sep_two_mode(0.5, 3.0), domain_error);

  // The candidate it builds sits exactly on the separability boundary.
  SeparableCandidate cand = two_mode_candidate(3.0, 3.0);
  CHECK_NOTHROW(gauss::check_physical(cand.cov));
  CHECK(std::abs(ppt_min_eig(cand.cov, {1})) <= 1e-9);
}

TEST_CASE("three-mode search reduces to two modes when F decouples") {
  // TMSV x vacuum in (A, B, F) order: e = f = 0.
  gauss::CovarianceMatrix v = gauss::tensor(gauss::tmsv_cov(1.0),
                                            gauss::vacuum_cov(1));
  v.labels = {"A", "B", "F"};
  SeparableCandidate cand = closest_sep_three_mode(v);
  CHECK(cand.c == doctest::Approx(closest_sep_two_mode(3.0, 3.0)).epsilon(1e-8));
}

TEST_CASE("three-mode search on the pure loss channel") {
  // Already separable input comes back unchanged.
  SeparableCandidate vac = closest_sep_three_mode(abf_marginal({0.6, 0.1, 0.0, 0.0}));
  CHECK(vac.limited_by == Binding::none);
  CHECK(gaussian_relative_entropy(abf_marginal({0.6, 0.1, 0.0, 0.0}), vac.cov) ==
        doctest::Approx(0.0).epsilon(1e-9));

  // Regression anchor for the searched correlation at eta=0.6, kappa=0.1, mu=10.
  gauss::CovarianceMatrix v = abf_marginal({0.6, 0.1, 0.0, 10.0});
  SeparableCandidate cand = closest_sep_three_mode(v);
  CHECK(cand.c == doctest::Approx(15.110404505648562).epsilon(1e-9));
  CHECK_NOTHROW(gauss::check_physical(cand.cov));
  CHECK(cand.min_ppt_eig >= -1e-9);

  // Shape violations are rejected.
  gauss::CovarianceMatrix two = gauss::tmsv_cov(1.0);
  CHECK_THROWS_AS(closest_sep_three_mode(two), domain_error);
}

TEST_CASE("gaussian relative entropy") {
  gauss::CovarianceMatrix v = gauss::tmsv_cov(1.0);
  CHECK(gaussian_relative_entropy(v, v) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(gaussian_relative_entropy(gauss::vacuum_cov(1), gauss::thermal_cov(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // No support: a pure target cannot cover a mixed state.
  CHECK(std::isinf(
      gaussian_relative_entropy(gauss::thermal_cov(1.0), gauss::vacuum_cov(1))));
  CHECK_THROWS_AS(
      gaussian_relative_entropy(gauss::vacuum_cov(1), gauss::vacuum_cov(2)),
      domain_error);
}

TEST_CASE("pure loss upper bound closed form") {
  CHECK(er_upper_bound_pure_loss(0.6, 0.1) == doctest::Approx(4.0).epsilon(1e-12));
  // Full collection recovers the repeater-less bound, exactly.
  for (double eta : {0.1, 0.5, 0.9})
    CHECK(er_upper_bound_pure_loss(eta, 1.0) == -std::log2(1.0 - eta));
  // Dominates both lower bounds.
  for (double eta : {0.3, 0.6, 0.9})
    for (double kappa : {0.1, 0.5, 1.0}) {
      double ub = er_upper_bound_pure_loss(eta, kappa);
      CHECK(ub >= rates::dr_pure_loss_limit(eta, kappa).bits_per_mode - 1e-12);
      CHECK(ub >= rates::rr_pure_loss_limit(eta, kappa).bits_per_mode - 1e-12);
    }
}

TEST_CASE("numeric upper bound") {
  std::vector<double> sched = default_mu_schedule();
  REQUIRE(sched.size() == 17);
  CHECK(sched.front() == doctest::Approx(1.0));
  CHECK(sched.back() == doctest::Approx(1e4).epsilon(1e-9));

  // Matches the closed form for pure loss.
  UpperBoundResult r = er_upper_bound_numeric(ChannelParams{0.5, 1.0, 0.0, 1.0});
  CHECK(r.bits == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(r.per_mu.size() == sched.size());

  // Near-tight against the reverse lower bound as kappa -> 1.
  double ub = er_upper_bound_numeric(ChannelParams{0.5, 0.999, 0.0, 1.0}).bits;
  double lb = rates::rr_pure_loss_limit(0.5, 0.999).bits_per_mode;
  CHECK(ub >= lb - 1e-6);
  CHECK(ub - lb <= 1e-2);

  // Thermal case still dominates the lower bounds.
  ChannelParams th{0.5, 0.1, 0.5, 1.0};
  double ub_th = er_upper_bound_numeric(th).bits;
  CHECK(ub_th >= rates::dr_thermal_limit(0.5, 0.1, 0.5).bits_per_mode - 1e-6);
  CHECK(ub_th >= rates::rr_thermal_limit(0.5, 0.1, 0.5).bits_per_mode - 1e-6);

  // The schedule must increase.
  CHECK_THROWS_AS(er_upper_bound_numeric(th, std::vector<double>{2.0, 1.0}),
                  domain_error);
}

TEST_SUITE_END();
