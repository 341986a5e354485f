// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "qkdrates/wiretap.hpp"

using namespace qkdrates;
using namespace qkdrates::wiretap;

TEST_SUITE_BEGIN("wiretap");

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ChannelParams{1.2, 0.5}).validate(), domain_error);
  CHECK_THROWS_AS((ChannelParams{0.0, 0.5}).validate(), domain_error);
  CHECK_THROWS_AS((ChannelParams{0.5, -0.1}).validate(), domain_error);
  CHECK_THROWS_AS((ChannelParams{0.5, 0.5, -1.0}).validate(), domain_error);
  CHECK_THROWS_AS((ChannelParams{0.5, 0.5, 0.0, -1.0}).validate(), domain_error);
  CHECK_NOTHROW((ChannelParams{0.5, 1.0, 0.0, 0.0}).validate());
}

TEST_CASE("pure loss photon bookkeeping") {
  const double eta = 0.6, kappa = 0.3, mu = 2.0;
  JointState st = build_joint_state({eta, kappa, 0.0, mu});
  REQUIRE(st.cov.labels == std::vector<std::string>{"A", "B", "E", "F"});
  CHECK(gauss::mean_photon(st.cov, "A") == doctest::Approx(mu).epsilon(1e-12));
  CHECK(gauss::mean_photon(st.cov, "B") == doctest::Approx(eta * mu).epsilon(1e-12));
  CHECK(gauss::mean_photon(st.cov, "E") ==
        doctest::Approx(kappa * (1 - eta) * mu).epsilon(1e-12));
  CHECK(gauss::mean_photon(st.cov, "F") ==
        doctest::Approx((1 - kappa) * (1 - eta) * mu).epsilon(1e-12));

  // Eve's collected mode is exactly thermal.
  gauss::CovarianceMatrix e = marginal(st, {"E"});
  CHECK(e.m.isApprox(gauss::thermal_cov(kappa * (1 - eta) * mu).m, 1e-12));
  // Alice's retained arm is untouched.
  CHECK(marginal(st, {"A"}).m.isApprox(
      (2 * mu + 1) * Eigen::MatrixXd::Identity(2, 2), 1e-12));
}

TEST_CASE("degenerate settings") {
  // kappa=1: nothing reaches the environment.
  JointState all_eve = build_joint_state({0.7, 1.0, 0.0, 1.5});
  CHECK(marginal(all_eve, {"F"}).m.isIdentity(1e-12));
  // No input photons: everything is vacuum.
  JointState dark = build_joint_state({0.7, 0.3, 0.0, 0.0});
  CHECK(dark.cov.m.isIdentity(1e-12));
}

TEST_CASE("thermal wiring") {
  const double eta = 0.8, kappa = 0.4, ne = 1.0, mu = 2.0;
  JointState st = build_joint_state({eta, kappa, ne, mu});
  REQUIRE(st.cov.labels == std::vector<std::string>{"A", "B", "E", "R", "F"});

  CHECK(gauss::mean_photon(st.cov, "R") == doctest::Approx(ne).epsilon(1e-12));
  CHECK(gauss::mean_photon(st.cov, "B") ==
        doctest::Approx(eta * mu + (1 - eta) * ne).epsilon(1e-12));
  CHECK(gauss::mean_photon(st.cov, "E") ==
        doctest::Approx(kappa * ((1 - eta) * mu + eta * ne)).epsilon(1e-12));

  // The five-mode state is globally pure...
  for (double nu : gauss::symplectic_eigenvalues(st.cov))
    CHECK(nu == doctest::Approx(1.0).epsilon(1e-9));
  // ...so complementary marginals have equal entropy.
  CHECK(gauss::von_neumann_entropy(marginal(st, {"A", "B", "E", "F"})) ==
        doctest::Approx(gauss::von_neumann_entropy(marginal(st, {"R"})))
            .epsilon(1e-9));
  CHECK(gauss::von_neumann_entropy(marginal(st, {"A", "B"})) ==
        doctest::Approx(gauss::von_neumann_entropy(marginal(st, {"E", "R", "F"})))
            .epsilon(1e-9));
}

TEST_CASE("marginal order follows the request") {
  JointState st = build_joint_state({0.5, 0.5, 0.5, 1.0});
  gauss::CovarianceMatrix ab = marginal(st, {"A", "B"});
  gauss::CovarianceMatrix ba = marginal(st, {"B", "A"});
  CHECK(ab.labels == std::vector<std::string>{"A", "B"});
  CHECK(ba.labels == std::vector<std::string>{"B", "A"});
  CHECK(ab.m(ab.x(0), ab.x(0)) == ba.m(ba.x(1), ba.x(1)));
  CHECK_THROWS_AS(marginal(st, {"Z"}), domain_error);
}

TEST_SUITE_END();
