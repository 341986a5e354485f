// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "doctest.h"
#include "qkdrates/gaussian.hpp"

using namespace qkdrates;
using namespace qkdrates::gauss;

TEST_SUITE_BEGIN("gaussian");

TEST_CASE("thermal entropy function") {
  CHECK(g_entropy(0.0) == 0.0);
  CHECK(g_entropy(1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(g_entropy(0.5) == doctest::Approx(1.3774437510817343).epsilon(1e-14));
  CHECK_THROWS_AS(g_entropy(-0.1), domain_error);
}

TEST_CASE("vacuum and thermal covariances") {
  CHECK(vacuum_cov(1).m.isIdentity(0.0));
  CHECK(vacuum_cov(3).m.isIdentity(0.0));
  CHECK(thermal_cov(0.0).m.isIdentity(0.0));
  CHECK(thermal_cov(1.0).m.isApprox(3.0 * Eigen::MatrixXd::Identity(2, 2)));
  CHECK(thermal_cov(0.5).m.isApprox(2.0 * Eigen::MatrixXd::Identity(2, 2)));
  CHECK(mean_photon(thermal_cov(0.7), thermal_cov(0.7).labels[0]) ==
        doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("two-mode squeezed vacuum") {
  CHECK(tmsv_cov(0.0).m.isIdentity(1e-15));

  CovarianceMatrix v = tmsv_cov(1.0);
  CHECK(v.m(v.x(0), v.x(0)) == doctest::Approx(3.0));
  CHECK(v.m(v.x(0), v.x(1)) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(v.m(v.p(0), v.p(1)) == doctest::Approx(-2.0 * std::sqrt(2.0)));
  CHECK(v.m(v.x(0), v.p(1)) == 0.0);

  // Pure state: both symplectic eigenvalues 1.
  for (double nu : symplectic_eigenvalues(v))
    CHECK(nu == doctest::Approx(1.0).epsilon(1e-12));

  // Each arm is thermal with mu photons.
  for (double mu : {0.3, 1.0, 7.5}) {
    CovarianceMatrix arm = partial_trace(tmsv_cov(mu), std::vector<int>{0});
    CHECK(arm.m.isApprox((2 * mu + 1) * Eigen::MatrixXd::Identity(2, 2), 1e-12));
    CHECK(von_neumann_entropy(arm) == doctest::Approx(g_entropy(mu)).epsilon(1e-12));
  }
}

TEST_CASE("symplectic form and beamsplitters") {
  Eigen::MatrixXd w = omega(2);
  CHECK((w + w.transpose()).isZero(0.0));
  CHECK((w * w).isApprox(-Eigen::MatrixXd::Identity(4, 4)));

  CHECK(beamsplitter(1.0, 0, 1, 2).m.isIdentity(1e-15));
  // t=0 swaps the modes up to a sign.
  SymplecticMatrix swap = beamsplitter(0.0, 0, 1, 2);
  CovarianceMatrix v = tensor(thermal_cov(2.0), vacuum_cov(1));
  CovarianceMatrix sw = apply_symplectic(swap, v);
  CHECK(partial_trace(sw, std::vector<int>{1}).m.isApprox(thermal_cov(2.0).m, 1e-12));

  for (double t : {0.2, 0.5, 0.77}) CHECK(is_symplectic(beamsplitter(t, 0, 2, 3).m));
}

TEST_CASE("beamsplitter on a TMSV arm") {
  const double mu = 0.8, eta = 0.6;
  CovarianceMatrix v = tensor(tmsv_cov(mu), vacuum_cov(1));
  v.labels = {"A", "Ap", "vac"};
  CovarianceMatrix out = apply_symplectic(beamsplitter(eta, 1, 2, 3), v);
  CovarianceMatrix b = partial_trace(out, std::vector<std::string>{"Ap"});
  CHECK(mean_photon(out, "Ap") == doctest::Approx(eta * mu).epsilon(1e-12));
  CHECK(von_neumann_entropy(b) == doctest::Approx(g_entropy(eta * mu)).epsilon(1e-12));
}

TEST_CASE("apply_symplectic basics") {
  CovarianceMatrix v = tmsv_cov(0.5);
  SymplecticMatrix id{Eigen::MatrixXd::Identity(4, 4)};
  CHECK(apply_symplectic(id, v).m.isApprox(v.m));

  // Balanced mixing of two identical thermal modes changes nothing marginally.
  CovarianceMatrix two = tensor(thermal_cov(1.3), thermal_cov(1.3));
  CovarianceMatrix mixed = apply_symplectic(beamsplitter(0.5, 0, 1, 2), two);
  CHECK(mixed.m.isApprox(two.m, 1e-12));
}

TEST_CASE("partial trace") {
  CovarianceMatrix v = tmsv_cov(2.0);
  CHECK(partial_trace(v, std::vector<int>{0, 1}).m.isApprox(v.m));
  CHECK(partial_trace(v, std::vector<int>{1}).m.isApprox(
      5.0 * Eigen::MatrixXd::Identity(2, 2), 1e-12));
  CHECK_THROWS_AS(partial_trace(v, std::vector<int>{2}), domain_error);
  CHECK_THROWS_AS(partial_trace(v, std::vector<std::string>{"nope"}), domain_error);

  // Entropy is additive over product states.
  CovarianceMatrix prod = tensor(thermal_cov(0.4), thermal_cov(1.7));
  CHECK(von_neumann_entropy(prod) ==
        doctest::Approx(g_entropy(0.4) + g_entropy(1.7)).epsilon(1e-12));
}

TEST_CASE("physicality checks") {
  CHECK(physicality_min_eig(vacuum_cov(2)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_NOTHROW(check_physical(vacuum_cov(2)));
  for (double mu : {0.1, 1.0, 100.0}) CHECK_NOTHROW(check_physical(tmsv_cov(mu)));

  CovarianceMatrix bad = vacuum_cov(1);
  bad.m *= 0.5;
  CHECK_THROWS_AS(check_physical(bad), physicality_error);
}

TEST_CASE("heterodyne conditioning") {
  // One TMSV arm conditions the other onto a coherent state.
  for (double mu : {0.2, 1.0, 10.0}) {
    CovarianceMatrix cond = heterodyne_condition(tmsv_cov(mu), 1);
    CHECK(cond.m.isApprox(Eigen::MatrixXd::Identity(2, 2), 1e-10));
  }
  // Uncorrelated modes are untouched.
  CovarianceMatrix prod = tensor(thermal_cov(0.9), thermal_cov(2.0));
  CovarianceMatrix cond = heterodyne_condition(prod, 0);
  CHECK(cond.m.isApprox(thermal_cov(2.0).m, 1e-12));
}

TEST_CASE("symplectic eigenvalues are invariant") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  CovarianceMatrix v = tensor(tensor(thermal_cov(0.3), thermal_cov(1.1)),
                              thermal_cov(2.6));
  std::vector<double> ref = symplectic_eigenvalues(v);
  for (int it = 0; it < 5; ++it) {
    SymplecticMatrix s = beamsplitter(u(rng), 0, 1, 3);
    s.m = beamsplitter(u(rng), 1, 2, 3).m * s.m;
    s.m = beamsplitter(u(rng), 0, 2, 3).m * s.m;
    std::vector<double> got = symplectic_eigenvalues(apply_symplectic(s, v));
    REQUIRE(got.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
      CHECK(got[i] == doctest::Approx(ref[i]).epsilon(1e-10));
  }
}

TEST_CASE("williamson decomposition") {
  CovarianceMatrix v = tensor(tensor(thermal_cov(0.5), thermal_cov(1.5)),
                              vacuum_cov(1));
  SymplecticMatrix mix = beamsplitter(0.3, 0, 1, 3);
  mix.m = beamsplitter(0.8, 1, 2, 3).m * mix.m;
  CovarianceMatrix w = apply_symplectic(mix, v);

  WilliamsonDecomposition wd = williamson(w);
  REQUIRE(wd.nu.size() == 3);
  CHECK(wd.nu[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(wd.nu[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(wd.nu[2] == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(is_symplectic(wd.s, 1e-8));

  Eigen::VectorXd d(6);
  d << wd.nu[0], wd.nu[1], wd.nu[2], wd.nu[0], wd.nu[1], wd.nu[2];
  CHECK((wd.s * d.asDiagonal() * wd.s.transpose()).isApprox(w.m, 1e-8));

  Eigen::MatrixXd inv = symplectic_inverse(wd.s);
  CHECK((inv * wd.s).isApprox(Eigen::MatrixXd::Identity(6, 6), 1e-8));
}

TEST_SUITE_END();
