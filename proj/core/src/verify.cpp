// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "qkdrates/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "qkdrates/bb84.hpp"
#include "qkdrates/entanglement.hpp"
#include "qkdrates/fock.hpp"
#include "qkdrates/gaussian.hpp"
#include "qkdrates/key_rates.hpp"
#include "qkdrates/sweep.hpp"
#include "qkdrates/wiretap.hpp"

namespace qkdrates::verify {

namespace {

using wiretap::ChannelParams;

constexpr std::uint64_t kSeed = 20260823;

// Accumulates pass/fail plus the worst margin seen, for the detail line.
struct Tally {
  bool pass = true;
  double worst = 0;
  std::string note;

  void expect(bool ok, double margin, const std::string& what) {
    worst = std::max(worst, margin);
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

CheckResult done(const std::string& name, const Tally& t, const std::string& ok_detail) {
  return {name, t.pass, t.pass ? ok_detail : t.note};
}

// 1. kappa = 1 reduces both the reverse limit and the upper bound to the
// unrestricted repeater-less capacity -log2(1 - eta).
CheckResult check_plob_reduction() {
  Tally t;
  for (int i = 1; i <= 9; ++i) {
    double eta = i / 10.0;
    double target = -std::log2(1.0 - eta);
    double rr = rates::rr_pure_loss_limit(eta, 1.0).bits_per_mode;
    double ub = bounds::er_upper_bound_pure_loss(eta, 1.0);
    t.expect(std::abs(rr - target) <= 1e-9, std::abs(rr - target),
             "rr limit off at eta=" + fmt(eta) + " by " + fmt(rr - target));
    t.expect(ub == target, std::abs(ub - target),
             "upper bound not exactly -log2(1-eta) at eta=" + fmt(eta));
  }
  return done("plob-reduction-kappa-1", t,
              "9 transmissivities, worst gap " + fmt(t.worst));
}

// 2. Closed forms against the conditioning pipeline.
CheckResult check_closed_vs_numeric() {
  Tally t;
  const double grid[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  const double nes[] = {0.0, 0.5, 1.0};
  const double mus[] = {0.1, 1.0, 10.0};
  for (double eta : grid)
    for (double kappa : grid)
      for (double ne : nes)
        for (double mu : mus) {
          ChannelParams p{eta, kappa, ne, mu};
          double dr_c = ne == 0.0
                            ? rates::dr_pure_loss(eta, kappa, mu).bits_per_mode
                            : rates::dr_thermal(p).bits_per_mode;
          double rr_c = ne == 0.0
                            ? rates::rr_pure_loss(eta, kappa, mu).bits_per_mode
                            : rates::rr_thermal(p).bits_per_mode;
          double dr_n = rates::hashing_dr_numeric(p).bits_per_mode;
          double rr_n = rates::hashing_rr_numeric(p).bits_per_mode;
          double tol_dr = std::max(1e-9 * std::abs(dr_c), 1e-12);
          double tol_rr = std::max(1e-9 * std::abs(rr_c), 1e-12);
          t.expect(std::abs(dr_c - dr_n) <= tol_dr, std::abs(dr_c - dr_n),
                   "direct mismatch " + fmt(dr_c - dr_n) + " at eta=" + fmt(eta) +
                       " kappa=" + fmt(kappa) + " ne=" + fmt(ne) + " mu=" + fmt(mu));
          t.expect(std::abs(rr_c - rr_n) <= tol_rr, std::abs(rr_c - rr_n),
                   "reverse mismatch " + fmt(rr_c - rr_n) + " at eta=" + fmt(eta) +
                       " kappa=" + fmt(kappa) + " ne=" + fmt(ne) + " mu=" + fmt(mu));
        }
  return done("closed-vs-numeric-rates", t,
              "225 grid points, worst |closed-numeric| " + fmt(t.worst));
}

// 3. Asymptotic forms against the finite-mu forms at mu = 1e6.
CheckResult check_thermal_asymptote() {
  Tally t;
  const double grid[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  const double nes[] = {0.0, 0.5, 1.0};
  for (double eta : grid)
    for (double kappa : grid)
      for (double ne : nes) {
        ChannelParams p{eta, kappa, ne, 1e6};
        double dr_gap = rates::dr_thermal_limit(eta, kappa, ne).bits_per_mode -
                        rates::dr_thermal(p).bits_per_mode;
        double rr_gap = rates::rr_thermal_limit(eta, kappa, ne).bits_per_mode -
                        rates::rr_thermal(p).bits_per_mode;
        t.expect(std::abs(dr_gap) <= 1e-3, std::abs(dr_gap),
                 "direct asymptote gap " + fmt(dr_gap) + " at eta=" + fmt(eta) +
                     " kappa=" + fmt(kappa) + " ne=" + fmt(ne));
        t.expect(std::abs(rr_gap) <= 1e-3, std::abs(rr_gap),
                 "reverse asymptote gap " + fmt(rr_gap) + " at eta=" + fmt(eta) +
                     " kappa=" + fmt(kappa) + " ne=" + fmt(ne));
      }
  return done("thermal-asymptote-convergence", t,
              "75 grid points, worst gap " + fmt(t.worst));
}

// 4. Direct/reverse ordering flips between kappa = 0.1 and 0.9 at eta = 0.6.
CheckResult check_crossover() {
  Tally t;
  double dr01 = rates::dr_pure_loss_limit(0.6, 0.1).bits_per_mode;
  double rr01 = rates::rr_pure_loss_limit(0.6, 0.1).bits_per_mode;
  double dr09 = rates::dr_pure_loss_limit(0.6, 0.9).bits_per_mode;
  double rr09 = rates::rr_pure_loss_limit(0.6, 0.9).bits_per_mode;
  t.expect(std::abs(dr01 - 3.906891) <= 1e-5, std::abs(dr01 - 3.906891),
           "direct limit at kappa=0.1 is " + fmt(dr01));
  t.expect(std::abs(rr01 - 3.385387) <= 1e-5, std::abs(rr01 - 3.385387),
           "reverse limit at kappa=0.1 is " + fmt(rr01));
  t.expect(dr01 > rr01, 0.0, "no direct advantage at kappa=0.1");
  t.expect(rr09 > dr09, 0.0, "no reverse advantage at kappa=0.9");
  return done("dr-rr-crossover", t,
              "direct " + fmt(dr01) + " > reverse " + fmt(rr01) +
                  " at kappa=0.1; order flips at 0.9");
}

// 5. Pure loss upper bound: closed form value and the three-mode search.
CheckResult check_pure_loss_ub() {
  Tally t;
  double ub = bounds::er_upper_bound_pure_loss(0.6, 0.1);
  t.expect(std::abs(ub - 4.0) <= 1e-9, std::abs(ub - 4.0),
           "closed form at (0.6, 0.1) is " + fmt(ub));
  for (double eta : {0.3, 0.6, 0.9})
    for (double kappa : {0.1, 0.5, 0.9}) {
      double closed = bounds::er_upper_bound_pure_loss(eta, kappa);
      bounds::UpperBoundResult num =
          bounds::er_upper_bound_numeric(ChannelParams{eta, kappa, 0.0, 1.0});
      t.expect(std::abs(num.bits - closed) <= 1e-2, std::abs(num.bits - closed),
               "search is " + fmt(num.bits - closed) + " from closed form at eta=" +
                   fmt(eta) + " kappa=" + fmt(kappa));
    }
  return done("pure-loss-upper-bound", t,
              "closed form exact; search within " + fmt(t.worst) + " over 9 pairs");
}

// 6. Upper bound dominates both lower bounds across the loss/noise grids.
CheckResult check_sandwich() {
  Tally t;
  double worst_margin = 1e300;
  for (int db = 2; db <= 20; db += 2)
    for (double kappa : {0.01, 0.1, 0.5})
      for (double ne : {0.0, 0.05, 0.5}) {
        double eta = std::pow(10.0, -db / 10.0);
        double lb =
            std::max({rates::dr_thermal_limit(eta, kappa, ne).bits_per_mode,
                      rates::rr_thermal_limit(eta, kappa, ne).bits_per_mode, 0.0});
        double ub =
            ne == 0.0
                ? bounds::er_upper_bound_pure_loss(eta, kappa)
                : bounds::er_upper_bound_numeric(ChannelParams{eta, kappa, ne, 1.0})
                      .bits;
        worst_margin = std::min(worst_margin, ub - lb);
        t.expect(ub >= lb - 1e-6, std::max(lb - ub, 0.0),
                 "bound inversion " + fmt(lb - ub) + " at loss " +
                     std::to_string(db) + " dB, kappa=" + fmt(kappa) +
                     ", ne=" + fmt(ne));
      }
  return done("upper-lower-sandwich", t,
              "90 grid points, tightest margin " + fmt(worst_margin));
}

fock::FockState wire_pure_loss(double eta, double kappa, double mu, int dim) {
  fock::FockState st =
      fock::tensor(fock::tmsv_fock(mu, dim), fock::vacuum_fock(2, dim));
  st = fock::beamsplitter_fock(eta, 1, 2, st);
  return fock::beamsplitter_fock(kappa, 2, 3, st);
}

fock::FockState wire_thermal(double eta, double kappa, double mu, double ne,
                             int dim) {
  fock::FockState st = fock::tensor(
      fock::tensor(fock::tmsv_fock(mu, dim), fock::tmsv_fock(ne, dim)),
      fock::vacuum_fock(1, dim));
  st = fock::beamsplitter_fock(eta, 1, 2, st);
  return fock::beamsplitter_fock(kappa, 2, 4, st);
}

// 7. Truncated-basis oracle agrees with the covariance pipeline.
CheckResult check_fock() {
  Tally t;

  // Analytic anchor: D(vacuum || thermal nbar=1) = 1 bit.
  {
    const int d = 40;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    rho(0, 0) = 1.0;
    Eigen::MatrixXcd sig = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) sig(n, n) = 0.5 * std::pow(0.5, n);
    double dv = fock::relative_entropy_fock(rho, sig);
    t.expect(std::abs(dv - 1.0) <= 1e-6, std::abs(dv - 1.0),
             "vacuum-vs-thermal relative entropy is " + fmt(dv));
  }

  const double eta = 0.6, kappa = 0.5, mu = 0.2;

  // Pure loss wiring at dim 25, tolerance 1e-4.
  {
    const int dim = 25;
    fock::FockState st = wire_pure_loss(eta, kappa, mu, dim);
    wiretap::JointState gs = wiretap::build_joint_state({eta, kappa, 0.0, mu});
    const std::vector<std::vector<int>> subsets = {{0}, {1}, {2}, {3}, {0, 1}};
    const std::vector<std::vector<std::string>> labels = {
        {"A"}, {"B"}, {"E"}, {"F"}, {"A", "B"}};
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      double hf = fock::entropy_fock(st, subsets[i]);
      double hg = gauss::von_neumann_entropy(wiretap::marginal(gs, labels[i]));
      t.expect(std::abs(hf - hg) <= 1e-4, std::abs(hf - hg),
               "pure loss marginal entropy gap " + fmt(hf - hg));
    }
    gauss::CovarianceMatrix v_abf = wiretap::marginal(gs, {"A", "B", "F"});
    bounds::SeparableCandidate cand = bounds::closest_sep_three_mode(v_abf);
    double dg = bounds::gaussian_relative_entropy(v_abf, cand.cov);
    double df = fock::relative_entropy_vs_gaussian(st, {0, 1, 3}, cand.cov);
    t.expect(std::abs(dg - df) <= 1e-4, std::abs(dg - df),
             "pure loss relative entropy gap " + fmt(dg - df));
  }

  // Thermal wiring at dim 12, tolerance 1e-3.
  {
    const int dim = 12;
    const double ne = 0.2;
    fock::FockState st = wire_thermal(eta, kappa, mu, ne, dim);
    wiretap::JointState gs = wiretap::build_joint_state({eta, kappa, ne, mu});
    const std::vector<std::vector<int>> subsets = {{0}, {1}, {2}, {3}, {4}, {2, 3}};
    const std::vector<std::vector<std::string>> labels = {
        {"A"}, {"B"}, {"E"}, {"R"}, {"F"}, {"E", "R"}};
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      double hf = fock::entropy_fock(st, subsets[i]);
      double hg = gauss::von_neumann_entropy(wiretap::marginal(gs, labels[i]));
      t.expect(std::abs(hf - hg) <= 1e-3, std::abs(hf - hg),
               "thermal marginal entropy gap " + fmt(hf - hg));
    }
    gauss::CovarianceMatrix v_abf = wiretap::marginal(gs, {"A", "B", "F"});
    bounds::SeparableCandidate cand = bounds::closest_sep_three_mode(v_abf);
    double dg = bounds::gaussian_relative_entropy(v_abf, cand.cov);
    double df = fock::relative_entropy_vs_gaussian(st, {0, 1, 4}, cand.cov);
    t.expect(std::abs(dg - df) <= 1e-3, std::abs(dg - df),
             "thermal relative entropy gap " + fmt(dg - df) + " (leakage " +
                 fmt(st.leakage) + ")");
  }
  return done("fock-oracle-equivalence", t,
              "entropies and divergences agree, worst gap " + fmt(t.worst));
}

// 8. Decoy BB84 at the reference link budget, with the Monte Carlo oracle.
// The collection fraction is kappa = 0.1: small enough to show the
// restricted advantage, large enough that the restricted optimum stays
// inside the standard intensity bracket.
CheckResult check_bb84() {
  Tally t;
  bb84::Bb84Params base;
  base.rate_R = 1e9;
  base.eta = 0.005;
  base.eta_e = 0.1 * (1.0 - 0.005);  // kappa = 0.1
  base.n_d = 1e-4;
  base.f_l = 1.1;

  // Restricted collection dominates pointwise in mu.
  int positive = 0;
  for (double mu : sweep::logspace(1e-3, 10.0, 61)) {
    bb84::Bb84Params p = base;
    p.mu = mu;
    double unres = bb84::skr_unrestricted(p);
    double res = bb84::skr_restricted(p);
    t.expect(res >= unres, std::max(unres - res, 0.0),
             "unrestricted exceeds restricted at mu=" + fmt(mu));
    if (res > 0.0 || unres > 0.0) {
      ++positive;
      t.expect(res > unres, 0.0, "no strict advantage at mu=" + fmt(mu));
    }
  }
  t.expect(positive > 0, 0.0, "no positive rate anywhere on the bracket");

  // Interior optima for both adversary models.
  for (bool restricted : {false, true}) {
    bb84::MuOptimum opt = bb84::optimize_mu(base, restricted);
    auto rate_at = [&](double mu) {
      bb84::Bb84Params p = base;
      p.mu = mu;
      return restricted ? bb84::skr_restricted(p) : bb84::skr_unrestricted(p);
    };
    bool interior = !opt.flat && opt.mu_star > 2e-3 && opt.mu_star < 9.95 &&
                    opt.skr_star > rate_at(1e-3) && opt.skr_star > rate_at(10.0);
    t.expect(interior, 0.0,
             std::string(restricted ? "restricted" : "unrestricted") +
                 " optimum not interior (mu*=" + fmt(opt.mu_star) + ")");
  }

  // Monte Carlo pulse oracle at mu = 0.1.
  bb84::Bb84Params p = base;
  p.mu = 0.1;
  const std::uint64_t n = 10'000'000;
  bb84::PulseCounts counts = bb84::simulate_pulses(p, n, kSeed);
  double pb1 = bb84::p_sift(p);
  bb84::ConditionalProbs cp = bb84::conditional_probs(p);
  double e0 = std::exp(-p.eta_e * p.mu);

  double est_b1 = double(counts.sifted) / double(n);
  double sig_b1 = std::sqrt(pb1 * (1.0 - pb1) / double(n));
  t.expect(std::abs(est_b1 - pb1) <= 3.0 * sig_b1,
           std::abs(est_b1 - pb1) / sig_b1,
           "sift probability off by " + fmt((est_b1 - pb1) / sig_b1) + " sigma");

  double est_be = double(counts.sift_errors) / double(counts.sifted);
  double sig_be = std::sqrt(cp.be * (1.0 - cp.be) / double(counts.sifted));
  t.expect(std::abs(est_be - cp.be) <= 3.0 * sig_be,
           std::abs(est_be - cp.be) / sig_be,
           "error probability off by " + fmt((est_be - cp.be) / sig_be) + " sigma");

  double est_e0 = double(counts.eve_zero_sifted) / double(counts.sifted);
  double sig_e0 = std::sqrt(e0 * (1.0 - e0) / double(counts.sifted));
  t.expect(std::abs(est_e0 - e0) <= 3.0 * sig_e0, std::abs(est_e0 - e0) / sig_e0,
           "Eve-vacuum probability off by " + fmt((est_e0 - e0) / sig_e0) +
               " sigma");

  return done("decoy-bb84-model", t,
              "restriction dominates, optima interior, Monte Carlo within 3 sigma");
}

// 9. Randomized structural properties with a fixed seed.
CheckResult check_properties() {
  Tally t;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uni = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };

  // Purity, complementarity, photon conservation on random channels.
  for (int it = 0; it < 20; ++it) {
    bool thermal = it % 2 == 1;
    ChannelParams p{uni(0.05, 0.95), uni(0.05, 1.0), thermal ? uni(0.01, 2.0) : 0.0,
                    uni(0.05, 20.0)};
    wiretap::JointState st = wiretap::build_joint_state(p);

    std::vector<double> nus = gauss::symplectic_eigenvalues(st.cov);
    double purity = 0.0;
    for (double nu : nus) purity = std::max(purity, std::abs(nu - 1.0));
    t.expect(purity <= 1e-7, purity, "joint state not pure, |nu-1| = " + fmt(purity));

    double h_ab = gauss::von_neumann_entropy(wiretap::marginal(st, {"A", "B"}));
    std::vector<std::string> rest = thermal
                                        ? std::vector<std::string>{"E", "R", "F"}
                                        : std::vector<std::string>{"E", "F"};
    double h_rest = gauss::von_neumann_entropy(wiretap::marginal(st, rest));
    t.expect(std::abs(h_ab - h_rest) <= 1e-7, std::abs(h_ab - h_rest),
             "complementary entropies differ by " + fmt(h_ab - h_rest));

    double out = gauss::mean_photon(st.cov, "B") + gauss::mean_photon(st.cov, "E") +
                 gauss::mean_photon(st.cov, "F");
    double in = p.mu + p.n_e;
    double scale = 1.0 + std::abs(in);
    t.expect(std::abs(out - in) <= 1e-8 * scale, std::abs(out - in) / scale,
             "photon count drift " + fmt(out - in));
    t.expect(std::abs(gauss::mean_photon(st.cov, "A") - p.mu) <= 1e-8 * scale,
             0.0, "source arm photon number drift");
    if (thermal)
      t.expect(std::abs(gauss::mean_photon(st.cov, "R") - p.n_e) <= 1e-8, 0.0,
               "purifier arm photon number drift");
  }

  // Clamped monotonicity: down in kappa and ne, up in mu.
  {
    double prev = 1e300;
    for (double kappa : sweep::linspace(0.05, 1.0, 20)) {
      double dr = rates::dr_thermal_limit(0.7, kappa, 0.3).clamped();
      double rr = rates::rr_thermal_limit(0.7, kappa, 0.3).clamped();
      t.expect(dr <= prev + 1e-10 && rr <= prev + 1e-10, 0.0,
               "rate increased with kappa at kappa=" + fmt(kappa));
      prev = std::max(dr, rr);
    }
    double prev_dr = 1e300, prev_rr = 1e300;
    for (double ne : sweep::linspace(0.0, 3.0, 16)) {
      double dr = rates::dr_thermal_limit(0.7, 0.2, ne).clamped();
      double rr = rates::rr_thermal_limit(0.7, 0.2, ne).clamped();
      t.expect(dr <= prev_dr + 1e-10, 0.0, "direct rate increased with ne");
      t.expect(rr <= prev_rr + 1e-10, 0.0, "reverse rate increased with ne");
      prev_dr = dr;
      prev_rr = rr;
    }
    prev_dr = -1.0;
    prev_rr = -1.0;
    for (double mu : sweep::logspace(0.01, 100.0, 16)) {
      ChannelParams p{0.7, 0.2, 0.3, mu};
      double dr = rates::dr_thermal(p).clamped();
      double rr = rates::rr_thermal(p).clamped();
      t.expect(dr >= prev_dr - 1e-10, 0.0, "direct rate decreased with mu");
      t.expect(rr >= prev_rr - 1e-10, 0.0, "reverse rate decreased with mu");
      prev_dr = dr;
      prev_rr = rr;
    }
  }

  // Separability certificates on random channels.
  for (int it = 0; it < 15; ++it) {
    bool thermal = it % 2 == 1;
    ChannelParams p{uni(0.1, 0.9), uni(0.05, 0.95), thermal ? uni(0.01, 1.5) : 0.0,
                    uni(0.2, 30.0)};
    wiretap::JointState st = wiretap::build_joint_state(p);
    gauss::CovarianceMatrix v_abf = wiretap::marginal(st, {"A", "B", "F"});
    bounds::SeparableCandidate cand = bounds::closest_sep_three_mode(v_abf);
    double phys = gauss::physicality_min_eig(cand.cov);
    t.expect(phys >= -1e-9, std::max(-phys, 0.0),
             "candidate unphysical, min eig " + fmt(phys));
    if (cand.limited_by == bounds::Binding::ppt)
      t.expect(cand.min_ppt_eig >= -1e-10 && cand.min_ppt_eig <= 1e-8,
               std::abs(cand.min_ppt_eig),
               "ppt-bound candidate off the boundary: " + fmt(cand.min_ppt_eig));
    else
      t.expect(cand.min_ppt_eig >= -1e-10, std::max(-cand.min_ppt_eig, 0.0),
               "candidate fails ppt: " + fmt(cand.min_ppt_eig));
    double d = bounds::gaussian_relative_entropy(v_abf, cand.cov);
    t.expect(d >= -1e-9, std::max(-d, 0.0), "negative relative entropy " + fmt(d));
  }

  // Entropy invariance under symplectic transforms; heterodyne physicality;
  // relative entropy of a state with itself.
  for (int it = 0; it < 10; ++it) {
    const int n = 3;
    gauss::CovarianceMatrix v = gauss::vacuum_cov(n);
    for (int m = 0; m < n; ++m) {
      double nu = 1.0 + uni(0.0, 3.0);
      v.m(v.x(m), v.x(m)) = nu;
      v.m(v.p(m), v.p(m)) = nu;
    }
    gauss::SymplecticMatrix s = gauss::beamsplitter(uni(0.1, 0.9), 0, 1, n);
    s.m = (gauss::beamsplitter(uni(0.1, 0.9), 1, 2, n).m * s.m).eval();
    Eigen::MatrixXd sq = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    for (int m = 0; m < n; ++m) {
      double r = std::exp(uni(-0.5, 0.5));
      sq(m, m) = r;
      sq(n + m, n + m) = 1.0 / r;
    }
    s.m = (sq * s.m).eval();
    t.expect(gauss::is_symplectic(s.m), 0.0, "random transform not symplectic");

    gauss::CovarianceMatrix w = gauss::apply_symplectic(s, v);
    double h0 = gauss::von_neumann_entropy(v);
    double h1 = gauss::von_neumann_entropy(w);
    t.expect(std::abs(h0 - h1) <= 1e-8, std::abs(h0 - h1),
             "entropy changed under symplectic map by " + fmt(h1 - h0));

    gauss::CovarianceMatrix cond = gauss::heterodyne_condition(w, 0);
    double phys = gauss::physicality_min_eig(cond);
    t.expect(phys >= -1e-9, std::max(-phys, 0.0),
             "conditioned state unphysical, min eig " + fmt(phys));

    double self = bounds::gaussian_relative_entropy(w, w);
    t.expect(std::abs(self) <= 1e-9, std::abs(self),
             "self relative entropy " + fmt(self));
  }

  return done("property-suites", t, "purity, conservation, monotonicity, "
                                    "certificates, invariance all hold");
}

}  // namespace

std::vector<CheckResult> run_all(std::ostream* log) {
  std::vector<CheckResult> results;
  auto run = [&](CheckResult (*fn)()) {
    CheckResult r = fn();
    if (log)
      (*log) << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
             << "\n";
    results.push_back(std::move(r));
  };
  run(check_plob_reduction);
  run(check_closed_vs_numeric);
  run(check_thermal_asymptote);
  run(check_crossover);
  run(check_pure_loss_ub);
  run(check_sandwich);
  run(check_fock);
  run(check_bb84);
  run(check_properties);
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace qkdrates::verify
