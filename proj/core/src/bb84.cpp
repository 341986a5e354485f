// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "qkdrates/bb84.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qkdrates/common.hpp"

namespace qkdrates::bb84 {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

double rate_bracket(const Bb84Params& p, bool restricted) {
  double ps = p_sift(p);
  if (ps <= 0.0) return 0.0;
  ConditionalProbs c = conditional_probs(p);
  double bracket;
  if (restricted) {
    bracket = std::exp(-p.eta_e * p.mu) - p.f_l * h2(c.be);
  } else {
    bracket = c.a0_given_b1 - p.f_l * h2(c.be) +
              c.a1_given_b1 * (1.0 - h2(c.be_given_a1b1));
  }
  return std::max(p.rate_R * ps * bracket / 2.0, 0.0);
}

}  // namespace

void Bb84Params::validate() const {
  require(rate_R > 0.0, "rate_R must be positive, got " + std::to_string(rate_R));
  require(eta > 0.0 && eta <= 1.0,
          "eta must lie in (0, 1], got " + std::to_string(eta));
  require(eta_e >= 0.0 && eta_e < 1.0,
          "eta_e must lie in [0, 1), got " + std::to_string(eta_e));
  require(n_d >= 0.0, "n_d must be nonnegative, got " + std::to_string(n_d));
  require(f_l >= 1.0, "f_l must be at least 1, got " + std::to_string(f_l));
  require(mu >= 0.0, "mu must be nonnegative, got " + std::to_string(mu));
}

double h2(double p) {
  require(p >= 0.0 && p <= 1.0, "h2 argument must lie in [0, 1], got " +
                                    std::to_string(p));
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double p_sift(const Bb84Params& params) {
  params.validate();
  double click = params.eta * params.mu + params.n_d;
  // Exactly one detector fires: signal-side click and dark-free wrong
  // detector, or a dark-only click on the wrong detector.
  return (1.0 - std::exp(-click)) * std::exp(-params.n_d) +
         std::exp(-click) * (1.0 - std::exp(-params.n_d));
}

ConditionalProbs conditional_probs(const Bb84Params& params) {
  params.validate();
  double pb1 = p_sift(params);
  if (pb1 <= 0.0)
    throw domain_error("conditional probabilities undefined: sift probability is zero");

  const double mu = params.mu, eta = params.eta, nd = params.n_d;
  double dark = 1.0 - std::exp(-nd);
  double a0b1 = 2.0 * std::exp(-mu) * std::exp(-nd) * dark;
  double a1b1 = mu * std::exp(-mu) *
                (eta * std::exp(-2.0 * nd) + (2.0 - eta) * std::exp(-nd) * dark);

  ConditionalProbs c;
  c.a0_given_b1 = a0b1 / pb1;
  c.a1_given_b1 = a1b1 / pb1;
  double denom = eta * std::exp(-2.0 * nd) + (2.0 - eta) * std::exp(-nd) * dark;
  c.be_given_a1b1 = denom > 0.0 ? (1.0 - eta) * std::exp(-nd) * dark / denom : 0.0;
  c.be = std::exp(-(eta * mu + nd)) * dark / pb1;
  return c;
}

double skr_unrestricted(const Bb84Params& params) {
  params.validate();
  return rate_bracket(params, false);
}

double skr_restricted(const Bb84Params& params) {
  params.validate();
  return rate_bracket(params, true);
}

MuOptimum optimize_mu(const Bb84Params& base, bool restricted, double mu_lo,
                      double mu_hi, int coarse_points) {
  base.validate();
  require(mu_lo > 0.0 && mu_hi > mu_lo, "need 0 < mu_lo < mu_hi");
  require(coarse_points >= 2, "need at least two coarse grid points");

  auto rate_at = [&](double mu) {
    Bb84Params p = base;
    p.mu = mu;
    return restricted ? skr_restricted(p) : skr_unrestricted(p);
  };

  // Coarse scan on a log grid.
  double best_mu = mu_lo, best_rate = 0.0;
  int best_idx = 0;
  double lr = std::log(mu_hi / mu_lo);
  for (int i = 0; i < coarse_points; ++i) {
    double mu = mu_lo * std::exp(lr * i / (coarse_points - 1));
    double r = rate_at(mu);
    if (r > best_rate) {
      best_rate = r;
      best_mu = mu;
      best_idx = i;
    }
  }
  if (best_rate <= 0.0) return {mu_lo, 0.0, true};

  // Golden-section refinement on the bracketing grid interval.
  auto grid_mu = [&](int i) {
    return mu_lo * std::exp(lr * std::clamp(i, 0, coarse_points - 1) /
                            (coarse_points - 1));
  };
  double lo = grid_mu(best_idx - 1), hi = grid_mu(best_idx + 1);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = rate_at(x1), f2 = rate_at(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = rate_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = rate_at(x1);
    }
  }
  double mu_star = 0.5 * (lo + hi);
  double skr_star = rate_at(mu_star);
  if (skr_star < best_rate) {
    mu_star = best_mu;
    skr_star = best_rate;
  }
  return {mu_star, skr_star, false};
}

PulseCounts simulate_pulses(const Bb84Params& params, std::uint64_t n_pulses,
                            std::uint64_t seed) {
  params.validate();
  require(params.eta + params.eta_e <= 1.0,
          "simulation needs eta + eta_e <= 1 (Eve collects from the lost fraction)");
  // Photons not reaching Bob go to Eve with this probability.
  double p_eve =
      params.eta < 1.0 ? params.eta_e / (1.0 - params.eta) : 0.0;
  std::mt19937_64 rng(seed);
  std::poisson_distribution<int> photons(params.mu);
  std::bernoulli_distribution dark(1.0 - std::exp(-params.n_d));

  PulseCounts counts;
  counts.pulses = n_pulses;
  for (std::uint64_t i = 0; i < n_pulses; ++i) {
    int n = params.mu > 0.0 ? photons(rng) : 0;
    int k = 0;
    if (n > 0) {
      std::binomial_distribution<int> to_bob(n, params.eta);
      k = to_bob(rng);
    }
    bool dark_correct = dark(rng);
    bool dark_wrong = dark(rng);
    bool correct_fires = k >= 1 || dark_correct;
    bool wrong_fires = dark_wrong;
    bool sift = correct_fires != wrong_fires;
    if (!sift) continue;

    counts.sifted++;
    bool error = wrong_fires;  // exactly one fired and it was the wrong one
    if (error) counts.sift_errors++;
    if (n == 0) counts.vacuum_sifted++;
    if (n == 1) {
      counts.single_sifted++;
      if (error) counts.single_errors++;
    }
    int m = 0;
    if (n - k > 0 && p_eve > 0.0) {
      std::binomial_distribution<int> to_eve(n - k, p_eve);
      m = to_eve(rng);
    }
    if (m == 0) counts.eve_zero_sifted++;
  }
  return counts;
}

}  // namespace qkdrates::bb84
