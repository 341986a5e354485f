// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "qkdrates/key_rates.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qkdrates/common.hpp"
#include "qkdrates/gaussian.hpp"

namespace qkdrates::rates {

namespace {

using gauss::CovarianceMatrix;
using gauss::g_entropy;
using wiretap::ChannelParams;

void check_beta(double beta) {
  if (!(beta > 0.0) || beta > 1.0)
    throw domain_error("beta must lie in (0, 1], got " + std::to_string(beta));
}

ChannelParams pure_loss_params(double eta, double kappa, double mu) {
  ChannelParams p{eta, kappa, 0.0, mu};
  p.validate();
  return p;
}

Channel channel_of(const ChannelParams& p) {
  return p.thermal() ? Channel::thermal : Channel::pure_loss;
}

// Eve keeps E plus, in the thermal case, the purifying mode R.
std::vector<std::string> eve_labels(const ChannelParams& p) {
  if (p.thermal()) return {"E", "R"};
  return {"E"};
}

double entropy_of(const CovarianceMatrix& v) { return gauss::von_neumann_entropy(v); }

// Entropy of the subset after a heterodyne measurement of mode `meas`.
double conditional_entropy(const CovarianceMatrix& joint, const std::string& meas,
                           const std::vector<std::string>& keep) {
  std::vector<std::string> sub{meas};
  sub.insert(sub.end(), keep.begin(), keep.end());
  CovarianceMatrix reduced = gauss::partial_trace(joint, sub);
  CovarianceMatrix cond = gauss::heterodyne_condition(reduced, meas);
  return entropy_of(cond);
}

double det_block(const CovarianceMatrix& v, const std::vector<std::string>& keep) {
  CovarianceMatrix sub = gauss::partial_trace(v, keep);
  Eigen::MatrixXd sigma =
      0.5 * (sub.m + Eigen::MatrixXd::Identity(sub.m.rows(), sub.m.cols()));
  return sigma.determinant();
}

}  // namespace

RateResult dr_pure_loss(double eta, double kappa, double mu) {
  pure_loss_params(eta, kappa, mu);
  double v = g_entropy(eta * mu) - g_entropy(kappa * mu * (1.0 - eta));
  return {v, Direction::dr, Channel::pure_loss, Path::closed_form};
}

RateResult dr_pure_loss_limit(double eta, double kappa) {
  pure_loss_params(eta, kappa, 1.0);
  double v = std::log2(eta / (kappa * (1.0 - eta)));
  return {v, Direction::dr, Channel::pure_loss, Path::asymptotic};
}

RateResult rr_pure_loss(double eta, double kappa, double mu) {
  pure_loss_params(eta, kappa, mu);
  double s = mu * (1.0 - eta) / (1.0 + eta * mu);
  double v = g_entropy(mu) - g_entropy(kappa * mu * (1.0 - eta)) -
             (g_entropy(s) - g_entropy(kappa * s));
  return {v, Direction::rr, Channel::pure_loss, Path::closed_form};
}

RateResult rr_pure_loss_limit(double eta, double kappa) {
  pure_loss_params(eta, kappa, 1.0);
  double s = (1.0 - eta) / eta;
  double v = std::log2(1.0 / (kappa * (1.0 - eta))) -
             (g_entropy(s) - g_entropy(kappa * s));
  return {v, Direction::rr, Channel::pure_loss, Path::asymptotic};
}

RateResult dr_thermal(const wiretap::ChannelParams& params) {
  params.validate();
  const double eta = params.eta, kappa = params.kappa, ne = params.n_e,
               mu = params.mu;
  wiretap::JointState st = wiretap::build_joint_state(params);
  double h_er = entropy_of(wiretap::marginal(st, eve_labels(params)));
  double v = g_entropy(ne * (1.0 - eta) + eta * mu) - h_er -
             g_entropy(ne * (1.0 - eta)) + g_entropy(ne * (1.0 - eta * kappa));
  return {v, Direction::dr, channel_of(params), Path::numeric};
}

RateResult dr_thermal_limit(double eta, double kappa, double n_e) {
  ChannelParams p{eta, kappa, n_e, 1.0};
  p.validate();
  double v = std::log2(eta / (kappa * (1.0 - eta))) - g_entropy(n_e) -
             g_entropy(n_e * (1.0 - eta)) + g_entropy(n_e * (1.0 - eta * kappa));
  return {v, Direction::dr, channel_of(p), Path::asymptotic};
}

RateResult rr_thermal(const wiretap::ChannelParams& params) {
  params.validate();
  const double eta = params.eta, ne = params.n_e, mu = params.mu;
  wiretap::JointState st = wiretap::build_joint_state(params);
  std::vector<std::string> er = eve_labels(params);
  double h_er = entropy_of(wiretap::marginal(st, er));
  double h_er_y = conditional_entropy(st.cov, "B", er);
  double a_given_y = mu - eta * mu * (1.0 + mu) / (1.0 + ne - ne * eta + eta * mu);
  double v = g_entropy(mu) - h_er - g_entropy(a_given_y) + h_er_y;
  return {v, Direction::rr, channel_of(params), Path::numeric};
}

RateResult rr_thermal_limit(double eta, double kappa, double n_e) {
  ChannelParams p{eta, kappa, n_e, 1.0};
  p.validate();

  // Conditional symplectic spectrum of Eve's pair in the mu -> inf limit.
  const double k = kappa, ne = n_e;
  double A = eta * eta * (2.0 * ne * (ne + 1.0) + 1.0);
  double B = 2.0 * eta * k * (eta + 2.0 * ne * ne + ne - 1.0);
  double C = 2.0 * k * k * (-eta + ne + 1.0) * (-eta + ne + 1.0);
  double E = eta * eta * (-k + ne + 1.0) * (-k + ne + 1.0);
  double F = 2.0 * eta * k * (ne + 1.0) * (k + ne - 1.0);
  double G = k * k * (ne + 1.0) * (ne + 1.0);
  double root = -eta * k + k + ne * (k - eta);
  double D = 2.0 * std::sqrt(std::abs((E - F + G) * root * root));
  double nu1 = std::sqrt(std::abs(A - B + C + D)) / eta;
  double nu2 = std::sqrt(std::abs(-A + B - C + D)) / eta;
  double h_cond = g_entropy((std::max(nu1, 1.0) - 1.0) / 2.0) +
                  g_entropy((std::max(nu2, 1.0) - 1.0) / 2.0);

  double v = std::log2(1.0 / (k * (1.0 - eta))) - g_entropy(ne) -
             g_entropy((1.0 + ne - ne * eta - eta) / eta) + h_cond;
  return {v, Direction::rr, channel_of(p), Path::asymptotic};
}

RateResult hashing_dr_numeric(const wiretap::ChannelParams& params) {
  params.validate();
  wiretap::JointState st = wiretap::build_joint_state(params);
  std::vector<std::string> er = eve_labels(params);
  double h_b = entropy_of(wiretap::marginal(st, {"B"}));
  double h_er = entropy_of(wiretap::marginal(st, er));
  double h_b_x = conditional_entropy(st.cov, "A", {"B"});
  double h_er_x = conditional_entropy(st.cov, "A", er);
  double v = h_b - h_b_x - (h_er - h_er_x);
  return {v, Direction::dr, channel_of(params), Path::numeric};
}

RateResult hashing_rr_numeric(const wiretap::ChannelParams& params, double beta) {
  params.validate();
  check_beta(beta);
  wiretap::JointState st = wiretap::build_joint_state(params);
  std::vector<std::string> er = eve_labels(params);
  double h_a = entropy_of(wiretap::marginal(st, {"A"}));
  double h_er = entropy_of(wiretap::marginal(st, er));
  double h_a_y = conditional_entropy(st.cov, "B", {"A"});
  double h_er_y = conditional_entropy(st.cov, "B", er);
  double v = beta * (h_a - h_a_y) - (h_er - h_er_y);
  return {v, Direction::rr, channel_of(params), Path::numeric};
}

RateResult ccq_rate(const wiretap::ChannelParams& params, double beta) {
  params.validate();
  check_beta(beta);
  wiretap::JointState st = wiretap::build_joint_state(params);
  std::vector<std::string> er = eve_labels(params);

  // Mutual information of the two heterodyne outcomes.
  double det_a = det_block(st.cov, {"A"});
  double det_b = det_block(st.cov, {"B"});
  double det_ab = det_block(st.cov, {"A", "B"});
  double mi = 0.5 * std::log2(det_a * det_b / det_ab);

  double h_er = entropy_of(wiretap::marginal(st, er));
  double h_er_y = conditional_entropy(st.cov, "B", er);
  double v = beta * mi - (h_er - h_er_y);
  return {v, Direction::ccq, channel_of(params), Path::numeric};
}

}  // namespace qkdrates::rates
