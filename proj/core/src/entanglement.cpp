// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "qkdrates/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include <Eigen/Dense>

#include "qkdrates/common.hpp"
#include "qkdrates/gaussian.hpp"

namespace qkdrates::bounds {

namespace {

using gauss::CovarianceMatrix;

constexpr double kSupportTol = 1e-7;  // nu <= 1 + tol counts as a pure direction
constexpr int kMaxBisect = 200;

struct Pattern {
  double a, b, d, c1, e, f;
};

// The (A, B, F) marginal produced by the channel wiring is block diagonal
// in the quadrature sectors, with mirrored signs on the A-B and A-F
// correlations and an equal-sign B-F correlation. Everything downstream
// banks on that layout, so verify before extracting.
Pattern extract_pattern(const CovarianceMatrix& v) {
  if (v.n_modes() != 3)
    throw domain_error("closest_sep_three_mode expects a 3-mode covariance, got " +
                       std::to_string(v.n_modes()) + " modes");
  const Eigen::MatrixXd& m = v.m;
  const int x0 = v.x(0), x1 = v.x(1), x2 = v.x(2);
  const int p0 = v.p(0), p1 = v.p(1), p2 = v.p(2);
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  auto near = [scale](double u, double w) { return std::abs(u - w) <= 1e-8 * scale; };

  bool ok = near(m(x0, x0), m(p0, p0)) && near(m(x1, x1), m(p1, p1)) &&
            near(m(x2, x2), m(p2, p2)) && near(m(x0, x1), -m(p0, p1)) &&
            near(m(x0, x2), -m(p0, p2)) && near(m(x1, x2), m(p1, p2));
  for (int i = 0; i < 3 && ok; ++i)
    for (int j = 0; j < 3; ++j)
      if (!near(m(v.x(i), v.p(j)), 0.0)) {
        ok = false;
        break;
      }
  if (!ok)
    throw domain_error(
        "covariance does not match the mirrored x/p sign pattern of the "
        "(A, B, F) marginal");
  return {m(x0, x0), m(x1, x1), m(x2, x2), m(x0, x1), m(x0, x2), m(x1, x2)};
}

CovarianceMatrix build_sigma(const Pattern& pt, double c, double f) {
  CovarianceMatrix v = gauss::vacuum_cov(3);
  v.labels = {"A", "B", "F"};
  Eigen::Matrix3d vx, vp;
  vx << pt.a, c, pt.e, c, pt.b, f, pt.e, f, pt.d;
  vp << pt.a, -c, -pt.e, -c, pt.b, f, -pt.e, f, pt.d;
  v.m.setZero();
  v.m.block<3, 3>(0, 0) = vx;
  v.m.block<3, 3>(3, 3) = vp;
  return v;
}

struct Cert {
  double ppt;
  double phys;
  bool ok() const { return ppt >= -root_tol && phys >= -phys_tol; }
};

Cert certify(const CovarianceMatrix& v) {
  return {ppt_min_eig(v, {1}), gauss::physicality_min_eig(v)};
}

SeparableCandidate make_candidate(const CovarianceMatrix& v, double c, Binding b) {
  return {v, c, ppt_min_eig(v, {1}), b};
}

// Spec on c of a certified-at-0 family: largest certified c by bisection.
// The certified set is an interval because the smallest eigenvalue of a
// Hermitian pencil affine in c is concave in c.
double bisect_largest(const Pattern& pt, double c_max,
                      const std::function<CovarianceMatrix(double)>& sigma,
                      Binding* limited_by) {
  double lo = 0.0, hi = c_max;
  for (int it = 0; it < kMaxBisect; ++it) {
    double mid = 0.5 * (lo + hi);
    if (certify(sigma(mid)).ok())
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= root_tol * std::max(1.0, c_max)) break;
  }
  if (limited_by) {
    Cert at_hi = certify(sigma(hi));
    *limited_by = at_hi.ppt < -root_tol ? Binding::ppt : Binding::physicality;
  }
  return lo;
}

// Second candidate family: keep the B-F correlation f fixed instead of
// scaling it with c. Not always certifiable at c = 0; callers skip it then.
std::optional<SeparableCandidate> literal_candidate(const CovarianceMatrix& v_abf) {
  Pattern pt = extract_pattern(v_abf);
  double c_max = std::sqrt(std::max((pt.a - 1.0) * (pt.b - 1.0), 0.0));
  auto sigma = [&pt](double c) { return build_sigma(pt, c, pt.f); };
  if (!certify(sigma(0.0)).ok()) return std::nullopt;
  if (certify(sigma(c_max)).ok())
    return make_candidate(sigma(c_max), c_max, Binding::none);
  Binding b;
  double c = bisect_largest(pt, c_max, sigma, &b);
  return make_candidate(sigma(c), c, b);
}

}  // namespace

double ppt_min_eig(const gauss::CovarianceMatrix& v,
                   const std::vector<int>& transpose_set) {
  const int n = v.n_modes();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (int m : transpose_set) {
    if (m < 0 || m >= n)
      throw domain_error("transpose_set mode " + std::to_string(m) +
                         " out of range for " + std::to_string(n) + " modes");
    p(v.p(m), v.p(m)) = -1.0;
  }
  Eigen::MatrixXd omega_pt = p * gauss::omega(n) * p;
  Eigen::MatrixXcd m = v.m.cast<std::complex<double>>() -
                       std::complex<double>(0, 1) * omega_pt.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double closest_sep_two_mode(double a, double b) {
  if (!(a >= 1.0) || !(b >= 1.0))
    throw domain_error("closest_sep_two_mode requires diagonal entries >= 1");
  return std::sqrt((a - 1.0) * (b - 1.0));
}

SeparableCandidate two_mode_candidate(double a, double b) {
  double c = closest_sep_two_mode(a, b);
  CovarianceMatrix v = gauss::vacuum_cov(2);
  v.labels = {"A", "B"};
  v.m(v.x(0), v.x(0)) = a;
  v.m(v.p(0), v.p(0)) = a;
  v.m(v.x(1), v.x(1)) = b;
  v.m(v.p(1), v.p(1)) = b;
  v.m(v.x(0), v.x(1)) = c;
  v.m(v.x(1), v.x(0)) = c;
  v.m(v.p(0), v.p(1)) = -c;
  v.m(v.p(1), v.p(0)) = -c;
  return make_candidate(v, c, Binding::ppt);
}

SeparableCandidate closest_sep_three_mode(const gauss::CovarianceMatrix& v_abf) {
  Pattern pt = extract_pattern(v_abf);
  Cert input = certify(v_abf);
  if (input.ok()) return make_candidate(v_abf, pt.c1, Binding::none);
  if (!(pt.c1 > 0.0))
    throw numeric_error("state fails PPT with no A-B correlation to reduce");

  double c_max =
      std::min(pt.c1, std::sqrt(std::max((pt.a - 1.0) * (pt.b - 1.0), 0.0)));
  auto sigma = [&pt](double c) { return build_sigma(pt, c, pt.f * (c / pt.c1)); };

  if (certify(sigma(c_max)).ok())
    return make_candidate(sigma(c_max), c_max, Binding::none);
  Cert at_zero = certify(sigma(0.0));
  if (!at_zero.ok()) {
    std::ostringstream os;
    os << "bracket failure: uncorrelated endpoint not certified (ppt min eig "
       << at_zero.ppt << ", physicality min eig " << at_zero.phys << ")";
    throw bracket_error(os.str(), at_zero.ppt, at_zero.phys);
  }
  Binding b;
  double c = bisect_largest(pt, c_max, sigma, &b);
  return make_candidate(sigma(c), c, b);
}

double gaussian_relative_entropy(const gauss::CovarianceMatrix& v1,
                                 const gauss::CovarianceMatrix& v2) {
  const int n = v1.n_modes();
  if (v2.n_modes() != n)
    throw domain_error("relative entropy needs equal mode counts, got " +
                       std::to_string(n) + " and " + std::to_string(v2.n_modes()));

  gauss::WilliamsonDecomposition wd = gauss::williamson(v2);
  Eigen::MatrixXd si = gauss::symplectic_inverse(wd.s);
  Eigen::MatrixXd w = si * v1.m * si.transpose();

  double total = -gauss::von_neumann_entropy(v1);
  for (int j = 0; j < n; ++j) {
    double nu = wd.nu[j];
    double m = w(j, j) + w(n + j, n + j);
    total += std::log2((nu + 1.0) / 2.0);
    if (nu <= 1.0 + kSupportTol) {
      // Pure direction of sigma: any excess variance of rho makes D diverge.
      if (m > 2.0 + 1e-6) return std::numeric_limits<double>::infinity();
      continue;
    }
    total += std::log2((nu + 1.0) / (nu - 1.0)) * (m - 2.0) / 4.0;
  }
  return total;
}

double er_upper_bound_pure_loss(double eta, double kappa) {
  wiretap::ChannelParams p{eta, kappa, 0.0, 1.0};
  p.validate();
  // Split the logarithm so the kappa = 1 case reduces to -log2(1 - eta)
  // without rounding through the quotient.
  return std::log2(eta + kappa * (1.0 - eta)) - std::log2(kappa * (1.0 - eta));
}

std::vector<double> default_mu_schedule() {
  std::vector<double> mus(17);
  for (int i = 0; i < 17; ++i) mus[i] = std::pow(10.0, 4.0 * i / 16.0);
  return mus;
}

UpperBoundResult er_upper_bound_numeric(const wiretap::ChannelParams& params,
                                        const std::vector<double>& mu_schedule) {
  params.validate();
  if (mu_schedule.empty())
    throw domain_error("mu_schedule must contain at least one point");
  for (size_t i = 1; i < mu_schedule.size(); ++i)
    if (!(mu_schedule[i] > mu_schedule[i - 1]))
      throw domain_error("mu_schedule must be strictly increasing");

  UpperBoundResult result;
  result.per_mu.reserve(mu_schedule.size());
  for (double mu : mu_schedule) {
    wiretap::ChannelParams p{params.eta, params.kappa, params.n_e, mu};
    wiretap::JointState st = wiretap::build_joint_state(p);
    CovarianceMatrix v_abf = wiretap::marginal(st, {"A", "B", "F"});

    double best;
    try {
      SeparableCandidate cand = closest_sep_three_mode(v_abf);
      best = gaussian_relative_entropy(v_abf, cand.cov);
    } catch (const bracket_error& e) {
      throw bracket_error("mu=" + std::to_string(mu) + ": " + e.what(), e.f_lo(),
                          e.f_hi());
    }
    if (std::optional<SeparableCandidate> lit = literal_candidate(v_abf))
      best = std::min(best, gaussian_relative_entropy(v_abf, lit->cov));
    result.per_mu.push_back(best);
  }

  result.bits = *std::max_element(result.per_mu.begin(), result.per_mu.end());
  size_t k = result.per_mu.size();
  result.converged =
      k >= 2 && std::abs(result.per_mu[k - 1] - result.per_mu[k - 2]) <= 1e-3;
  return result;
}

UpperBoundResult er_upper_bound_numeric(const wiretap::ChannelParams& params) {
  return er_upper_bound_numeric(params, default_mu_schedule());
}

}  // namespace qkdrates::bounds
