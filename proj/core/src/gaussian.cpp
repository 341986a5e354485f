// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "qkdrates/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

namespace qkdrates::gauss {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

void require(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

int CovarianceMatrix::index_of(std::string_view label) const {
  for (int k = 0; k < n_modes(); ++k) {
    if (labels[k] == label) return k;
  }
  throw domain_error("no mode labeled '" + std::string(label) + "'");
}

Eigen::MatrixXd omega(int n) {
  require(n >= 1, "omega: n must be positive");
  MatrixXd o = MatrixXd::Zero(2 * n, 2 * n);
  o.topRightCorner(n, n) = MatrixXd::Identity(n, n);
  o.bottomLeftCorner(n, n) = -MatrixXd::Identity(n, n);
  return o;
}

double g_entropy(double x) {
  if (x < 0) {
    if (x > -1e-12) return 0.0;  // numerical dust from upstream subtraction
    throw domain_error("g_entropy: negative mean photon number " + fmt(x));
  }
  if (x == 0) return 0.0;
  return (x + 1) * std::log2(x + 1) - x * std::log2(x);
}

CovarianceMatrix vacuum_cov(int n) {
  require(n >= 1, "vacuum_cov: n must be positive");
  CovarianceMatrix v;
  v.m = MatrixXd::Identity(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) v.labels.push_back("m" + std::to_string(k));
  return v;
}

CovarianceMatrix thermal_cov(double nbar) {
  require(nbar >= 0, "thermal_cov: nbar must be nonnegative");
  CovarianceMatrix v = vacuum_cov(1);
  v.m *= 2 * nbar + 1;
  return v;
}

CovarianceMatrix tmsv_cov(double mu) {
  require(mu >= 0, "tmsv_cov: mu must be nonnegative");
  const double a = 2 * mu + 1;
  const double c = 2 * std::sqrt(mu * (mu + 1));
  CovarianceMatrix v = vacuum_cov(2);
  v.m << a, c, 0, 0,
         c, a, 0, 0,
         0, 0, a, -c,
         0, 0, -c, a;
  return v;
}

CovarianceMatrix tensor(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  const int na = a.n_modes();
  const int nb = b.n_modes();
  const int n = na + nb;
  CovarianceMatrix v;
  v.m = MatrixXd::Zero(2 * n, 2 * n);
  // Interleave the xxpp blocks of both factors.
  v.m.block(0, 0, na, na) = a.m.block(0, 0, na, na);
  v.m.block(na, na, nb, nb) = b.m.block(0, 0, nb, nb);
  v.m.block(n, n, na, na) = a.m.block(na, na, na, na);
  v.m.block(n + na, n + na, nb, nb) = b.m.block(nb, nb, nb, nb);
  v.m.block(0, n, na, na) = a.m.block(0, na, na, na);
  v.m.block(n, 0, na, na) = a.m.block(na, 0, na, na);
  v.m.block(na, n + na, nb, nb) = b.m.block(0, nb, nb, nb);
  v.m.block(n + na, na, nb, nb) = b.m.block(nb, 0, nb, nb);
  v.labels = a.labels;
  v.labels.insert(v.labels.end(), b.labels.begin(), b.labels.end());
  return v;
}

SymplecticMatrix beamsplitter(double t, int i, int j, int n) {
  require(t >= 0 && t <= 1, "beamsplitter: transmissivity outside [0,1]");
  require(i != j && i >= 0 && j >= 0 && i < n && j < n, "beamsplitter: bad mode indices");
  const double c = std::sqrt(t);
  const double s = std::sqrt(1 - t);
  SymplecticMatrix bs;
  bs.m = MatrixXd::Identity(2 * n, 2 * n);
  for (int off : {0, n}) {
    bs.m(off + i, off + i) = c;
    bs.m(off + i, off + j) = s;
    bs.m(off + j, off + i) = -s;
    bs.m(off + j, off + j) = c;
  }
  return bs;
}

bool is_symplectic(const Eigen::MatrixXd& s, double tol) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) return false;
  const int n = static_cast<int>(s.rows()) / 2;
  const MatrixXd o = omega(n);
  return (s * o * s.transpose() - o).cwiseAbs().maxCoeff() <= tol;
}

CovarianceMatrix apply_symplectic(const SymplecticMatrix& s, const CovarianceMatrix& v) {
  require(s.m.rows() == v.m.rows(), "apply_symplectic: dimension mismatch");
  CovarianceMatrix out;
  MatrixXd w = s.m * v.m * s.m.transpose();
  out.m = 0.5 * (w + w.transpose());
  out.labels = v.labels;
  return out;
}

CovarianceMatrix partial_trace(const CovarianceMatrix& v, const std::vector<int>& keep) {
  require(!keep.empty(), "partial_trace: keep set empty");
  const int n = v.n_modes();
  const int k = static_cast<int>(keep.size());
  CovarianceMatrix out;
  out.m = MatrixXd::Zero(2 * k, 2 * k);
  for (int r = 0; r < k; ++r) {
    require(keep[r] >= 0 && keep[r] < n, "partial_trace: mode index out of range");
    out.labels.push_back(v.labels[keep[r]]);
    for (int c = 0; c < k; ++c) {
      out.m(r, c) = v.m(keep[r], keep[c]);
      out.m(k + r, k + c) = v.m(n + keep[r], n + keep[c]);
      out.m(r, k + c) = v.m(keep[r], n + keep[c]);
      out.m(k + r, c) = v.m(n + keep[r], keep[c]);
    }
  }
  return out;
}

CovarianceMatrix partial_trace(const CovarianceMatrix& v, const std::vector<std::string>& keep) {
  std::vector<int> idx;
  idx.reserve(keep.size());
  for (const auto& l : keep) idx.push_back(v.index_of(l));
  return partial_trace(v, idx);
}

double physicality_min_eig(const CovarianceMatrix& v) {
  const int n = v.n_modes();
  MatrixXcd h = v.m.cast<std::complex<double>>();
  h -= std::complex<double>(0, 1) * omega(n).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void check_physical(const CovarianceMatrix& v) {
  const double me = physicality_min_eig(v);
  if (me < -phys_tol) {
    throw physicality_error("covariance matrix violates the uncertainty relation, min eig(V - i*Omega) = " + fmt(me), me);
  }
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v) {
  const int n = v.n_modes();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(v.m);
  const VectorXd w = es.eigenvalues();
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  if (w.minCoeff() < -1e-12 * scale) {
    throw physicality_error("symplectic_eigenvalues: covariance matrix not positive semidefinite, min eig = " + fmt(w.minCoeff()), w.minCoeff());
  }
  // nu_i are the singular values of X^T Omega X with X = Q sqrt(L), each twice.
  MatrixXd x = es.eigenvectors() * w.cwiseMax(0.0).cwiseSqrt().asDiagonal();
  MatrixXd t = x.transpose() * omega(n) * x;
  Eigen::JacobiSVD<MatrixXd> svd(t);
  const VectorXd s = svd.singularValues();  // descending
  std::vector<double> nu(n);
  for (int k = 0; k < n; ++k) {
    const double s0 = s(2 * k);
    const double s1 = s(2 * k + 1);
    if (std::abs(s0 - s1) > 1e-8 * std::max(1.0, s0)) {
      throw numeric_error("symplectic_eigenvalues: unpaired singular values " + fmt(s0) + " / " + fmt(s1));
    }
    nu[k] = 0.5 * (s0 + s1);
    // Roundoff in the spectrum is relative to the largest singular value, so
    // give states with large occupation proportionally more slack.
    if (nu[k] < 1 - phys_tol * std::max(1.0, s(0))) {
      throw physicality_error("symplectic eigenvalue " + fmt(nu[k]) + " below 1", physicality_min_eig(v));
    }
    nu[k] = std::max(nu[k], 1.0);
  }
  std::sort(nu.begin(), nu.end());
  return nu;
}

double von_neumann_entropy(const CovarianceMatrix& v) {
  double h = 0;
  for (double nu : symplectic_eigenvalues(v)) h += g_entropy((nu - 1) / 2);
  return h;
}

CovarianceMatrix heterodyne_condition(const CovarianceMatrix& v, int mode) {
  const int n = v.n_modes();
  require(n >= 2, "heterodyne_condition: need at least two modes");
  require(mode >= 0 && mode < n, "heterodyne_condition: mode index out of range");
  std::vector<int> rest;
  for (int k = 0; k < n; ++k)
    if (k != mode) rest.push_back(k);
  const int m = n - 1;
  MatrixXd vr(2 * m, 2 * m), cr(2 * m, 2), vm(2, 2);
  auto qi = [&](int k) { return std::array<int, 2>{k, n + k}; };
  const auto mi = qi(mode);
  for (int r = 0; r < m; ++r) {
    const auto ri = qi(rest[r]);
    for (int c = 0; c < m; ++c) {
      const auto ci = qi(rest[c]);
      for (int u = 0; u < 2; ++u)
        for (int w = 0; w < 2; ++w) vr(r + u * m, c + w * m) = v.m(ri[u], ci[w]);
    }
    for (int u = 0; u < 2; ++u)
      for (int w = 0; w < 2; ++w) cr(r + u * m, w) = v.m(ri[u], mi[w]);
  }
  for (int u = 0; u < 2; ++u)
    for (int w = 0; w < 2; ++w) vm(u, w) = v.m(mi[u], mi[w]);
  // V_R - C (V_m + I)^-1 C^T. V_m + I is positive definite for physical V.
  MatrixXd s = vm + MatrixXd::Identity(2, 2);
  Eigen::LDLT<MatrixXd> ldlt(s);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw numeric_error("heterodyne_condition: V_m + I not positive definite");
  }
  MatrixXd w = vr - cr * ldlt.solve(cr.transpose());
  CovarianceMatrix out;
  out.m = 0.5 * (w + w.transpose());
  for (int k : rest) out.labels.push_back(v.labels[k]);
  return out;
}

CovarianceMatrix heterodyne_condition(const CovarianceMatrix& v, std::string_view label) {
  return heterodyne_condition(v, v.index_of(label));
}

double mean_photon(const CovarianceMatrix& v, std::string_view label) {
  const int k = v.index_of(label);
  return (v.m(v.x(k), v.x(k)) + v.m(v.p(k), v.p(k)) - 2) / 4;
}

Eigen::MatrixXd symplectic_inverse(const Eigen::MatrixXd& s) {
  const int n = static_cast<int>(s.rows()) / 2;
  const MatrixXd o = omega(n);
  return -o * s.transpose() * o;
}

WilliamsonDecomposition williamson(const CovarianceMatrix& v) {
  const int n = v.n_modes();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(v.m);
  const VectorXd w = es.eigenvalues();
  if (w.minCoeff() <= 0) {
    throw physicality_error("williamson: covariance matrix not positive definite, min eig = " + fmt(w.minCoeff()), w.minCoeff());
  }
  const MatrixXd q = es.eigenvectors();
  const MatrixXd vh = q * w.cwiseSqrt().asDiagonal() * q.transpose();
  const MatrixXd vmh = q * w.cwiseSqrt().cwiseInverse().asDiagonal() * q.transpose();
  const MatrixXd b = vmh * omega(n) * vmh;  // antisymmetric, eigenvalues +-i/nu

  // Split R^2n into B-invariant planes. Working from an orthonormal eigenbasis
  // of the symmetric -B^2 keeps every picked vector inside one eigenspace, so
  // the construction survives degenerate nu (pure modes, equal thermal modes).
  Eigen::SelfAdjointEigenSolver<MatrixXd> es2(-b * b);
  std::vector<Eigen::VectorXd> pool;
  for (int k = 0; k < 2 * n; ++k) pool.push_back(es2.eigenvectors().col(k));

  std::vector<Eigen::VectorXd> bx, bp;
  std::vector<double> lam;
  while (static_cast<int>(bx.size()) < n) {
    // Largest remaining pool vector; vectors already consumed by extracted
    // planes have been projected down to ~0.
    int best = -1;
    double bn = 0;
    for (int k = 0; k < static_cast<int>(pool.size()); ++k) {
      const double nk = pool[k].norm();
      if (nk > bn) {
        bn = nk;
        best = k;
      }
    }
    if (best < 0 || bn < 1e-8) {
      throw numeric_error("williamson: failed to extract symplectic basis");
    }
    Eigen::VectorXd bb = pool[best] / bn;
    Eigen::VectorXd ba = -b * bb;
    const double l = ba.norm();  // = 1/nu for an eigenspace vector
    if (l < 1e-300) throw numeric_error("williamson: singular symplectic form");
    ba /= l;
    bx.push_back(bb);
    bp.push_back(ba);
    lam.push_back(l);
    pool.erase(pool.begin() + best);
    for (auto& p : pool) p -= bb * bb.dot(p) + ba * ba.dot(p);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return 1 / lam[i] < 1 / lam[j]; });

  WilliamsonDecomposition out;
  out.nu.resize(n);
  MatrixXd o(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    const int k = order[j];
    out.nu[j] = 1 / lam[k];
    o.col(j) = bx[k];
    o.col(n + j) = bp[k];
  }
  VectorXd dinv(2 * n);
  for (int j = 0; j < n; ++j) dinv(j) = dinv(n + j) = 1 / std::sqrt(out.nu[j]);
  out.s = vh * o * dinv.asDiagonal();
  return out;
}

}  // namespace qkdrates::gauss
