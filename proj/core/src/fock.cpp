// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "qkdrates/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qkdrates/common.hpp"

namespace qkdrates::fock {

namespace {

using cplx = std::complex<double>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Stride of mode m when mode 0 varies slowest.
std::size_t stride_of(int m, int n_modes, int dim) {
  return ipow(static_cast<std::size_t>(dim), n_modes - 1 - m);
}

void check_state(const FockState& st) {
  require(st.dim >= 2, "Fock truncation must be at least 2");
  require(st.n_modes >= 1, "state needs at least one mode");
  require(st.amp.size() == ipow(static_cast<std::size_t>(st.dim), st.n_modes),
          "amplitude vector size does not match dim^n_modes");
}

std::vector<int> checked_subset(const FockState& st, const std::vector<int>& subset) {
  require(!subset.empty(), "subset must not be empty");
  std::vector<int> seen;
  for (int m : subset) {
    require(m >= 0 && m < st.n_modes,
            "subset mode " + std::to_string(m) + " out of range");
    require(std::find(seen.begin(), seen.end(), m) == seen.end(),
            "subset modes must be distinct");
    seen.push_back(m);
  }
  return seen;
}

// Reshape the amplitude tensor into (subset) x (complement).
Eigen::MatrixXcd split_matrix(const FockState& st, const std::vector<int>& subset) {
  std::vector<int> rest;
  for (int m = 0; m < st.n_modes; ++m)
    if (std::find(subset.begin(), subset.end(), m) == subset.end())
      rest.push_back(m);

  const int s = static_cast<int>(subset.size());
  const std::size_t d_s = ipow(st.dim, s);
  const std::size_t d_c = ipow(st.dim, static_cast<int>(rest.size()));
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d_s, d_c);

  std::vector<std::size_t> stride(st.n_modes);
  for (int m = 0; m < st.n_modes; ++m)
    stride[m] = stride_of(m, st.n_modes, st.dim);

  for (std::size_t idx = 0; idx < st.amp.size(); ++idx) {
    if (st.amp[idx] == cplx(0, 0)) continue;
    std::size_t row = 0, col = 0;
    for (int q = 0; q < s; ++q)
      row = row * st.dim + (idx / stride[subset[q]]) % st.dim;
    for (int r : rest) col = col * st.dim + (idx / stride[r]) % st.dim;
    a(row, col) = st.amp[idx];
  }
  return a;
}

// x = a + a^dag on one mode of an s-mode truncated vector.
Eigen::VectorXcd apply_x(const Eigen::VectorXcd& psi, int mode, int s, int dim) {
  const std::size_t str = stride_of(mode, s, dim);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    int n = static_cast<int>((idx / str) % dim);
    cplx v(0, 0);
    if (n > 0) v += std::sqrt(double(n)) * psi[idx - str];
    if (n + 1 < dim) v += std::sqrt(double(n + 1)) * psi[idx + str];
    out[idx] = v;
  }
  return out;
}

// p = i (a^dag - a) on one mode.
Eigen::VectorXcd apply_p(const Eigen::VectorXcd& psi, int mode, int s, int dim) {
  const std::size_t str = stride_of(mode, s, dim);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    int n = static_cast<int>((idx / str) % dim);
    cplx v(0, 0);
    if (n > 0) v += cplx(0, 1) * std::sqrt(double(n)) * psi[idx - str];
    if (n + 1 < dim) v -= cplx(0, 1) * std::sqrt(double(n + 1)) * psi[idx + str];
    out[idx] = v;
  }
  return out;
}

}  // namespace

FockState vacuum_fock(int n_modes, int dim) {
  require(dim >= 2, "Fock truncation must be at least 2");
  require(n_modes >= 1, "need at least one mode");
  FockState st;
  st.dim = dim;
  st.n_modes = n_modes;
  st.amp.assign(ipow(dim, n_modes), cplx(0, 0));
  st.amp[0] = 1.0;
  return st;
}

FockState tmsv_fock(double mu, int dim) {
  require(mu >= 0.0, "mu must be nonnegative");
  FockState st = vacuum_fock(2, dim);
  if (mu == 0.0) return st;

  const double q = mu / (mu + 1.0);
  double leak = std::pow(q, dim);
  require(leak <= 1e-8, "truncation leakage " + std::to_string(leak) +
                            " exceeds 1e-8; increase dim");
  st.leakage = leak;
  st.amp[0] = 0.0;
  double kept = 1.0 - leak;
  for (int n = 0; n < dim; ++n) {
    double p_n = (1.0 - q) * std::pow(q, n);
    st.amp[static_cast<std::size_t>(n) * dim + n] = std::sqrt(p_n / kept);
  }
  return st;
}

FockState tensor(const FockState& a, const FockState& b) {
  check_state(a);
  check_state(b);
  require(a.dim == b.dim, "tensor factors must share the truncation dim");
  FockState st;
  st.dim = a.dim;
  st.n_modes = a.n_modes + b.n_modes;
  st.leakage = a.leakage + b.leakage - a.leakage * b.leakage;
  st.amp.assign(a.amp.size() * b.amp.size(), cplx(0, 0));
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    if (a.amp[i] == cplx(0, 0)) continue;
    for (std::size_t j = 0; j < b.amp.size(); ++j)
      st.amp[i * b.amp.size() + j] = a.amp[i] * b.amp[j];
  }
  return st;
}

FockState beamsplitter_fock(double t, int mode_i, int mode_j,
                            const FockState& state) {
  check_state(state);
  require(t >= 0.0 && t <= 1.0, "transmissivity must lie in [0, 1]");
  require(mode_i != mode_j, "beamsplitter needs two distinct modes");
  require(mode_i >= 0 && mode_i < state.n_modes && mode_j >= 0 &&
              mode_j < state.n_modes,
          "beamsplitter mode out of range");

  const int dim = state.dim;
  const double theta = std::acos(std::sqrt(t));

  // Per-total-photon-number blocks of exp(theta (a_i^dag a_j - a_j^dag a_i)).
  std::vector<Eigen::MatrixXd> u_blocks(2 * dim - 1);
  for (int total = 0; total <= 2 * (dim - 1); ++total) {
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(total + 1, total + 1);
    for (int k = 0; k + 1 <= total; ++k)
      gen(k + 1, k) = std::sqrt(double((k + 1) * (total - k)));
    Eigen::MatrixXd asym = gen - gen.transpose();
    Eigen::MatrixXcd h = cplx(0, 1) * asym.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases =
        (cplx(0, -theta) * es.eigenvalues().cast<cplx>()).array().exp();
    u_blocks[total] =
        (es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint())
            .real();
  }

  FockState out = state;
  std::fill(out.amp.begin(), out.amp.end(), cplx(0, 0));
  const std::size_t str_i = stride_of(mode_i, state.n_modes, dim);
  const std::size_t str_j = stride_of(mode_j, state.n_modes, dim);
  double dropped = 0.0;

  for (std::size_t base = 0; base < state.amp.size(); ++base) {
    if ((base / str_i) % dim != 0 || (base / str_j) % dim != 0) continue;
    for (int total = 0; total <= 2 * (dim - 1); ++total) {
      Eigen::VectorXcd in = Eigen::VectorXcd::Zero(total + 1);
      bool any = false;
      for (int k = std::max(0, total - dim + 1); k <= std::min(total, dim - 1);
           ++k) {
        cplx v = state.amp[base + k * str_i +
                           static_cast<std::size_t>(total - k) * str_j];
        in[k] = v;
        any = any || v != cplx(0, 0);
      }
      if (!any) continue;
      Eigen::VectorXcd tr = u_blocks[total].cast<cplx>() * in;
      for (int k = 0; k <= total; ++k) {
        if (k < dim && total - k < dim)
          out.amp[base + k * str_i + static_cast<std::size_t>(total - k) * str_j] =
              tr[k];
        else
          dropped += std::norm(tr[k]);
      }
    }
  }
  out.leakage = state.leakage + dropped;
  return out;
}

double norm(const FockState& state) {
  double n = 0.0;
  for (const cplx& a : state.amp) n += std::norm(a);
  return n;
}

double mean_photon_fock(const FockState& state, int mode) {
  check_state(state);
  require(mode >= 0 && mode < state.n_modes, "mode out of range");
  const std::size_t str = stride_of(mode, state.n_modes, state.dim);
  double total = 0.0;
  for (std::size_t idx = 0; idx < state.amp.size(); ++idx)
    total += std::norm(state.amp[idx]) *
             static_cast<double>((idx / str) % state.dim);
  return total;
}

std::vector<double> schmidt_sq(const FockState& state,
                               const std::vector<int>& subset) {
  check_state(state);
  std::vector<int> sub = checked_subset(state, subset);
  if (static_cast<int>(sub.size()) == state.n_modes) return {norm(state)};

  Eigen::MatrixXcd a = split_matrix(state, sub);
  Eigen::MatrixXcd gram = a.rows() <= a.cols() ? (a * a.adjoint()).eval()
                                               : (a.adjoint() * a).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  std::vector<double> lams(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  for (double& l : lams) l = std::max(l, 0.0);
  std::sort(lams.rbegin(), lams.rend());
  return lams;
}

double entropy_fock(const FockState& state, const std::vector<int>& subset) {
  double h = 0.0;
  for (double l : schmidt_sq(state, subset))
    if (l > 1e-15) h -= l * std::log2(l);
  return h;
}

Eigen::MatrixXcd density_matrix(const FockState& state,
                                const std::vector<int>& subset) {
  check_state(state);
  std::vector<int> sub = checked_subset(state, subset);
  const std::size_t d_s = ipow(state.dim, static_cast<int>(sub.size()));
  require(d_s <= 8192, "reduced space too large to materialize (" +
                           std::to_string(d_s) + " levels)");
  if (static_cast<int>(sub.size()) == state.n_modes) {
    Eigen::Map<const Eigen::VectorXcd> v(state.amp.data(), state.amp.size());
    return v * v.adjoint();
  }
  Eigen::MatrixXcd a = split_matrix(state, sub);
  return a * a.adjoint();
}

double relative_entropy_fock(const Eigen::MatrixXcd& rho,
                             const Eigen::MatrixXcd& sigma) {
  require(rho.rows() == rho.cols() && sigma.rows() == sigma.cols() &&
              rho.rows() == sigma.rows(),
          "relative entropy needs square matrices of equal size");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> er(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sigma);
  const Eigen::VectorXd p = er.eigenvalues();
  const Eigen::VectorXd q = es.eigenvalues();
  Eigen::MatrixXd overlap =
      (er.eigenvectors().adjoint() * es.eigenvectors()).cwiseAbs2();

  constexpr double p_tol = 1e-14;
  constexpr double q_tol = 1e-13;
  double d = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > p_tol) d += p[i] * std::log2(p[i]);
  for (Eigen::Index j = 0; j < q.size(); ++j) {
    double w = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
      if (p[i] > p_tol) w += p[i] * overlap(i, j);
    if (q[j] <= q_tol) {
      if (w > 1e-9) return std::numeric_limits<double>::infinity();
      continue;
    }
    d -= w * std::log2(q[j]);
  }
  return d;
}

double relative_entropy_vs_gaussian(const FockState& state,
                                    const std::vector<int>& subset,
                                    const gauss::CovarianceMatrix& sigma_cov) {
  check_state(state);
  std::vector<int> sub = checked_subset(state, subset);
  const int s = static_cast<int>(sub.size());
  require(sigma_cov.n_modes() == s,
          "sigma covariance mode count must match the subset size");

  // Spectral data of the reduced state through the smaller side of the
  // subset/rest split; the subset side can be far too large to square.
  Eigen::MatrixXcd a = split_matrix(state, sub);
  std::vector<double> lams;
  std::vector<Eigen::VectorXcd> vecs;
  if (a.rows() <= a.cols()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a * a.adjoint());
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      if (es.eigenvalues()[k] <= 1e-12) continue;
      lams.push_back(es.eigenvalues()[k]);
      vecs.push_back(es.eigenvectors().col(k));
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.adjoint() * a);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      double lam = es.eigenvalues()[k];
      if (lam <= 1e-12) continue;
      lams.push_back(lam);
      vecs.push_back(a * es.eigenvectors().col(k) / std::sqrt(lam));
    }
  }

  gauss::WilliamsonDecomposition wd = gauss::williamson(sigma_cov);
  Eigen::VectorXd gamma(s);
  double const_term = 0.0;
  for (int j = 0; j < s; ++j) {
    double nu = std::max(wd.nu[j], 1.0 + 1e-12);
    gamma[j] = 0.5 * std::log((nu + 1.0) / (nu - 1.0));
    const_term += gamma[j] - std::log((nu + 1.0) / 2.0);
  }
  Eigen::MatrixXd g_d = Eigen::MatrixXd::Zero(2 * s, 2 * s);
  for (int j = 0; j < s; ++j) {
    g_d(j, j) = gamma[j];
    g_d(s + j, s + j) = gamma[j];
  }
  Eigen::MatrixXd si = gauss::symplectic_inverse(wd.s);
  Eigen::MatrixXd g = si.transpose() * g_d * si;

  const int dim = state.dim;
  double cross_quad = 0.0;  // E[ r^T G r ] in the state rho
  double tr_rho_ln_rho = 0.0;
  for (std::size_t k = 0; k < lams.size(); ++k) {
    double lam = lams[k];
    tr_rho_ln_rho += lam * std::log(lam);
    const Eigen::VectorXcd& phi = vecs[k];
    Eigen::MatrixXcd w(phi.size(), 2 * s);
    for (int m = 0; m < s; ++m) {
      w.col(m) = apply_x(phi, m, s, dim);
      w.col(s + m) = apply_p(phi, m, s, dim);
    }
    Eigen::MatrixXcd gram = w.adjoint() * w;
    cross_quad += lam * (g.cast<cplx>().cwiseProduct(gram)).sum().real();
  }

  double tr_rho_ln_sigma = -0.5 * cross_quad + const_term;
  return (tr_rho_ln_rho - tr_rho_ln_sigma) / std::log(2.0);
}

}  // namespace qkdrates::fock
