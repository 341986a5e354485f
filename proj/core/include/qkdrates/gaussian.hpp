// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Covariance-matrix calculus for zero-mean Gaussian states.
//
// Conventions used throughout:
//   * quadrature ordering r = (x_1..x_N, p_1..p_N)  (xxpp)
//   * vacuum covariance = identity, thermal(nbar) = (2*nbar+1)*I
//   * symplectic form Omega = [[0, I], [-I, 0]]
//   * entropies in bits
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qkdrates/common.hpp"

namespace qkdrates::gauss {

// Real symmetric 2N x 2N covariance matrix with one name per mode.
struct CovarianceMatrix {
  Eigen::MatrixXd m;
  std::vector<std::string> labels;

  int n_modes() const { return static_cast<int>(labels.size()); }
  // Row/column of the x (p) quadrature of a mode.
  int x(int mode) const { return mode; }
  int p(int mode) const { return n_modes() + mode; }
  // Index of a labeled mode; throws domain_error if absent.
  int index_of(std::string_view label) const;
};

struct SymplecticMatrix {
  Eigen::MatrixXd m;
};

// Symplectic form for n modes in xxpp ordering.
Eigen::MatrixXd omega(int n);

// Entropy of a thermal state with mean photon number x, in bits:
// g(x) = (x+1)log2(x+1) - x log2 x, with g(0) = 0.
double g_entropy(double x);

CovarianceMatrix vacuum_cov(int n);
CovarianceMatrix thermal_cov(double nbar);          // one mode
CovarianceMatrix tmsv_cov(double mu);               // two modes, mu photons per arm
CovarianceMatrix tensor(const CovarianceMatrix& a, const CovarianceMatrix& b);

// Beamsplitter of transmissivity t mixing modes i and j of an n-mode system.
// Mixing block ( sqrt(t)   sqrt(1-t) ) applied identically to x and p.
//              (-sqrt(1-t) sqrt(t)   )
SymplecticMatrix beamsplitter(double t, int i, int j, int n);

bool is_symplectic(const Eigen::MatrixXd& s, double tol = sym_tol);

// S V S^T, symmetrized.
CovarianceMatrix apply_symplectic(const SymplecticMatrix& s, const CovarianceMatrix& v);

// Principal submatrix on the kept modes, in the order given.
CovarianceMatrix partial_trace(const CovarianceMatrix& v, const std::vector<int>& keep);
CovarianceMatrix partial_trace(const CovarianceMatrix& v, const std::vector<std::string>& keep);

// Min eigenvalue of the Hermitian matrix V - i*Omega (>= ~0 for physical states).
double physicality_min_eig(const CovarianceMatrix& v);
// Throws physicality_error when the min eigenvalue is below -phys_tol.
void check_physical(const CovarianceMatrix& v);

// One entry per mode, ascending, clamped to >= 1.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v);

// Sum of g((nu_i - 1)/2) over the symplectic spectrum, in bits.
double von_neumann_entropy(const CovarianceMatrix& v);

// Covariance of the remaining modes after a heterodyne measurement of one mode:
// V_R - C (V_m + I)^-1 C^T. Outcome independent, so no outcome parameter.
CovarianceMatrix heterodyne_condition(const CovarianceMatrix& v, int mode);
CovarianceMatrix heterodyne_condition(const CovarianceMatrix& v, std::string_view label);

// Mean photon number of one labeled mode, (V_xx + V_pp - 2)/4.
double mean_photon(const CovarianceMatrix& v, std::string_view label);

// V = S diag(nu, nu) S^T with S symplectic, nu_i >= 1 ascending.
struct WilliamsonDecomposition {
  Eigen::MatrixXd s;
  std::vector<double> nu;
};
WilliamsonDecomposition williamson(const CovarianceMatrix& v);

// Symplectic inverse -Omega S^T Omega (equals S^-1 without a solve).
Eigen::MatrixXd symplectic_inverse(const Eigen::MatrixXd& s);

}  // namespace qkdrates::gauss
