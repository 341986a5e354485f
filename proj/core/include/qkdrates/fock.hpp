// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Truncated Fock-space oracle: brute-force state vectors, beamsplitter
// unitaries, reduced density matrices and entropies at small photon
// number, used to validate the covariance-matrix pipeline.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qkdrates/gaussian.hpp"

namespace qkdrates::fock {

// Pure multimode state on (dim)^n_modes amplitudes, mode 0 slowest index.
struct FockState {
  int dim = 0;
  int n_modes = 0;
  std::vector<std::complex<double>> amp;
  double leakage = 0;  // probability mass dropped by truncation so far

  std::size_t size() const { return amp.size(); }
};

FockState vacuum_fock(int n_modes, int dim);

// Two-mode squeezed vacuum with mean photon number mu per arm. Refuses
// truncations whose tail exceeds 1e-8.
FockState tmsv_fock(double mu, int dim);

FockState tensor(const FockState& a, const FockState& b);

// Beamsplitter of transmissivity t on (mode_i, mode_j); same orientation
// as gauss::beamsplitter. Norm lost above the truncation adds to leakage.
FockState beamsplitter_fock(double t, int mode_i, int mode_j,
                            const FockState& state);

double norm(const FockState& state);
double mean_photon_fock(const FockState& state, int mode);

// Squared Schmidt coefficients of the subset/rest split, descending.
std::vector<double> schmidt_sq(const FockState& state,
                               const std::vector<int>& subset);

// Entropy of the reduced state on `subset`, in bits.
double entropy_fock(const FockState& state, const std::vector<int>& subset);

// Reduced density matrix on `subset` (subset-order indexing).
Eigen::MatrixXcd density_matrix(const FockState& state,
                                const std::vector<int>& subset);

// D(rho || sigma) in bits for Hermitian PSD matrices of near-unit trace.
double relative_entropy_fock(const Eigen::MatrixXcd& rho,
                             const Eigen::MatrixXcd& sigma);

// D(reduced state on subset || Gaussian state with covariance sigma_cov),
// evaluated matrix-free through the Gibbs form of the Gaussian state.
double relative_entropy_vs_gaussian(const FockState& state,
                                    const std::vector<int>& subset,
                                    const gauss::CovarianceMatrix& sigma_cov);

}  // namespace qkdrates::fock
