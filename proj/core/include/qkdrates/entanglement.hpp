// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Relative-entropy-of-entanglement upper bounds: PPT tests, closest
// separable candidates for the retained (A, B, F) marginal, and the
// Gaussian relative entropy between two covariance matrices.
#pragma once

#include <vector>

#include "qkdrates/wiretap.hpp"

namespace qkdrates::bounds {

// Smallest eigenvalue of the Hermitian matrix V - i*Omega^PT, where
// Omega^PT flips the sign of the p quadrature on `transpose_set`.
// Nonnegative (up to tolerance) means the partial transpose is physical.
double ppt_min_eig(const gauss::CovarianceMatrix& v,
                   const std::vector<int>& transpose_set);

// Largest correlation c = sqrt((a-1)(b-1)) for which the two-mode state
// diag(a,b) with x-cross +c, p-cross -c stays PPT. Requires a, b >= 1.
double closest_sep_two_mode(double a, double b);

enum class Binding { ppt, physicality, none };

struct SeparableCandidate {
  gauss::CovarianceMatrix cov;
  double c = 0;            // retained correlation A-B
  double min_ppt_eig = 0;  // across the AF | B cut
  Binding limited_by = Binding::none;
};

// Two-mode candidate at the closed-form c, packaged for downstream use.
SeparableCandidate two_mode_candidate(double a, double b);

// Best candidate within the one-parameter family that keeps the marginal
// entries (a, b, d, e) of V_ABF and scales the A-B and B-F correlations
// together: bisect for the largest c certified PPT across AF | B and
// physical. V_ABF must be a 3-mode matrix in label order (A, B, F) with
// the x/p sign pattern produced by build_joint_state.
SeparableCandidate closest_sep_three_mode(const gauss::CovarianceMatrix& v_abf);

// D(rho1 || rho2) in bits for zero-mean Gaussian states. Returns +inf if
// rho2 lacks support (a pure direction of rho2 carries excess variance
// of rho1).
double gaussian_relative_entropy(const gauss::CovarianceMatrix& v1,
                                 const gauss::CovarianceMatrix& v2);

// Closed form for the pure loss channel: log2((eta + kappa(1-eta)) / (kappa(1-eta))).
double er_upper_bound_pure_loss(double eta, double kappa);

// Geometric grid 1 -> 1e4, 17 points, used as the default mu supremum schedule.
std::vector<double> default_mu_schedule();

struct UpperBoundResult {
  double bits = 0;         // supremum over the schedule
  bool converged = false;  // last two schedule values within 1e-3
  std::vector<double> per_mu;
};

// Upper bound on the distillable key rate: for each mu in the schedule,
// take the relative entropy from the (A, B, F) marginal to its best
// certified separable candidate, then the supremum over mu.
UpperBoundResult er_upper_bound_numeric(const wiretap::ChannelParams& params,
                                        const std::vector<double>& mu_schedule);
UpperBoundResult er_upper_bound_numeric(const wiretap::ChannelParams& params);

}  // namespace qkdrates::bounds
