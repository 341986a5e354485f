// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "qkdrates/wiretap.hpp"

#include <sstream>

namespace qkdrates::wiretap {

void ChannelParams::validate() const {
  std::ostringstream bad;
  if (!(eta > 0 && eta < 1)) bad << "eta=" << eta << " outside (0,1)";
  else if (!(kappa > 0 && kappa <= 1)) bad << "kappa=" << kappa << " outside (0,1]";
  else if (!(n_e >= 0)) bad << "n_e=" << n_e << " negative";
  else if (!(mu >= 0)) bad << "mu=" << mu << " negative";
  else return;
  throw domain_error("ChannelParams: " + bad.str());
}

JointState build_joint_state(const ChannelParams& params) {
  using namespace qkdrates::gauss;
  params.validate();
  CovarianceMatrix v;
  if (!params.thermal()) {
    // Modes (A, A', E', F'); eta mixes (1,2), kappa mixes (2,3).
    v = tensor(tensor(tmsv_cov(params.mu), vacuum_cov(1)), vacuum_cov(1));
    v = apply_symplectic(beamsplitter(params.eta, 1, 2, 4), v);
    v = apply_symplectic(beamsplitter(params.kappa, 2, 3, 4), v);
    v.labels = {"A", "B", "E", "F"};
  } else {
    // Modes (A, A', E', R, F'); Eve's TMSV sits on (E', R), R never mixed.
    v = tensor(tensor(tmsv_cov(params.mu), tmsv_cov(params.n_e)), vacuum_cov(1));
    v = apply_symplectic(beamsplitter(params.eta, 1, 2, 5), v);
    v = apply_symplectic(beamsplitter(params.kappa, 2, 4, 5), v);
    v.labels = {"A", "B", "E", "R", "F"};
  }
  return {std::move(v), params};
}

gauss::CovarianceMatrix marginal(const JointState& state, const std::vector<std::string>& labels) {
  return gauss::partial_trace(state.cov, labels);
}

}  // namespace qkdrates::wiretap
