// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Joint Gaussian state of the restricted-eavesdropper wiretap channel.
//
// Alice keeps arm A of a TMSV and sends A' through a beamsplitter of
// transmissivity eta whose other input is Eve's injected mode (vacuum, or one
// arm of a TMSV with n_e photons whose partner R Eve retains). The reflected
// light passes a second beamsplitter of transmissivity kappa: Eve collects E,
// the fraction F is lost to the environment.
#pragma once

#include "qkdrates/gaussian.hpp"

namespace qkdrates::wiretap {

struct ChannelParams {
  double eta;        // channel transmissivity, in (0,1)
  double kappa;      // Eve's collection fraction, in (0,1]
  double n_e = 0;    // Eve's injected thermal photons, >= 0
  double mu = 0;     // TMSV photons per arm, >= 0

  bool thermal() const { return n_e > 0; }
  void validate() const;  // throws domain_error
};

// Labels: {A,B,E,F} for pure loss, {A,B,E,R,F} for thermal.
struct JointState {
  gauss::CovarianceMatrix cov;
  ChannelParams params;
};

JointState build_joint_state(const ChannelParams& params);

gauss::CovarianceMatrix marginal(const JointState& state, const std::vector<std::string>& labels);

}  // namespace qkdrates::wiretap
