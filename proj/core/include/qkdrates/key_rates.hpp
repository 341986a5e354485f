// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Hashing lower bounds on the distillable secret key rate, closed form and
// via the covariance pipeline, plus measured-on-both-sides (CCQ) rates.
#pragma once

#include <algorithm>

#include "qkdrates/wiretap.hpp"

namespace qkdrates::rates {

enum class Direction { dr, rr, ccq };
enum class Channel { pure_loss, thermal };
enum class Path { closed_form, numeric, asymptotic };

struct RateResult {
  double bits_per_mode = 0;  // raw value, may be negative
  Direction direction = Direction::dr;
  Channel channel = Channel::pure_loss;
  Path path = Path::closed_form;

  double clamped() const { return std::max(bits_per_mode, 0.0); }
};

// Pure loss closed forms.
RateResult dr_pure_loss(double eta, double kappa, double mu);
RateResult dr_pure_loss_limit(double eta, double kappa);   // mu -> inf
RateResult rr_pure_loss(double eta, double kappa, double mu);
RateResult rr_pure_loss_limit(double eta, double kappa);   // mu -> inf

// Thermal closed forms (reduce to the pure loss ones at n_e = 0).
RateResult dr_thermal(const wiretap::ChannelParams& params);
RateResult dr_thermal_limit(double eta, double kappa, double n_e);
RateResult rr_thermal(const wiretap::ChannelParams& params);
RateResult rr_thermal_limit(double eta, double kappa, double n_e);

// Independent numeric pipeline: joint state, entropies, heterodyne
// conditioning. beta < 1 scales only the information term of the reverse
// bound (reconciliation efficiency).
RateResult hashing_dr_numeric(const wiretap::ChannelParams& params);
RateResult hashing_rr_numeric(const wiretap::ChannelParams& params, double beta = 1.0);

// Both sides measured: beta * I(X;Y) - Holevo(Y;ER).
RateResult ccq_rate(const wiretap::ChannelParams& params, double beta);

}  // namespace qkdrates::rates
