// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qkdrates {

// Shared numeric tolerances.
inline constexpr double phys_tol = 1e-9;   // min eigenvalue slack on V - i*Omega
inline constexpr double sym_tol = 1e-10;   // residual on S*Omega*S^T - Omega
inline constexpr double root_tol = 1e-10;  // bisection target on the PPT eigenvalue

// Invalid inputs (parameter ranges, shape mismatches, unknown labels).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base for failures detected while computing (as opposed to bad inputs).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A covariance matrix failed the Heisenberg condition min eig(V - i*Omega) >= -phys_tol.
class physicality_error : public numeric_error {
 public:
  physicality_error(const std::string& what, double min_eig)
      : numeric_error(what), min_eig_(min_eig) {}
  double min_eig() const { return min_eig_; }

 private:
  double min_eig_;
};

// A bracketed root search found no sign change; carries the endpoint values.
class bracket_error : public numeric_error {
 public:
  bracket_error(const std::string& what, double f_lo, double f_hi)
      : numeric_error(what), f_lo_(f_lo), f_hi_(f_hi) {}
  double f_lo() const { return f_lo_; }
  double f_hi() const { return f_hi_; }

 private:
  double f_lo_;
  double f_hi_;
};

}  // namespace qkdrates
