// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-contained verification suite: quantitative cross-checks between the
// closed forms, the covariance pipeline, the separability search, the Fock
// oracle, and the BB84 Monte Carlo, plus randomized property checks.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qkdrates::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs every check in order. When `log` is given, prints one
// "[PASS]/[FAIL] name: detail" line per check as results arrive.
std::vector<CheckResult> run_all(std::ostream* log = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qkdrates::verify
