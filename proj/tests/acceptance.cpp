// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Standalone end-to-end verification binary: runs every check in
// qkdrates::verify and exits nonzero if any fails. Registered with ctest
// but also useful on its own after a build.

#include <cstdio>
#include <iostream>

#include "qkdrates/verify.hpp"

int main() {
  std::vector<qkdrates::verify::CheckResult> results =
      qkdrates::verify::run_all(&std::cout);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
