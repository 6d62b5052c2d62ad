// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

// Runs every release-gate sweep and prints one verdict line per sweep.
// Exit status is nonzero as soon as any sweep fails.

#include <cstdlib>
#include <iostream>

#include "compat/suites.hpp"

int main() {
  bool all = true;
  try {
    for (const compat::SuiteResult& r : compat::run_acceptance_suite()) {
      std::cout << compat::format_suite_line(r) << std::endl;
      all = all && r.pass;
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL  suite aborted: " << e.what() << std::endl;
    return EXIT_FAILURE;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
