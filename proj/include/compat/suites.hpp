// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compat/lattice.hpp"
#include "compat/morphisms.hpp"

namespace compat {

/// One verification sweep of the release checklist.
struct SuiteResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 12345;
  /// Number of generated isomorphisms the pipeline sweep must drive
  /// end to end (at least 200 must succeed).
  int pipeline_trials = 220;
  int composition_trials = 50;
  /// Seeded trials per classical sub-sweep.
  int classical_trials = 12;
};

/// Lattices built along the way, reused by the spectrum-base sweep.
using LatticeLog = std::vector<LatticePtr>;
/// Isomorphisms generated by the pipeline sweep, reused by the
/// structural-preservation sweep.
using IsoLog = std::vector<CompatMap>;

SuiteResult criterion_ordering_oracle();
SuiteResult criterion_lattice_identities(LatticeLog& lattices);
SuiteResult criterion_part_splitting();
SuiteResult criterion_point_recovery(LatticeLog& lattices);
SuiteResult criterion_spectrum_base(const LatticeLog& lattices);
SuiteResult criterion_pipeline(const SuiteOptions& options, IsoLog& isos);
SuiteResult criterion_no_isomorphism();
SuiteResult criterion_structural_checks(const IsoLog& isos);
SuiteResult criterion_swap_instances();
SuiteResult criterion_classical(const SuiteOptions& options);

/// Runs all ten sweeps in order, sharing the lattice and isomorphism
/// logs between the ones that consume them.
std::vector<SuiteResult> run_acceptance_suite(const SuiteOptions& options = {});

/// "PASS  [3] name: detail" rendering, one line per sweep.
std::string format_suite_line(const SuiteResult& result);

}  // namespace compat
