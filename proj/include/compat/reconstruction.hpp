// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "compat/lattice.hpp"
#include "compat/morphisms.hpp"
#include "compat/scalar_fn.hpp"
#include "compat/space.hpp"

namespace compat {

/// The filter {F in the zero-set lattice : x ∈ F}.  The lattice must be
/// set-based over the same space.
Filter point_filter(const LatticePtr& zero_sets, int x);

/// Convenience overload building the zero-set lattice first.
Filter point_filter(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid, int x);

/// Everything produced while recovering a space from its zero-set
/// lattice: the lattice, its ultrafilter space, and the point-recovery
/// map x ↦ {F : x ∈ F} together with its verification results.
struct ReconstructionReport {
  ReconstructionReport(std::shared_ptr<const FiniteSpace> space, ValueGrid grid,
                       LatticePtr zero_sets, SpectrumSpace ultrafilters, SpaceMap point_map)
      : space(std::move(space)),
        grid(std::move(grid)),
        zero_sets(std::move(zero_sets)),
        ultrafilters(std::move(ultrafilters)),
        point_map(std::move(point_map)) {}

  std::shared_ptr<const FiniteSpace> space;
  ValueGrid grid;
  LatticePtr zero_sets;
  SpectrumSpace ultrafilters;
  /// x ↦ carrier index of its point filter.
  SpaceMap point_map;

  bool point_map_bijective = false;
  bool point_map_continuous = false;
  bool point_map_open = false;
  /// Ultrafilter space is homeomorphic to the quotient by connected
  /// components (for non-discrete spaces the recovery can only see the
  /// quotient, since continuous functions are constant on components).
  bool quotient_match = false;
  int ultrafilter_count = 0;

  /// For discrete spaces: the point map is a homeomorphism.  For all
  /// spaces: the quotient comparison holds.
  bool verified = false;
};

ReconstructionReport reconstruct(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid,
                                 unsigned long long cap = kDefaultFamilyCap);

/// An element bijection between two set lattices induced by a
/// compatibility isomorphism, with the well-definedness evidence.
struct InducedLatticeMap {
  LatticePtr source;
  LatticePtr target;
  /// source element index -> target element index
  std::vector<int> element_map;
  long long classes_checked = 0;
};

/// Sends the regular zero set of f to the regular zero set of its image.
/// Requires a verified isomorphism between full enumerations; checks that
/// members with equal zero sets have images with equal zero sets.
InducedLatticeMap induced_zero_map(const CompatMap& map);
/// Same construction on open supports.
InducedLatticeMap induced_support_map(const CompatMap& map);

struct PipelineStage {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct PipelineReport {
  std::vector<PipelineStage> stages;
  std::optional<SpaceMap> homeomorphism;

  bool ok() const {
    for (const auto& s : stages)
      if (!s.ok) return false;
    return true;
  }
  std::string first_failure() const;
};

/// Runs the whole chain on a compatibility isomorphism between full
/// families on discrete spaces: induced zero-set map, lattice
/// isomorphism check, induced ultrafilter bijection, composition with
/// the point-recovery maps, final homeomorphism verification.  Never
/// throws on verification failures; the report carries them.
PipelineReport run_pipeline(const CompatMap& map);

/// run_pipeline, but failures raise PipelineError naming the stage.
SpaceMap induced_homeomorphism(const CompatMap& map);

}  // namespace compat
