// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "compat/bitset.hpp"

namespace compat {

/// A subset of the points of an ambient FiniteSpace.
using PointSet = Bitset;

/// A finite point set together with an explicit topology, stored
/// extensionally as the full family of open sets.
///
/// Construction validates the family: it must contain the empty and the
/// full set and be closed under pairwise union and intersection (for a
/// finite space this gives closure under arbitrary unions).  Duplicates
/// are merged; the family is kept in a canonical sorted order.
class FiniteSpace {
 public:
  FiniteSpace(int point_count, std::vector<PointSet> opens);

  static FiniteSpace discrete(int point_count);
  static FiniteSpace indiscrete(int point_count);
  /// Two points {0,1} with opens {}, {0}, {0,1}.
  static FiniteSpace sierpinski();
  /// Topological sum; points of `b` are shifted past those of `a`.
  static FiniteSpace disjoint_union(const FiniteSpace& a, const FiniteSpace& b);

  int points() const { return n_; }
  const std::vector<PointSet>& opens() const { return opens_; }

  bool is_open(const PointSet& s) const;
  bool is_closed(const PointSet& s) const;
  bool is_clopen(const PointSet& s) const { return is_open(s) && is_closed(s); }
  std::vector<PointSet> clopens() const;

  PointSet empty_set() const { return PointSet(n_); }
  PointSet full_set() const { return PointSet::all(n_); }

  /// Largest open subset of s (union of all opens contained in s).
  PointSet interior(const PointSet& s) const;
  /// Complement of the interior of the complement.
  PointSet closure(const PointSet& s) const;
  PointSet boundary(const PointSet& s) const;

  bool is_regular_open(const PointSet& s) const;
  bool is_regular_closed(const PointSet& s) const;

  /// Smallest open set containing x (meaningful because finite spaces
  /// have minimal neighbourhoods).
  const PointSet& minimal_open(int x) const;
  /// Specialization: x lies in the closure of {y}.
  bool specializes(int x, int y) const;

  /// Partition into connected components, each component a PointSet;
  /// classes ordered by their least point.
  std::vector<PointSet> connected_components() const;
  /// Classes of "contained in exactly the same clopen sets".
  std::vector<PointSet> quasicomponents() const;
  bool is_connected() const { return connected_components().size() == 1; }
  /// Whether the subspace topology on s is connected (empty counts as connected).
  bool is_connected_subspace(const PointSet& s) const;

  bool is_discrete() const;
  /// On a finite space the Hausdorff property collapses to discreteness.
  bool is_hausdorff() const { return is_discrete(); }

  bool operator==(const FiniteSpace& o) const = default;

 private:
  void check_member(const PointSet& s) const;

  int n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> minimal_open_;
};

/// A point assignment between two finite spaces.  Totality is enforced at
/// construction; continuity/openness/bijectivity are recomputable queries.
class SpaceMap {
 public:
  SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<int> assignment);

  static SpaceMap identity(const FiniteSpace& space);

  const FiniteSpace& source() const { return source_; }
  const FiniteSpace& target() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }

  int apply(int x) const { return assignment_.at(static_cast<std::size_t>(x)); }
  PointSet image(const PointSet& s) const;
  PointSet preimage(const PointSet& s) const;

  bool is_continuous() const;
  bool is_open_map() const;
  bool is_bijective() const;
  bool is_surjective() const;
  bool is_homeomorphism() const;

  /// this then other.
  SpaceMap then(const SpaceMap& other) const;
  SpaceMap inverse() const;

  bool operator==(const SpaceMap& o) const = default;

 private:
  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<int> assignment_;
};

// Regular open / regular closed calculus.  Inputs are checked for
// regularity; results are again regular.
PointSet ro_join(const FiniteSpace& space, const PointSet& u, const PointSet& v);
PointSet ro_meet(const FiniteSpace& space, const PointSet& u, const PointSet& v);
PointSet rc_join(const FiniteSpace& space, const PointSet& f, const PointSet& g);
PointSet rc_meet(const FiniteSpace& space, const PointSet& f, const PointSet& g);

/// Quotient by connected components with the quotient topology, together
/// with the quotient map.  Class indices follow connected_components().
std::pair<FiniteSpace, SpaceMap> component_quotient(const FiniteSpace& space);

/// Exhaustive homeomorphism search with invariant pruning.  Returns a
/// verified homeomorphism or nullopt.
std::optional<SpaceMap> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b);

/// All labeled topologies on point_count points (enumerated via preorders).
std::vector<FiniteSpace> all_topologies(int point_count);
/// One representative per homeomorphism class.
std::vector<FiniteSpace> topologies_up_to_homeomorphism(int point_count);

}  // namespace compat
