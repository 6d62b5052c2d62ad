// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "compat/scalar_fn.hpp"
#include "compat/space.hpp"

namespace compat {

/// An ordered, duplicate-free family of continuous functions on one
/// space, always containing the zero function.  Families are either full
/// enumerations of all grid-valued continuous functions or explicit
/// function lists; fullness is detected and retained because several
/// consumers require it.
class FnFamily {
 public:
  static FnFamily enumerate(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid,
                            unsigned long long cap = kDefaultFamilyCap);
  static FnFamily from_functions(std::vector<ScalarFn> functions);

  const FiniteSpace& space() const { return *space_; }
  const std::shared_ptr<const FiniteSpace>& space_ptr() const { return space_; }
  /// Values attained across the family (always includes 0).
  const ValueGrid& value_set() const { return values_; }
  /// True when the family is exactly all continuous value_set()-valued
  /// functions on the space.
  bool is_full_enumeration() const { return full_; }

  int size() const { return static_cast<int>(fns_.size()); }
  const ScalarFn& operator[](int i) const { return fns_.at(static_cast<std::size_t>(i)); }
  const std::vector<ScalarFn>& functions() const { return fns_; }
  int zero_index() const { return zero_index_; }
  std::optional<int> index_of(const ScalarFn& f) const;

  bool operator==(const FnFamily& o) const { return fns_ == o.fns_; }

 private:
  FnFamily(std::shared_ptr<const FiniteSpace> space, ValueGrid values, std::vector<ScalarFn> fns,
           bool full);

  std::shared_ptr<const FiniteSpace> space_;
  ValueGrid values_;
  std::vector<ScalarFn> fns_;
  int zero_index_ = -1;
  bool full_ = false;
};

/// A failing pair of source-family indices with a human-readable reason.
struct WitnessPair {
  int f = -1;
  int g = -1;
  std::string reason;
};

/// A total assignment from one function family to another.  Order
/// preservation and invertibility are checked, not assumed; an
/// isomorphism is a bijection preserving the compatibility ordering in
/// both directions.
class CompatMap {
 public:
  CompatMap(FnFamily source, FnFamily target, std::vector<int> assignment);

  const FnFamily& source() const { return source_; }
  const FnFamily& target() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }
  int apply_index(int i) const { return assignment_.at(static_cast<std::size_t>(i)); }
  const ScalarFn& apply(int i) const { return target_[apply_index(i)]; }

  bool is_bijective() const;
  bool is_compat_morphism(WitnessPair* witness = nullptr) const;
  bool is_compat_iso(WitnessPair* witness = nullptr) const;

  CompatMap inverse() const;
  /// Composition: first this map, then `second` (whose source family must
  /// equal this map's target family).
  CompatMap then(const CompatMap& second) const;

 private:
  FnFamily source_;
  FnFamily target_;
  std::vector<int> assignment_;
};

CompatMap identity_map(const FnFamily& family);

/// f on X maps to f∘φ⁻¹ on Y.  φ must be a homeomorphism and the families
/// must attain the same values.
CompatMap from_homeomorphism(const SpaceMap& phi, const FnFamily& family_x,
                             const FnFamily& family_y);

/// f maps to α∘f for a value bijection α with α(0)=0, given as pairs
/// (v, α(v)) covering the family's value set.
CompatMap value_relabel(const std::vector<std::pair<Rational, Rational>>& alpha,
                        const FnFamily& family);

/// Indices of the nowhere-zero members, in family order.
std::vector<int> nowhere_zero_indices(const FnFamily& family);

/// Permutes the nowhere-zero members and fixes everything else.  Sound
/// only on connected spaces, where no vanishing function lies strictly
/// below a nowhere-zero one; refused on disconnected spaces.
CompatMap nonvanishing_shuffle(const std::vector<int>& unit_permutation, const FnFamily& family);

/// Demonstrates why the shuffle is refused on disconnected spaces: a
/// shuffle of the nowhere-zero members together with a pair whose
/// ordering it breaks.
struct ShuffleBreak {
  CompatMap map;
  WitnessPair witness;
};
ShuffleBreak shuffle_break_example(const FnFamily& family);

/// Swaps two nonvanishing values on one connected component F: every
/// family member equal to rep1 on F is rewritten to rep2 there and vice
/// versa, all other members are fixed.  Preconditions, checked in this
/// order and reported by name: F has nonempty interior; F is a connected
/// component; rep1/rep2 belong to the family and vanish nowhere on F;
/// rep1/rep2 agree on the boundary of F.
CompatMap swap_construction(const FnFamily& family, const PointSet& component,
                            const ScalarFn& rep1, const ScalarFn& rep2);

/// Pair classification used to verify a swap map: ordered pairs are
/// preserved because either both members miss the rewritten subfamily,
/// only the upper one lies in it, or both lie in it and are rewritten
/// alike.
struct SwapTrace {
  long long pairs_outside = 0;
  long long pairs_upper_in = 0;
  long long pairs_both_in = 0;
  long long violations = 0;
  bool boundary_vacuous = false;
  bool differs_from_identity = false;
};
SwapTrace swap_verification_trace(const CompatMap& map, const PointSet& component);

/// A pointwise-order isomorphism S given by per-point strictly
/// increasing value maps (pairs (v, s_x(v)) covering the value set).
struct PointwiseIso {
  FnFamily source;
  std::vector<std::vector<std::pair<Rational, Rational>>> point_maps;

  ScalarFn apply(const ScalarFn& f) const;
};

/// S with s_x(value with grid index k) = target_values[k] + offset[x];
/// target_values must be strictly increasing and match the value-set
/// size.  The offsets make S move the zero function.
PointwiseIso increasing_pointwise_iso(const FnFamily& family,
                                      const std::vector<Rational>& target_values,
                                      const std::vector<Rational>& offsets);

/// Normalizes a pointwise-order isomorphism into a compatibility
/// isomorphism: T f = S f − S 0.  S is first verified to preserve the
/// pointwise order in both directions.
CompatMap shift_normalization(const PointwiseIso& s);

/// Linear disjointness-preserving bijection of all rational functions on
/// a discrete space: (M f)(y) = coefficient[y] · f(permutation[y]).
struct MonomialMap {
  std::shared_ptr<const FiniteSpace> space;
  std::vector<int> point_permutation;
  std::vector<Rational> coefficients;

  ScalarFn apply(const ScalarFn& f) const;
};
MonomialMap make_monomial_map(std::shared_ptr<const FiniteSpace> space,
                              std::vector<int> point_permutation,
                              std::vector<Rational> coefficients);

/// Outcome of a property sweep; pass() means no violations.
struct CheckReport {
  std::string name;
  long long checks = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool pass() const { return violations.empty(); }
};

/// For every pair: orthogonality is preserved and reflected; for
/// orthogonal pairs whose sum stays in the source family, the map is
/// additive on them.
CheckReport check_additive_lemma(const CompatMap& map);

/// The clopen-set map U ↦ open support of T(indicator-like member):
/// images are clopen, complements map to complements, and functions
/// agreeing on U have images agreeing on the image of U.
CheckReport check_clopen_props(const CompatMap& map);

/// For every nonempty connected subset F and every pair g ⪯ f with f
/// vanishing nowhere on F: g equals f on all of F or vanishes on all of
/// F, never a mixture.
CheckReport check_agree_or_vanish(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid);

/// Structural obstructions to any compatibility isomorphism between two
/// families: cardinality and the multiset of down-set sizes.
struct IsoObstruction {
  int size_x = 0;
  int size_y = 0;
  std::vector<long long> profile_x;
  std::vector<long long> profile_y;

  bool size_mismatch() const { return size_x != size_y; }
  bool profile_mismatch() const { return profile_x != profile_y; }
  bool iso_possible() const { return !size_mismatch() && !profile_mismatch(); }
  std::string summary() const;
};
IsoObstruction no_iso_certificate(const FnFamily& x, const FnFamily& y);

/// Three classical-morphism sweeps on discrete spaces:
/// multiplication-preserving bijections are compatibility morphisms;
/// normalized pointwise-order isomorphisms are compatibility
/// isomorphisms; monomial maps satisfy the disjointness implication
/// chain f ⪯ g ⇒ (g−f)f = 0 ⇒ (Mg−Mf)Mf = 0 ⇒ Mf ⪯ Mg.  Sub-sweeps
/// with no nontrivial instances are reported as vacuous, never silently
/// passed.
CheckReport check_classical_suites(const std::vector<int>& sizes, int trials, std::uint64_t seed);

}  // namespace compat
