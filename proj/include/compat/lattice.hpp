// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "compat/scalar_fn.hpp"
#include "compat/space.hpp"

namespace compat {

enum class Provenance { RO, RC, ZeroSets, Supports, Abstract };

std::string to_string(Provenance p);

/// A finite bounded distributive lattice given by explicit join/meet
/// tables over an ordered element list.  Set-based lattices additionally
/// carry their elements as point sets, and their induced order is checked
/// to coincide with inclusion.
///
/// Construction validates the whole axiom set on all pairs/triples:
/// idempotence, commutativity, associativity, absorption, both
/// distributive laws, neutrality of bottom/top, and agreement of the two
/// order definitions (via meet and via join).
class FiniteLattice {
 public:
  /// Abstract lattice from operation tables; labels are optional.
  FiniteLattice(std::vector<std::vector<int>> join_table, std::vector<std::vector<int>> meet_table,
                std::vector<std::string> labels = {});

  /// Set lattice; join/meet are computed with the supplied operations and
  /// must stay inside the element list.
  template <typename Join, typename Meet>
  static FiniteLattice from_sets(Provenance provenance, std::vector<PointSet> elements, Join join,
                                 Meet meet);

  int size() const { return static_cast<int>(join_.size()); }
  int join(int a, int b) const { return join_[check(a)][check(b)]; }
  int meet(int a, int b) const { return meet_[check(a)][check(b)]; }
  bool leq(int a, int b) const { return meet(a, b) == a; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  Provenance provenance() const { return provenance_; }

  bool is_set_based() const { return !elements_.empty(); }
  const std::vector<PointSet>& elements() const { return elements_; }
  const PointSet& element(int i) const { return elements_.at(static_cast<std::size_t>(check(i))); }
  /// Index of a point set element; throws if absent.
  int index_of(const PointSet& s) const;
  std::string label(int i) const;

  /// Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  bool operator==(const FiniteLattice& o) const;

 private:
  FiniteLattice() = default;
  void validate() const;

  int check(int i) const {
    if (i < 0 || i >= size()) throw std::invalid_argument("FiniteLattice: element index out of range");
    return i;
  }

  std::vector<std::vector<int>> join_;
  std::vector<std::vector<int>> meet_;
  std::vector<PointSet> elements_;
  std::vector<std::string> labels_;
  int bottom_ = -1;
  int top_ = -1;
  Provenance provenance_ = Provenance::Abstract;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// All regularly open sets of the space under (int-cl-of-union, intersection).
FiniteLattice lattice_from_ro(const FiniteSpace& space);
/// All regularly closed sets under (union, cl-int-of-intersection).
FiniteLattice lattice_from_rc(const FiniteSpace& space);

/// Lattice of the regular zero sets of all continuous grid-valued
/// functions, with the regularly-closed operations.
FiniteLattice zero_lattice(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid,
                           unsigned long long cap = kDefaultFamilyCap);
/// Lattice of the open supports, with the regularly-open operations.
FiniteLattice support_lattice(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid,
                              unsigned long long cap = kDefaultFamilyCap);

/// Total order 0 < 1 < ... < k-1 as an abstract lattice.
FiniteLattice chain_lattice(int size);

/// A set of lattice elements, stored extensionally as a bit vector.
class Filter {
 public:
  Filter(LatticePtr lattice, Bitset members);

  const FiniteLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const Bitset& members() const { return members_; }
  bool contains(int i) const { return members_.test(i); }
  int count() const { return members_.count(); }

  /// Nonempty, proper, upward closed, closed under meet.
  bool is_filter() const;
  /// is_filter plus the join-splitting condition.
  bool is_prime() const;
  /// Maximal proper filter: every one-element extension generates an
  /// improper filter.
  bool is_ultrafilter() const;

  bool operator==(const Filter& o) const { return members_ == o.members_; }
  bool operator<(const Filter& o) const { return members_ < o.members_; }

 private:
  LatticePtr lattice_;
  Bitset members_;
};

/// Upward closure of {a}.
Filter principal_filter(LatticePtr lattice, int a);
/// All proper filters.  In a finite lattice every filter is principal
/// (the meet of its members belongs to it), so these are the principal
/// filters of the non-bottom elements.
std::vector<Filter> all_filters(LatticePtr lattice);
std::vector<Filter> all_prime_filters(LatticePtr lattice);
std::vector<Filter> all_ultrafilters(LatticePtr lattice);

bool is_prime_filter(const Filter& filter);

enum class SpectrumBase {
  /// Base sets U_a = { F : a not in F }.
  Standard,
  /// Base sets { F : a in F }; kept only to demonstrate the difference.
  Zariski,
};

/// Prime filters (or ultrafilters) of a lattice with the topology
/// generated by the base indexed by lattice elements.
struct SpectrumSpace {
  SpectrumSpace(LatticePtr lattice, std::vector<Filter> carrier, FiniteSpace topology,
                std::vector<Bitset> base, SpectrumBase base_kind)
      : lattice(std::move(lattice)),
        carrier(std::move(carrier)),
        topology(std::move(topology)),
        base(std::move(base)),
        base_kind(base_kind) {}

  LatticePtr lattice;
  std::vector<Filter> carrier;
  FiniteSpace topology;
  /// base[a] = carrier indices of the base set of element a.
  std::vector<Bitset> base;
  SpectrumBase base_kind = SpectrumBase::Standard;

  const Bitset& base_set(int a) const { return base.at(static_cast<std::size_t>(a)); }
};

SpectrumSpace spectrum(LatticePtr lattice, SpectrumBase base = SpectrumBase::Standard);
SpectrumSpace ult_space(LatticePtr lattice, SpectrumBase base = SpectrumBase::Standard);

/// Whether the element bijection preserves join and meet.
bool is_lattice_isomorphism(const std::vector<int>& map, const FiniteLattice& a,
                            const FiniteLattice& b);
/// Checks only order preservation of the map and its inverse; agreement
/// with the direct join/meet check is asserted.
bool order_iso_is_lattice_iso(const std::vector<int>& map, const FiniteLattice& a,
                              const FiniteLattice& b);

// --- implementation ---

template <typename Join, typename Meet>
FiniteLattice FiniteLattice::from_sets(Provenance provenance, std::vector<PointSet> elements,
                                       Join join, Meet meet) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int m = static_cast<int>(elements.size());
  if (m == 0) throw std::invalid_argument("FiniteLattice: empty element list");

  const auto find = [&](const PointSet& s) {
    const auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it == elements.end() || *it != s)
      throw std::invalid_argument("FiniteLattice: elements not closed under operations, " +
                                  s.to_string() + " missing");
    return static_cast<int>(it - elements.begin());
  };

  FiniteLattice lat;
  lat.provenance_ = provenance;
  lat.elements_ = elements;
  lat.join_.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  lat.meet_.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      lat.join_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          find(join(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]));
      lat.meet_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          find(meet(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]));
    }
  lat.validate();

  // Set provenance implies the lattice order is plain inclusion.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (lat.leq(a, b) != elements[static_cast<std::size_t>(a)].is_subset_of(
                               elements[static_cast<std::size_t>(b)]))
        throw std::invalid_argument(
            "FiniteLattice: induced order disagrees with inclusion between " +
            elements[static_cast<std::size_t>(a)].to_string() + " and " +
            elements[static_cast<std::size_t>(b)].to_string());
  return lat;
}

}  // namespace compat
