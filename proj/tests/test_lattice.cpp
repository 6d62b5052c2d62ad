// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/lattice.hpp"

#include <algorithm>
#include <memory>

#include <doctest.h>

using namespace compat;

namespace {

std::shared_ptr<const FiniteSpace> shared(FiniteSpace space) {
  return std::make_shared<const FiniteSpace>(std::move(space));
}

LatticePtr lat(FiniteLattice lattice) {
  return std::make_shared<const FiniteLattice>(std::move(lattice));
}

/// Exhaustive filter oracle: test every subset of elements directly
/// against the defining conditions (nonempty, proper, upward closed,
/// meet closed).
std::vector<Bitset> filters_oracle(const FiniteLattice& l) {
  std::vector<Bitset> out;
  const int m = l.size();
  for (unsigned long long mask = 1; mask < (1ull << m); ++mask) {
    Bitset members(m);
    for (int i = 0; i < m; ++i)
      if (mask & (1ull << i)) members.set(i);
    if (static_cast<int>(members.count()) == m) continue;  // improper
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      if (!members.test(a)) continue;
      for (int b = 0; b < m && ok; ++b) {
        if (l.leq(a, b) && !members.test(b)) ok = false;       // upward closure
        if (members.test(b) && !members.test(l.meet(a, b))) ok = false;
      }
    }
    if (ok) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("abstract lattice construction validates the axioms") {
  // Chain 0 < 1 < 2 by explicit tables.
  const std::vector<std::vector<int>> join{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  const std::vector<std::vector<int>> meet{{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  const FiniteLattice chain(join, meet);
  CHECK(chain.size() == 3);
  CHECK(chain.bottom() == 0);
  CHECK(chain.top() == 2);
  CHECK(chain.leq(0, 2));
  CHECK_FALSE(chain.leq(2, 1));
  CHECK(chain == chain_lattice(3));

  // Swapping one meet entry breaks absorption/commutativity.
  auto bad_meet = meet;
  bad_meet[1][2] = 2;
  CHECK_THROWS_AS(FiniteLattice(join, bad_meet), std::invalid_argument);

  // The diamond M3 is a lattice but not distributive: must be rejected.
  // Elements: 0=bottom, 1,2,3=atoms, 4=top.
  std::vector<std::vector<int>> j(5, std::vector<int>(5));
  std::vector<std::vector<int>> m(5, std::vector<int>(5));
  const auto idx = [](int a, int b) { return a == b; };
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      if (a == b) { j[a][b] = a; m[a][b] = a; continue; }
      const int lo = std::min(a, b), hi = std::max(a, b);
      if (lo == 0) { j[a][b] = hi; m[a][b] = 0; continue; }
      if (hi == 4) { j[a][b] = 4; m[a][b] = lo; continue; }
      j[a][b] = 4;  // two distinct atoms
      m[a][b] = 0;
    }
  (void)idx;
  CHECK_THROWS_AS(FiniteLattice(j, m), std::invalid_argument);
}

TEST_CASE("regular-open and regular-closed lattices of small spaces") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  const FiniteLattice ro = lattice_from_ro(s);
  // Sierpinski: the only regular open sets are {} and X ({0} is dense).
  CHECK(ro.size() == 2);
  CHECK(ro.provenance() == Provenance::RO);
  CHECK(ro.element(ro.bottom()).none());
  CHECK(ro.element(ro.top()).is_full());

  const FiniteLattice rc = lattice_from_rc(s);
  CHECK(rc.size() == 2);

  const FiniteSpace d2 = FiniteSpace::discrete(2);
  CHECK(lattice_from_ro(d2).size() == 4);  // the whole powerset
  CHECK(lattice_from_rc(d2).size() == 4);

  // Order is inclusion for set-based lattices.
  const FiniteLattice ro2 = lattice_from_ro(d2);
  for (int a = 0; a < ro2.size(); ++a)
    for (int b = 0; b < ro2.size(); ++b)
      CHECK(ro2.leq(a, b) == ro2.element(a).is_subset_of(ro2.element(b)));
}

TEST_CASE("zero-set and support lattices coincide with the clopen algebra") {
  const ValueGrid grid = ValueGrid::parse("-1,0,1");
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& raw : topologies_up_to_homeomorphism(n)) {
      const auto space = shared(raw);
      const FiniteLattice zeros = zero_lattice(space, grid);
      const FiniteLattice supports = support_lattice(space, grid);
      std::vector<PointSet> clopens = space->clopens();
      std::sort(clopens.begin(), clopens.end());
      CHECK(zeros.elements() == clopens);
      CHECK(supports.elements() == clopens);
      CHECK(zeros.provenance() == Provenance::ZeroSets);
      CHECK(supports.provenance() == Provenance::Supports);
    }
}

TEST_CASE("filters of a chain, with primeness and maximality") {
  const LatticePtr chain = lat(chain_lattice(3));
  const auto filters = all_filters(chain);
  REQUIRE(filters.size() == 2);  // up-sets of 1 and of 2
  for (const Filter& f : filters) {
    CHECK(f.is_filter());
    CHECK(f.is_prime());  // chains: every proper filter is prime
  }
  const auto ultra = all_ultrafilters(chain);
  REQUIRE(ultra.size() == 1);  // only the up-set of the single atom is maximal
  CHECK(ultra[0].contains(1));
  CHECK(ultra[0].contains(2));
  CHECK_FALSE(ultra[0].contains(0));

  // Principal filter machinery.
  const Filter up1 = principal_filter(chain, 1);
  CHECK(up1.count() == 2);
  CHECK(up1.is_ultrafilter());
  const Filter up2 = principal_filter(chain, 2);
  CHECK(up2.count() == 1);
  CHECK(up2.is_prime());
  CHECK_FALSE(up2.is_ultrafilter());  // extends to up1
}

TEST_CASE("filter enumeration matches the exhaustive subset oracle") {
  std::vector<LatticePtr> lattices;
  lattices.push_back(lat(chain_lattice(4)));
  lattices.push_back(lat(lattice_from_ro(FiniteSpace::discrete(3))));
  lattices.push_back(lat(zero_lattice(shared(FiniteSpace::disjoint_union(
                                          FiniteSpace::sierpinski(), FiniteSpace::discrete(1))),
                                      ValueGrid::parse("0,1"))));
  for (const LatticePtr& l : lattices) {
    const auto oracle = filters_oracle(*l);
    const auto got = all_filters(l);
    REQUIRE(got.size() == oracle.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].members() == oracle[i]);
  }
}

TEST_CASE("powerset of three points has exactly three ultrafilters") {
  const LatticePtr l = lat(lattice_from_ro(FiniteSpace::discrete(3)));
  CHECK(l->size() == 8);
  CHECK(all_filters(l).size() == 7);        // principal up-sets of nonempty subsets
  CHECK(all_prime_filters(l).size() == 3);  // generated by the singletons
  const auto ultra = all_ultrafilters(l);
  CHECK(ultra.size() == 3);
  for (const Filter& u : ultra) {
    CHECK(u.is_prime());
    CHECK(u.count() == 4);  // sets containing one fixed point
  }
}

TEST_CASE("primeness is the join-splitting condition, checked directly") {
  const LatticePtr l = lat(lattice_from_ro(FiniteSpace::discrete(2)));
  // Up-set of the top element alone: {X}.  X = {0} v {1} but neither atom
  // belongs, so the filter is not prime.
  const Filter top_only = principal_filter(l, l->top());
  CHECK(top_only.is_filter());
  CHECK_FALSE(top_only.is_prime());
  CHECK_FALSE(top_only.is_ultrafilter());
  CHECK(is_prime_filter(principal_filter(l, 1)) ==
        principal_filter(l, 1).is_prime());
}

TEST_CASE("spectra carry the expected topology") {
  // Chain 0 < a < 1: two prime filters (up-a, up-top); the base
  // distinguishes them and yields the Sierpinski space.
  const LatticePtr chain = lat(chain_lattice(3));
  const SpectrumSpace sp = spectrum(chain);
  CHECK(sp.carrier.size() == 2);
  CHECK_FALSE(sp.topology.is_discrete());

  // Ultrafilter restriction drops the non-maximal prime filter.
  const SpectrumSpace ult = ult_space(chain);
  CHECK(ult.carrier.size() == 1);

  // The named base differs from the membership base exactly here.
  const SpectrumSpace zar = spectrum(chain, SpectrumBase::Zariski);
  CHECK(zar.carrier.size() == 2);
  CHECK(zar.base_kind == SpectrumBase::Zariski);
  CHECK_FALSE(sp.base == zar.base);

  // Discrete 3 points: zero-set lattice spectrum is 3-point discrete.
  const LatticePtr theta = lat(zero_lattice(shared(FiniteSpace::discrete(3)),
                                            ValueGrid::parse("0,1")));
  const SpectrumSpace spec3 = ult_space(theta);
  CHECK(spec3.carrier.size() == 3);
  CHECK(spec3.topology.is_discrete());
}

TEST_CASE("base sets compose through joins") {
  std::vector<LatticePtr> lattices;
  lattices.push_back(lat(chain_lattice(4)));
  lattices.push_back(lat(lattice_from_ro(FiniteSpace::discrete(3))));
  lattices.push_back(lat(lattice_from_rc(FiniteSpace::disjoint_union(
      FiniteSpace::sierpinski(), FiniteSpace::sierpinski()))));
  for (const LatticePtr& l : lattices)
    for (const SpectrumSpace& sp : {spectrum(l), ult_space(l)}) {
      for (const Bitset& u : sp.base) CHECK(sp.topology.is_open(u));
      for (int a = 0; a < l->size(); ++a)
        for (int b = 0; b < l->size(); ++b)
          CHECK((sp.base_set(a) & sp.base_set(b)) == sp.base_set(l->join(a, b)));
      // The base set of the bottom element is the whole carrier.
      CHECK(sp.base_set(l->bottom()).is_full());
    }
}

TEST_CASE("lattice isomorphism checks, both operation and order form") {
  const LatticePtr a = lat(lattice_from_ro(FiniteSpace::discrete(2)));
  // Element order: {}, {0}, {1}, {0,1} after canonical sorting.
  const int bottom = a->index_of(PointSet(2));
  const int atom0 = a->index_of(PointSet::from_indices(2, {0}));
  const int atom1 = a->index_of(PointSet::from_indices(2, {1}));
  const int top = a->index_of(PointSet::all(2));

  std::vector<int> swap_atoms(4);
  swap_atoms[static_cast<std::size_t>(bottom)] = bottom;
  swap_atoms[static_cast<std::size_t>(atom0)] = atom1;
  swap_atoms[static_cast<std::size_t>(atom1)] = atom0;
  swap_atoms[static_cast<std::size_t>(top)] = top;
  CHECK(is_lattice_isomorphism(swap_atoms, *a, *a));
  CHECK(order_iso_is_lattice_iso(swap_atoms, *a, *a));

  std::vector<int> swap_atom_top(4);
  swap_atom_top[static_cast<std::size_t>(bottom)] = bottom;
  swap_atom_top[static_cast<std::size_t>(atom0)] = top;
  swap_atom_top[static_cast<std::size_t>(atom1)] = atom1;
  swap_atom_top[static_cast<std::size_t>(top)] = atom0;
  CHECK_FALSE(is_lattice_isomorphism(swap_atom_top, *a, *a));
  CHECK_FALSE(order_iso_is_lattice_iso(swap_atom_top, *a, *a));

  // Different sizes can never be isomorphic; the check requires totality.
  const LatticePtr chain = lat(chain_lattice(3));
  CHECK_THROWS_AS(is_lattice_isomorphism({0, 1}, *a, *chain), std::invalid_argument);
}

TEST_CASE("covering relation of the powerset lattice") {
  const FiniteLattice l = lattice_from_ro(FiniteSpace::discrete(2));
  const auto covers = l.covers();
  CHECK(covers.size() == 4);  // {}<{0}, {}<{1}, {0}<X, {1}<X
  for (const auto& [lo, hi] : covers) {
    CHECK(l.leq(lo, hi));
    CHECK(lo != hi);
    CHECK(static_cast<int>(l.element(hi).count()) ==
          static_cast<int>(l.element(lo).count()) + 1);
  }
}

TEST_CASE("labels render set elements and chain indices") {
  const FiniteLattice ro = lattice_from_ro(FiniteSpace::discrete(2));
  CHECK(ro.label(ro.bottom()) == "{}");
  CHECK(ro.label(ro.top()) == "{0,1}");
  const FiniteLattice chain = chain_lattice(2);
  CHECK(chain.label(0) != chain.label(1));
}
