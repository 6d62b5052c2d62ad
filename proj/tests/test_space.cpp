// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/space.hpp"

#include <algorithm>
#include <set>

#include <doctest.h>

using namespace compat;

namespace {

PointSet ps(int width, std::initializer_list<int> indices) {
  return PointSet::from_indices(width, indices);
}

/// Independent interior: points whose minimal open neighbourhood fits in s.
/// (The production code unions opens instead.)
PointSet interior_oracle(const FiniteSpace& space, const PointSet& s) {
  PointSet out(space.points());
  for (int x = 0; x < space.points(); ++x)
    if (space.minimal_open(x).is_subset_of(s)) out.set(x);
  return out;
}

/// Independent closure: points every neighbourhood of which meets s.
PointSet closure_oracle(const FiniteSpace& space, const PointSet& s) {
  PointSet out(space.points());
  for (int x = 0; x < space.points(); ++x)
    if (space.minimal_open(x).intersects(s) || s.test(x)) out.set(x);
  return out;
}

std::vector<PointSet> all_subsets(int n) {
  std::vector<PointSet> out;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    PointSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) s.set(i);
    out.push_back(s);
  }
  return out;
}

/// Brute-force count of topologies on n labeled points: every family of
/// subsets containing {} and X and closed under union and intersection.
long long topology_count_oracle(int n) {
  const auto subsets = all_subsets(n);
  const int m = static_cast<int>(subsets.size());
  long long count = 0;
  for (unsigned long long pick = 0; pick < (1ull << m); ++pick) {
    if (!(pick & 1ull) || !(pick & (1ull << (m - 1)))) continue;  // need {} and X
    std::vector<PointSet> fam;
    for (int i = 0; i < m; ++i)
      if (pick & (1ull << i)) fam.push_back(subsets[static_cast<std::size_t>(i)]);
    bool closed = true;
    for (std::size_t i = 0; i < fam.size() && closed; ++i)
      for (std::size_t j = i + 1; j < fam.size() && closed; ++j) {
        const PointSet u = fam[i] | fam[j];
        const PointSet v = fam[i] & fam[j];
        closed = std::find(fam.begin(), fam.end(), u) != fam.end() &&
                 std::find(fam.begin(), fam.end(), v) != fam.end();
      }
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("construction rejects families that are not topologies") {
  CHECK_THROWS_AS(FiniteSpace(2, {}), std::invalid_argument);  // missing {} and X
  CHECK_THROWS_AS(FiniteSpace(2, {PointSet(2)}), std::invalid_argument);  // missing X
  // {0} and {1} present but their union {0,1} == X is; their intersection is {};
  // still fine.  Break closure with a 3-point example: {0},{1} without {0,1}.
  CHECK_THROWS_AS(FiniteSpace(3, {PointSet(3), PointSet::all(3), ps(3, {0}), ps(3, {1})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteSpace(2, {PointSet(3), PointSet::all(3)}), std::invalid_argument);
}

TEST_CASE("canonical small spaces") {
  const FiniteSpace d3 = FiniteSpace::discrete(3);
  CHECK(d3.opens().size() == 8);
  CHECK(d3.is_discrete());
  CHECK(d3.is_hausdorff());

  const FiniteSpace i3 = FiniteSpace::indiscrete(3);
  CHECK(i3.opens().size() == 2);
  CHECK(i3.is_connected());
  CHECK_FALSE(i3.is_discrete());

  const FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(s.opens().size() == 3);
  CHECK(s.is_open(ps(2, {0})));
  CHECK_FALSE(s.is_open(ps(2, {1})));
  CHECK(s.is_closed(ps(2, {1})));
  CHECK(s.is_connected());
}

TEST_CASE("interior, closure, boundary match the minimal-neighbourhood oracles") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& space : all_topologies(n))
      for (const PointSet& s : all_subsets(n)) {
        CHECK(space.interior(s) == interior_oracle(space, s));
        CHECK(space.closure(s) == closure_oracle(space, s));
        CHECK(space.boundary(s) == space.closure(s).minus(space.interior(s)));
        // Galois-style sanity: interior is open and maximal, closure closed and minimal.
        CHECK(space.is_open(space.interior(s)));
        CHECK(space.is_closed(space.closure(s)));
      }
}

TEST_CASE("regular open and regular closed detection") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  // {0} is open and dense: cl {0} = X, int X = X != {0}; not regular open.
  CHECK_FALSE(s.is_regular_open(ps(2, {0})));
  CHECK(s.is_regular_open(s.empty_set()));
  CHECK(s.is_regular_open(s.full_set()));
  // {1} is closed with empty interior; not regular closed.
  CHECK_FALSE(s.is_regular_closed(ps(2, {1})));

  const FiniteSpace d2 = FiniteSpace::discrete(2);
  for (const PointSet& u : all_subsets(2)) {
    CHECK(d2.is_regular_open(u));  // every set is clopen, so int cl u = u
    CHECK(d2.is_regular_closed(u));
  }
}

TEST_CASE("regular set calculus stays regular and is idempotent-friendly") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& space : all_topologies(n)) {
      std::vector<PointSet> ro;
      for (const PointSet& s : all_subsets(n))
        if (space.is_regular_open(s)) ro.push_back(s);
      for (const PointSet& u : ro)
        for (const PointSet& v : ro) {
          CHECK(space.is_regular_open(ro_join(space, u, v)));
          CHECK(space.is_regular_open(ro_meet(space, u, v)));
          CHECK(ro_meet(space, u, v) == (u & v));
        }
    }
  const FiniteSpace s = FiniteSpace::sierpinski();
  CHECK_THROWS_AS(ro_join(s, ps(2, {0}), s.empty_set()), std::invalid_argument);
}

TEST_CASE("minimal opens and specialization order") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(s.minimal_open(0) == ps(2, {0}));
  CHECK(s.minimal_open(1) == s.full_set());
  CHECK(s.specializes(1, 0));       // 1 lies in cl{0}
  CHECK_FALSE(s.specializes(0, 1));
  CHECK(s.specializes(0, 0));

  const FiniteSpace d2 = FiniteSpace::discrete(2);
  CHECK_FALSE(d2.specializes(0, 1));
  CHECK_FALSE(d2.specializes(1, 0));
}

TEST_CASE("components and quasicomponents coincide on finite spaces") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& space : topologies_up_to_homeomorphism(n)) {
      const auto comps = space.connected_components();
      const auto quasis = space.quasicomponents();
      CHECK(comps == quasis);
      // Components partition the points.
      PointSet all(space.points());
      for (const PointSet& c : comps) {
        CHECK(c.any());
        CHECK_FALSE(all.intersects(c));
        all = all | c;
        CHECK(space.is_connected_subspace(c));
      }
      CHECK(all.is_full());
    }
}

TEST_CASE("disjoint union sums points and splits components") {
  const FiniteSpace su =
      FiniteSpace::disjoint_union(FiniteSpace::sierpinski(), FiniteSpace::discrete(1));
  CHECK(su.points() == 3);
  CHECK(su.is_clopen(ps(3, {0, 1})));
  CHECK(su.is_clopen(ps(3, {2})));
  CHECK(su.connected_components() ==
        std::vector<PointSet>{ps(3, {0, 1}), ps(3, {2})});
  CHECK_FALSE(su.is_discrete());
  CHECK_FALSE(su.is_connected());
}

TEST_CASE("component quotient is discrete with a continuous open projection") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& space : topologies_up_to_homeomorphism(n)) {
      const auto [quotient, projection] = component_quotient(space);
      CHECK(quotient.is_discrete());
      CHECK(quotient.points() == static_cast<int>(space.connected_components().size()));
      CHECK(projection.is_continuous());
      CHECK(projection.is_surjective());
    }
}

TEST_CASE("space map property queries") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  const FiniteSpace d2 = FiniteSpace::discrete(2);

  const SpaceMap id = SpaceMap::identity(s);
  CHECK(id.is_homeomorphism());

  // Identity assignment between different topologies: continuous one way only.
  const SpaceMap coarsen(d2, s, {0, 1});
  CHECK(coarsen.is_continuous());
  CHECK_FALSE(coarsen.is_open_map());
  const SpaceMap refine(s, d2, {0, 1});
  CHECK_FALSE(refine.is_continuous());

  // The transposition on Sierpinski is not continuous: preimage of {0} is {1}.
  const SpaceMap swap(s, s, {1, 0});
  CHECK_FALSE(swap.is_continuous());
  CHECK_FALSE(swap.is_homeomorphism());

  CHECK_THROWS_AS(SpaceMap(s, s, {0}), std::invalid_argument);     // not total
  CHECK_THROWS_AS(SpaceMap(s, s, {0, 2}), std::invalid_argument);  // out of range

  const SpaceMap into(FiniteSpace::discrete(1), d2, {1});
  CHECK(into.is_continuous());
  CHECK_FALSE(into.is_surjective());
  CHECK_FALSE(into.is_bijective());
}

TEST_CASE("homeomorphism search agrees with hand-verified cases") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  const FiniteSpace s_flipped(2, {PointSet(2), ps(2, {1}), PointSet::all(2)});
  const auto found = find_homeomorphism(s, s_flipped);
  REQUIRE(found.has_value());
  CHECK(found->is_homeomorphism());
  CHECK(found->assignment() == std::vector<int>{1, 0});

  CHECK_FALSE(find_homeomorphism(s, FiniteSpace::discrete(2)).has_value());
  CHECK_FALSE(find_homeomorphism(s, FiniteSpace::indiscrete(2)).has_value());
  CHECK_FALSE(find_homeomorphism(s, FiniteSpace::discrete(3)).has_value());

  // Self-homeomorphisms of Sierpinski: only the identity exists.
  const auto self = find_homeomorphism(s, s);
  REQUIRE(self.has_value());
  CHECK(self->assignment() == std::vector<int>{0, 1});
}

TEST_CASE("topology enumeration matches the brute-force count") {
  CHECK(topology_count_oracle(1) == 1);
  CHECK(topology_count_oracle(2) == 4);
  CHECK(topology_count_oracle(3) == 29);
  CHECK(all_topologies(1).size() == 1);
  CHECK(all_topologies(2).size() == 4);
  CHECK(all_topologies(3).size() == 29);
  CHECK(all_topologies(4).size() == 355);
}

TEST_CASE("homeomorphism classes have the documented counts and are pairwise distinct") {
  const std::vector<std::size_t> expected{1, 3, 9, 33};
  for (int n = 1; n <= 4; ++n) {
    const auto reps = topologies_up_to_homeomorphism(n);
    CHECK(reps.size() == expected[static_cast<std::size_t>(n - 1)]);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        CHECK_FALSE(find_homeomorphism(reps[i], reps[j]).has_value());
  }
  // Every labeled topology is homeomorphic to some representative.
  for (int n = 1; n <= 3; ++n) {
    const auto reps = topologies_up_to_homeomorphism(n);
    for (const FiniteSpace& space : all_topologies(n)) {
      bool hit = false;
      for (const FiniteSpace& rep : reps)
        if (find_homeomorphism(space, rep).has_value()) {
          hit = true;
          break;
        }
      CHECK(hit);
    }
  }
}
