// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/reconstruction.hpp"

#include <memory>

#include <doctest.h>

#include "compat/errors.hpp"

using namespace compat;

namespace {

std::shared_ptr<const FiniteSpace> shared(FiniteSpace space) {
  return std::make_shared<const FiniteSpace>(std::move(space));
}

FnFamily full_family(std::shared_ptr<const FiniteSpace> space, const std::string& grid) {
  return FnFamily::enumerate(std::move(space), ValueGrid::parse(grid));
}

}  // namespace

TEST_CASE("point filters collect the zero sets through a point") {
  const ValueGrid grid = ValueGrid::parse("0,1");

  // One-point space: lattice {{}, {0}}; the only ultrafilter is {{0}}.
  const Filter single = point_filter(shared(FiniteSpace::discrete(1)), grid, 0);
  CHECK(single.is_ultrafilter());
  CHECK(single.count() == 1);

  // Discrete three points: the filter of x is generated by the sets
  // containing x, i.e. principal on {x}.
  const auto d3 = shared(FiniteSpace::discrete(3));
  auto theta = std::make_shared<const FiniteLattice>(zero_lattice(d3, grid));
  for (int x = 0; x < 3; ++x) {
    const Filter fx = point_filter(theta, x);
    CHECK(fx.is_ultrafilter());
    CHECK(fx.count() == 4);
    PointSet singleton(3);
    singleton.set(x);
    CHECK(fx == principal_filter(theta, theta->index_of(singleton)));
  }

  // Sierpinski: the only clopen zero sets are {} and X, so every point
  // filter collapses to {X}.
  const auto s = shared(FiniteSpace::sierpinski());
  const Filter f0 = point_filter(s, grid, 0);
  const Filter f1 = point_filter(s, grid, 1);
  CHECK(f0 == f1);
  CHECK(f0.count() == 1);

  CHECK_THROWS_AS(point_filter(d3, grid, 5), std::invalid_argument);
}

TEST_CASE("discrete spaces reconstruct exactly") {
  for (int n = 1; n <= 6; ++n) {
    const ReconstructionReport rep =
        reconstruct(shared(FiniteSpace::discrete(n)), ValueGrid::parse("0,1"));
    CHECK(rep.verified);
    CHECK(rep.ultrafilter_count == n);
    CHECK(rep.point_map_bijective);
    CHECK(rep.point_map_continuous);
    CHECK(rep.point_map_open);
    CHECK(rep.quotient_match);
    CHECK(rep.ultrafilters.topology.is_discrete());
    CHECK(rep.point_map.is_homeomorphism());
  }
}

TEST_CASE("non-discrete spaces reconstruct their component quotient") {
  // Sierpinski: connected, so one ultrafilter; the recovery sees a point.
  const ReconstructionReport s =
      reconstruct(shared(FiniteSpace::sierpinski()), ValueGrid::parse("0,1"));
  CHECK(s.ultrafilter_count == 1);
  CHECK(s.quotient_match);
  CHECK_FALSE(s.point_map_bijective);
  CHECK(s.verified);  // quotient comparison is the verifiable content here

  // Two clusters: two ultrafilters, discrete 2-point recovery.
  const ReconstructionReport two = reconstruct(
      shared(FiniteSpace::disjoint_union(FiniteSpace::sierpinski(), FiniteSpace::sierpinski())),
      ValueGrid::parse("0,1"));
  CHECK(two.ultrafilter_count == 2);
  CHECK(two.ultrafilters.topology.is_discrete());
  CHECK(two.quotient_match);

  // Every space up to four points: count equals the quasicomponents.
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& raw : topologies_up_to_homeomorphism(n)) {
      const auto space = shared(raw);
      const ReconstructionReport rep = reconstruct(space, ValueGrid::parse("0,1"));
      CHECK(rep.ultrafilter_count == static_cast<int>(space->quasicomponents().size()));
      CHECK(rep.quotient_match);
    }
}

TEST_CASE("induced lattice maps require full-family isomorphisms") {
  const FnFamily fam = full_family(shared(FiniteSpace::discrete(2)), "0,1");
  const CompatMap id = identity_map(fam);
  const InducedLatticeMap zero_map = induced_zero_map(id);
  CHECK(zero_map.classes_checked > 0);
  for (std::size_t i = 0; i < zero_map.element_map.size(); ++i)
    CHECK(zero_map.element_map[i] == static_cast<int>(i));  // identity on elements

  const InducedLatticeMap support_map = induced_support_map(id);
  for (std::size_t i = 0; i < support_map.element_map.size(); ++i)
    CHECK(support_map.element_map[i] == static_cast<int>(i));

  // Non-isomorphisms are rejected up front.
  std::vector<int> collapse(static_cast<std::size_t>(fam.size()), fam.zero_index());
  CHECK_THROWS_AS(induced_zero_map(CompatMap(fam, fam, collapse)), PipelineError);

  // Partial families are rejected: the construction needs every zero set.
  const FnFamily partial = FnFamily::from_functions(
      {ScalarFn::constant(fam.space_ptr(), Rational(1))});
  CHECK_THROWS_AS(induced_zero_map(identity_map(partial)), PipelineError);
}

TEST_CASE("induced lattice map tracks the generating homeomorphism") {
  const FnFamily fam = full_family(shared(FiniteSpace::discrete(3)), "0,1");
  const SpaceMap phi(fam.space(), fam.space(), {1, 2, 0});
  const CompatMap t = from_homeomorphism(phi, fam, fam);
  const InducedLatticeMap m = induced_zero_map(t);
  REQUIRE(m.source->size() == m.target->size());
  for (int a = 0; a < m.source->size(); ++a) {
    const PointSet image = phi.image(m.source->element(a));
    CHECK(m.target->element(m.element_map[static_cast<std::size_t>(a)]) == image);
  }
  CHECK(is_lattice_isomorphism(m.element_map, *m.source, *m.target));
}

TEST_CASE("pipeline recovers generating homeomorphisms") {
  const auto d3a = shared(FiniteSpace::discrete(3));
  const auto d3b = shared(FiniteSpace::discrete(3));
  const FnFamily fam_a = full_family(d3a, "0,1");
  const FnFamily fam_b = full_family(d3b, "0,1");

  // Identity in, identity out.
  const SpaceMap id_rec = induced_homeomorphism(identity_map(fam_a));
  CHECK(id_rec.assignment() == std::vector<int>{0, 1, 2});

  // A 3-cycle in, the same 3-cycle out.
  const SpaceMap phi(*d3a, *d3b, {2, 0, 1});
  const SpaceMap rec = induced_homeomorphism(from_homeomorphism(phi, fam_a, fam_b));
  CHECK(rec.assignment() == phi.assignment());

  // Value relabels do not move points.
  const FnFamily fam_pm = full_family(d3a, "-1,0,1");
  const CompatMap relabel = value_relabel({{Rational(0), Rational(0)},
                                           {Rational(-1), Rational(1)},
                                           {Rational(1), Rational(-1)}},
                                          fam_pm);
  CHECK(induced_homeomorphism(relabel).assignment() == std::vector<int>{0, 1, 2});

  // Composition carries through.
  const CompatMap t = from_homeomorphism(phi, fam_a, fam_b);
  const SpaceMap psi(*d3b, *d3a, {1, 0, 2});
  const CompatMap u = from_homeomorphism(psi, fam_b, fam_a);
  CHECK(induced_homeomorphism(t.then(u)).assignment() ==
        phi.then(psi).assignment());
}

TEST_CASE("pipeline report narrates each stage") {
  const FnFamily fam = full_family(shared(FiniteSpace::discrete(2)), "0,1");
  const PipelineReport good = run_pipeline(identity_map(fam));
  CHECK(good.ok());
  REQUIRE(good.homeomorphism.has_value());
  CHECK(good.stages.size() >= 5);
  for (const PipelineStage& s : good.stages) {
    CHECK(s.ok);
    CHECK_FALSE(s.name.empty());
  }

  // A non-isomorphism fails at the first stage and never reaches the end.
  std::vector<int> collapse(static_cast<std::size_t>(fam.size()), fam.zero_index());
  const PipelineReport bad = run_pipeline(CompatMap(fam, fam, collapse));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.homeomorphism.has_value());
  CHECK(bad.stages.front().name == "compatibility-isomorphism");
  CHECK_FALSE(bad.first_failure().empty());

  // The throwing wrapper names the failed stage.
  try {
    induced_homeomorphism(CompatMap(fam, fam, collapse));
    FAIL("expected PipelineError");
  } catch (const PipelineError& e) {
    CHECK(e.stage == "compatibility-isomorphism");
  }

  // Partial families stop at the coverage stage.
  const FnFamily partial = FnFamily::from_functions(
      {ScalarFn::constant(fam.space_ptr(), Rational(1))});
  const PipelineReport part = run_pipeline(identity_map(partial));
  CHECK_FALSE(part.ok());
  CHECK(part.first_failure().find("family-coverage") != std::string::npos);
}

TEST_CASE("pipeline handles the nonvanishing shuffle composed with a homeomorphism") {
  // On a connected space the shuffle moves units only; composing with a
  // homeomorphism of a one-point space keeps the pipeline exact.
  const auto p1 = shared(FiniteSpace::discrete(1));
  const FnFamily fam = full_family(p1, "-1,0,1");
  const auto units = nowhere_zero_indices(fam);
  REQUIRE(units.size() == 2);
  const CompatMap shuffle = nonvanishing_shuffle({1, 0}, fam);
  const SpaceMap rec = induced_homeomorphism(shuffle);
  CHECK(rec.assignment() == std::vector<int>{0});
}
