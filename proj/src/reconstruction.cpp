// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/reconstruction.hpp"

#include <algorithm>
#include <map>

#include "compat/errors.hpp"

namespace compat {

Filter point_filter(const LatticePtr& zero_sets, int x) {
  if (!zero_sets || !zero_sets->is_set_based())
    throw std::invalid_argument("point_filter: a set-based lattice is required");
  Bitset members(zero_sets->size());
  for (int i = 0; i < zero_sets->size(); ++i) {
    const PointSet& elem = zero_sets->element(i);
    if (x < 0 || x >= elem.width()) throw std::invalid_argument("point_filter: invalid point");
    if (elem.test(x)) members.set(i);
  }
  return Filter(zero_sets, std::move(members));
}

Filter point_filter(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid, int x) {
  auto lat = std::make_shared<const FiniteLattice>(zero_lattice(std::move(space), grid));
  return point_filter(lat, x);
}

ReconstructionReport reconstruct(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid,
                                 unsigned long long cap) {
  auto lat = std::make_shared<const FiniteLattice>(zero_lattice(space, grid, cap));
  SpectrumSpace ult = ult_space(lat);

  std::vector<int> assignment;
  assignment.reserve(static_cast<std::size_t>(space->points()));
  for (int x = 0; x < space->points(); ++x) {
    const Filter ux = point_filter(lat, x);
    const auto it = std::find(ult.carrier.begin(), ult.carrier.end(), ux);
    if (it == ult.carrier.end())
      throw std::logic_error("reconstruct: a point filter is not an ultrafilter");
    assignment.push_back(static_cast<int>(it - ult.carrier.begin()));
  }
  SpaceMap point_map(*space, ult.topology, std::move(assignment));

  ReconstructionReport report(space, grid, lat, std::move(ult), std::move(point_map));
  report.ultrafilter_count = static_cast<int>(report.ultrafilters.carrier.size());
  report.point_map_bijective = report.point_map.is_bijective();
  report.point_map_continuous = report.point_map.is_continuous();
  report.point_map_open = report.point_map.is_open_map();

  const auto [quotient, q] = component_quotient(*space);
  report.quotient_match =
      find_homeomorphism(report.ultrafilters.topology, quotient).has_value();

  const bool homeo =
      report.point_map_bijective && report.point_map_continuous && report.point_map_open;
  report.verified = report.quotient_match && (!space->is_discrete() || homeo);
  return report;
}

namespace {

// Common scaffold for the two induced element maps: group the source
// family by key(f), require the grouping to be respected by the map, and
// return the bijection key(f) ↦ key(Tf).
InducedLatticeMap induced_map(const CompatMap& map, const char* stage,
                              PointSet (*key)(const ScalarFn&), FiniteLattice source_lat,
                              FiniteLattice target_lat) {
  WitnessPair w;
  if (!map.is_compat_iso(&w))
    throw PipelineError(stage, "map is not a compatibility isomorphism: " + w.reason);
  if (!map.source().is_full_enumeration() || !map.target().is_full_enumeration())
    throw PipelineError(stage, "both families must be full enumerations");

  InducedLatticeMap out;
  out.source = std::make_shared<const FiniteLattice>(std::move(source_lat));
  out.target = std::make_shared<const FiniteLattice>(std::move(target_lat));
  out.element_map.assign(static_cast<std::size_t>(out.source->size()), -1);

  const FnFamily& fam = map.source();
  for (int i = 0; i < fam.size(); ++i) {
    const int src_elem = out.source->index_of(key(fam[i]));
    const int tgt_elem = out.target->index_of(key(map.apply(i)));
    int& slot = out.element_map[static_cast<std::size_t>(src_elem)];
    if (slot == -1) {
      slot = tgt_elem;
    } else if (slot != tgt_elem) {
      throw PipelineError(stage, "not well defined: members sharing the set " +
                                     out.source->element(src_elem).to_string() +
                                     " map to different sets");
    }
    ++out.classes_checked;
  }
  for (int e = 0; e < out.source->size(); ++e)
    if (out.element_map[static_cast<std::size_t>(e)] == -1)
      throw PipelineError(stage, "no member realizes the set " +
                                     out.source->element(e).to_string());

  std::vector<bool> hit(static_cast<std::size_t>(out.target->size()), false);
  for (int v : out.element_map) {
    if (hit[static_cast<std::size_t>(v)])
      throw PipelineError(stage, "induced element map is not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (out.source->size() != out.target->size())
    throw PipelineError(stage, "lattice sizes differ");
  return out;
}

}  // namespace

InducedLatticeMap induced_zero_map(const CompatMap& map) {
  return induced_map(map, "zero-set-map", &regular_zero_set,
                     zero_lattice(map.source().space_ptr(), map.source().value_set()),
                     zero_lattice(map.target().space_ptr(), map.target().value_set()));
}

InducedLatticeMap induced_support_map(const CompatMap& map) {
  return induced_map(map, "support-map", &open_support,
                     support_lattice(map.source().space_ptr(), map.source().value_set()),
                     support_lattice(map.target().space_ptr(), map.target().value_set()));
}

std::string PipelineReport::first_failure() const {
  for (const auto& s : stages)
    if (!s.ok) return s.name + ": " + s.detail;
  return "";
}

PipelineReport run_pipeline(const CompatMap& map) {
  PipelineReport report;
  const auto fail = [&](const std::string& name, const std::string& detail) {
    report.stages.push_back({name, false, detail});
  };
  const auto pass = [&](const std::string& name, const std::string& detail) {
    report.stages.push_back({name, true, detail});
  };

  WitnessPair w;
  if (!map.is_compat_iso(&w)) {
    fail("compatibility-isomorphism", w.reason);
    return report;
  }
  pass("compatibility-isomorphism",
       "bijection preserving the ordering in both directions, " +
           std::to_string(map.source().size()) + " members");

  if (!map.source().is_full_enumeration() || !map.target().is_full_enumeration()) {
    fail("family-coverage", "both families must be full enumerations of their value sets");
    return report;
  }
  pass("family-coverage", "full enumerations on both sides");

  if (!map.source().space().is_discrete() || !map.target().space().is_discrete()) {
    fail("discreteness", "point recovery needs discrete spaces (points are not separated "
                         "inside a component otherwise)");
    return report;
  }
  pass("discreteness", "both spaces discrete");

  InducedLatticeMap zmap;
  try {
    zmap = induced_zero_map(map);
  } catch (const PipelineError& e) {
    fail("zero-set-map", e.what());
    return report;
  }
  pass("zero-set-map", "well defined on " + std::to_string(zmap.classes_checked) + " members, " +
                           std::to_string(zmap.source->size()) + " lattice elements");

  if (!order_iso_is_lattice_iso(zmap.element_map, *zmap.source, *zmap.target)) {
    fail("lattice-isomorphism", "induced map does not respect the lattice order both ways");
    return report;
  }
  pass("lattice-isomorphism", "order and operations preserved both ways");

  const SpectrumSpace ult_x = ult_space(zmap.source);
  const SpectrumSpace ult_y = ult_space(zmap.target);
  std::vector<int> ult_map;
  for (const Filter& u : ult_x.carrier) {
    Bitset image(zmap.target->size());
    for (int a : u.members().to_indices())
      image.set(zmap.element_map[static_cast<std::size_t>(a)]);
    const Filter fu(zmap.target, std::move(image));
    if (!fu.is_ultrafilter()) {
      fail("ultrafilter-map", "direct image of an ultrafilter is not an ultrafilter");
      return report;
    }
    const auto it = std::find(ult_y.carrier.begin(), ult_y.carrier.end(), fu);
    if (it == ult_y.carrier.end()) {
      fail("ultrafilter-map", "image ultrafilter missing from the target spectrum");
      return report;
    }
    ult_map.push_back(static_cast<int>(it - ult_y.carrier.begin()));
  }
  {
    std::vector<int> sorted = ult_map;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) {
        fail("ultrafilter-map", "induced ultrafilter map is not a bijection");
        return report;
      }
  }
  pass("ultrafilter-map",
       std::to_string(ult_map.size()) + " ultrafilters mapped bijectively");

  const ReconstructionReport rx = reconstruct(map.source().space_ptr(), map.source().value_set());
  const ReconstructionReport ry = reconstruct(map.target().space_ptr(), map.target().value_set());
  if (!rx.verified || !ry.verified) {
    fail("point-recovery", "point-recovery map failed verification on a side");
    return report;
  }
  pass("point-recovery", "point maps verified on both sides");

  // The two reconstructions were built from the same lattices up to
  // element identity, so carriers can be matched by filter members.
  const auto carrier_index = [](const SpectrumSpace& s, const Filter& f) {
    const auto it = std::find(s.carrier.begin(), s.carrier.end(), f);
    return it == s.carrier.end() ? -1 : static_cast<int>(it - s.carrier.begin());
  };

  std::vector<int> point_assignment;
  const FiniteSpace& x_space = map.source().space();
  const FiniteSpace& y_space = map.target().space();
  std::vector<int> y_of_carrier(ult_y.carrier.size(), -1);
  for (int y = 0; y < y_space.points(); ++y) {
    const int ci = carrier_index(ult_y, point_filter(zmap.target, y));
    if (ci < 0) {
      fail("point-recovery", "a target point filter is not an ultrafilter");
      return report;
    }
    y_of_carrier[static_cast<std::size_t>(ci)] = y;
  }
  for (int x = 0; x < x_space.points(); ++x) {
    const int cx = carrier_index(ult_x, point_filter(zmap.source, x));
    if (cx < 0) {
      fail("point-recovery", "a source point filter is not an ultrafilter");
      return report;
    }
    const int y = y_of_carrier[static_cast<std::size_t>(ult_map[static_cast<std::size_t>(cx)])];
    if (y < 0) {
      fail("point-recovery", "image ultrafilter corresponds to no target point");
      return report;
    }
    point_assignment.push_back(y);
  }

  SpaceMap homeo(x_space, y_space, std::move(point_assignment));
  if (!homeo.is_homeomorphism()) {
    fail("homeomorphism", "recovered point map is not a homeomorphism");
    return report;
  }
  pass("homeomorphism", "recovered point map verified");
  report.homeomorphism = std::move(homeo);
  return report;
}

SpaceMap induced_homeomorphism(const CompatMap& map) {
  PipelineReport report = run_pipeline(map);
  if (!report.ok()) {
    const auto& bad = *std::find_if(report.stages.begin(), report.stages.end(),
                                    [](const PipelineStage& s) { return !s.ok; });
    throw PipelineError(bad.name, bad.detail);
  }
  return *report.homeomorphism;
}

}  // namespace compat
