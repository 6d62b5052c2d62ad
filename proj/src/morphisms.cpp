// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/morphisms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace compat {

namespace {

std::string pair_text(const FnFamily& fam, int i, int j) {
  return to_string(fam[i]) + " and " + to_string(fam[j]);
}

}  // namespace

FnFamily::FnFamily(std::shared_ptr<const FiniteSpace> space, ValueGrid values,
                   std::vector<ScalarFn> fns, bool full)
    : space_(std::move(space)), values_(std::move(values)), fns_(std::move(fns)), full_(full) {
  for (std::size_t i = 0; i + 1 < fns_.size(); ++i)
    if (!(fns_[i] < fns_[i + 1]))
      throw std::invalid_argument("FnFamily: functions not strictly ordered (duplicate?)");
  for (int i = 0; i < size(); ++i)
    if (fns_[static_cast<std::size_t>(i)].is_zero()) zero_index_ = i;
  if (zero_index_ < 0) throw std::invalid_argument("FnFamily: missing the zero function");
}

FnFamily FnFamily::enumerate(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid,
                             unsigned long long cap) {
  auto fns = enumerate_family(space, grid, cap);
  return FnFamily(std::move(space), grid, std::move(fns), true);
}

FnFamily FnFamily::from_functions(std::vector<ScalarFn> functions) {
  if (functions.empty()) throw std::invalid_argument("FnFamily: empty function list");
  auto space = functions.front().space_ptr();
  std::vector<Rational> values;
  for (const ScalarFn& f : functions) {
    if (!(f.space() == *space))
      throw std::invalid_argument("FnFamily: functions on different spaces");
    for (const Rational& v : f.values()) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (std::find(values.begin(), values.end(), Rational(0)) == values.end())
    values.insert(values.begin(), Rational(0));

  const bool has_zero =
      std::any_of(functions.begin(), functions.end(), [](const ScalarFn& f) { return f.is_zero(); });
  if (!has_zero) functions.push_back(ScalarFn::constant(space, Rational(0)));

  std::sort(functions.begin(), functions.end());

  // Full enumeration iff the count matches |values|^(number of components):
  // members are distinct, continuous, and value-set valued, so only the
  // count can distinguish the family from the full one.
  const auto k = space->connected_components().size();
  unsigned long long expected = 1;
  bool overflow = false;
  for (std::size_t c = 0; c < k && !overflow; ++c) {
    expected *= static_cast<unsigned long long>(values.size());
    if (expected > 1'000'000'000ULL) overflow = true;
  }
  const bool full = !overflow && expected == functions.size();
  return FnFamily(std::move(space), ValueGrid(std::move(values)), std::move(functions), full);
}

std::optional<int> FnFamily::index_of(const ScalarFn& f) const {
  if (!(f.space() == *space_)) return std::nullopt;
  const auto it = std::lower_bound(fns_.begin(), fns_.end(), f);
  if (it == fns_.end() || !(*it == f)) return std::nullopt;
  return static_cast<int>(it - fns_.begin());
}

CompatMap::CompatMap(FnFamily source, FnFamily target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != source_.size())
    throw std::invalid_argument("CompatMap: assignment does not cover the source family");
  for (int v : assignment_)
    if (v < 0 || v >= target_.size())
      throw std::invalid_argument("CompatMap: assignment index out of target range");
}

bool CompatMap::is_bijective() const {
  if (source_.size() != target_.size()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(target_.size()), false);
  for (int v : assignment_) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool CompatMap::is_compat_morphism(WitnessPair* witness) const {
  for (int i = 0; i < source_.size(); ++i)
    for (int j = 0; j < source_.size(); ++j) {
      if (!compat_le(source_[i], source_[j])) continue;
      if (!compat_le(apply(i), apply(j))) {
        if (witness)
          *witness = {i, j,
                      "ordering of " + pair_text(source_, i, j) + " is broken: images " +
                          pair_text(target_, apply_index(i), apply_index(j)) +
                          " are not compatibility-ordered"};
        return false;
      }
    }
  return true;
}

bool CompatMap::is_compat_iso(WitnessPair* witness) const {
  if (!is_bijective()) {
    if (witness) *witness = {-1, -1, "assignment is not a bijection"};
    return false;
  }
  if (!is_compat_morphism(witness)) return false;
  WitnessPair back;
  if (!inverse().is_compat_morphism(&back)) {
    if (witness)
      *witness = {back.f, back.g, "inverse is not a compatibility morphism: " + back.reason};
    return false;
  }
  return true;
}

CompatMap CompatMap::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("CompatMap: inverse of a non-bijection");
  std::vector<int> inv(assignment_.size());
  for (int i = 0; i < source_.size(); ++i) inv[static_cast<std::size_t>(assignment_[static_cast<std::size_t>(i)])] = i;
  return CompatMap(target_, source_, std::move(inv));
}

CompatMap CompatMap::then(const CompatMap& second) const {
  if (!(second.source_ == target_))
    throw std::invalid_argument("CompatMap: composition families do not match");
  std::vector<int> comp;
  comp.reserve(assignment_.size());
  for (int i = 0; i < source_.size(); ++i) comp.push_back(second.apply_index(apply_index(i)));
  return CompatMap(source_, second.target_, std::move(comp));
}

CompatMap identity_map(const FnFamily& family) {
  std::vector<int> id(static_cast<std::size_t>(family.size()));
  for (int i = 0; i < family.size(); ++i) id[static_cast<std::size_t>(i)] = i;
  return CompatMap(family, family, std::move(id));
}

namespace {

CompatMap verified_iso(FnFamily source, FnFamily target, std::vector<int> assignment,
                       const char* who) {
  CompatMap map(std::move(source), std::move(target), std::move(assignment));
  WitnessPair w;
  if (!map.is_compat_iso(&w))
    throw std::invalid_argument(std::string(who) + ": result is not a compatibility isomorphism (" +
                                w.reason + ")");
  return map;
}

}  // namespace

CompatMap from_homeomorphism(const SpaceMap& phi, const FnFamily& family_x,
                             const FnFamily& family_y) {
  if (!phi.is_homeomorphism())
    throw std::invalid_argument("from_homeomorphism: map is not a homeomorphism");
  if (!(phi.source() == family_x.space()) || !(phi.target() == family_y.space()))
    throw std::invalid_argument("from_homeomorphism: spaces do not match the families");
  const SpaceMap inv = phi.inverse();
  std::vector<int> assignment;
  assignment.reserve(static_cast<std::size_t>(family_x.size()));
  for (int i = 0; i < family_x.size(); ++i) {
    const ScalarFn& f = family_x[i];
    std::vector<Rational> vals(static_cast<std::size_t>(family_y.space().points()));
    for (int y = 0; y < family_y.space().points(); ++y)
      vals[static_cast<std::size_t>(y)] = f.value(inv.apply(y));
    const auto idx = family_y.index_of(ScalarFn(family_y.space_ptr(), std::move(vals)));
    if (!idx)
      throw std::invalid_argument("from_homeomorphism: image of " + to_string(f) +
                                  " is not in the target family");
    assignment.push_back(*idx);
  }
  return verified_iso(family_x, family_y, std::move(assignment), "from_homeomorphism");
}

CompatMap value_relabel(const std::vector<std::pair<Rational, Rational>>& alpha,
                        const FnFamily& family) {
  std::map<Rational, Rational> a;
  std::set<Rational> image;
  for (const auto& [v, w] : alpha) {
    if (!a.emplace(v, w).second)
      throw std::invalid_argument("value_relabel: duplicate source value " + format_rational(v));
    image.insert(w);
  }
  if (image.size() != a.size()) throw std::invalid_argument("value_relabel: map is not injective");
  const auto it0 = a.find(Rational(0));
  if (it0 == a.end() || it0->second != Rational(0))
    throw std::invalid_argument("value_relabel: 0 must map to 0");
  for (const Rational& v : family.value_set().values()) {
    const auto it = a.find(v);
    if (it == a.end())
      throw std::invalid_argument("value_relabel: value " + format_rational(v) + " not covered");
    if (!family.value_set().contains(it->second))
      throw std::invalid_argument("value_relabel: image value " + format_rational(it->second) +
                                  " leaves the family's value set");
  }

  std::vector<int> assignment;
  assignment.reserve(static_cast<std::size_t>(family.size()));
  for (int i = 0; i < family.size(); ++i) {
    std::vector<Rational> vals;
    vals.reserve(family[i].values().size());
    for (const Rational& v : family[i].values()) vals.push_back(a.at(v));
    const auto idx = family.index_of(ScalarFn(family.space_ptr(), std::move(vals)));
    if (!idx)
      throw std::invalid_argument("value_relabel: image of " + to_string(family[i]) +
                                  " is not in the family");
    assignment.push_back(*idx);
  }
  return verified_iso(family, family, std::move(assignment), "value_relabel");
}

std::vector<int> nowhere_zero_indices(const FnFamily& family) {
  std::vector<int> out;
  for (int i = 0; i < family.size(); ++i)
    if (family[i].nonzero_set().is_full()) out.push_back(i);
  return out;
}

namespace {

std::vector<int> shuffle_assignment(const std::vector<int>& unit_permutation,
                                    const FnFamily& family) {
  const auto units = nowhere_zero_indices(family);
  if (unit_permutation.size() != units.size())
    throw std::invalid_argument("shuffle: permutation size differs from the nowhere-zero count");
  std::vector<bool> hit(units.size(), false);
  for (int v : unit_permutation) {
    if (v < 0 || v >= static_cast<int>(units.size()) || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("shuffle: not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> assignment(static_cast<std::size_t>(family.size()));
  for (int i = 0; i < family.size(); ++i) assignment[static_cast<std::size_t>(i)] = i;
  for (std::size_t k = 0; k < units.size(); ++k)
    assignment[static_cast<std::size_t>(units[k])] =
        units[static_cast<std::size_t>(unit_permutation[k])];
  return assignment;
}

}  // namespace

CompatMap nonvanishing_shuffle(const std::vector<int>& unit_permutation, const FnFamily& family) {
  if (!family.space().is_connected())
    throw std::invalid_argument(
        "nonvanishing_shuffle: space is disconnected; a shuffle can break the ordering there "
        "(see shuffle_break_example)");
  return verified_iso(family, family, shuffle_assignment(unit_permutation, family),
                      "nonvanishing_shuffle");
}

ShuffleBreak shuffle_break_example(const FnFamily& family) {
  if (family.space().is_connected())
    throw std::invalid_argument("shuffle_break_example: space is connected");
  const auto units = nowhere_zero_indices(family);
  for (std::size_t u1 = 0; u1 < units.size(); ++u1)
    for (std::size_t u2 = 0; u2 < units.size(); ++u2) {
      if (u1 == u2) continue;
      for (int h = 0; h < family.size(); ++h) {
        if (family[h].is_zero() || family[h].nonzero_set().is_full()) continue;
        if (!compat_le(family[h], family[units[u1]])) continue;
        if (compat_le(family[h], family[units[u2]])) continue;
        // Transposing these two units breaks h ⪯ unit1.
        std::vector<int> perm(units.size());
        for (std::size_t k = 0; k < units.size(); ++k) perm[k] = static_cast<int>(k);
        std::swap(perm[u1], perm[u2]);
        CompatMap map(family, family, shuffle_assignment(perm, family));
        WitnessPair w{h, units[u1],
                      to_string(family[h]) + " precedes " + to_string(family[units[u1]]) +
                          ", but not its shuffled image " + to_string(family[units[u2]])};
        return ShuffleBreak{std::move(map), std::move(w)};
      }
    }
  throw std::invalid_argument(
      "shuffle_break_example: no breaking shuffle exists in this family (value set too small?)");
}

namespace {

bool equal_on(const ScalarFn& f, const ScalarFn& g, const PointSet& where) {
  for (int x : where.to_indices())
    if (f.value(x) != g.value(x)) return false;
  return true;
}

bool vanishes_on(const ScalarFn& f, const PointSet& where) {
  for (int x : where.to_indices())
    if (f.value(x) != 0) return false;
  return true;
}

bool nonvanishing_on(const ScalarFn& f, const PointSet& where) {
  for (int x : where.to_indices())
    if (f.value(x) == 0) return false;
  return true;
}

}  // namespace

CompatMap swap_construction(const FnFamily& family, const PointSet& component,
                            const ScalarFn& rep1, const ScalarFn& rep2) {
  const FiniteSpace& space = family.space();
  if (component.width() != space.points())
    throw std::invalid_argument("swap_construction: component width differs from the space");
  if (space.interior(component).none())
    throw std::invalid_argument("swap_construction: component has empty interior");
  const auto comps = space.connected_components();
  if (std::find(comps.begin(), comps.end(), component) == comps.end())
    throw std::invalid_argument("swap_construction: set is not a connected component");
  for (const ScalarFn* rep : {&rep1, &rep2}) {
    if (!family.index_of(*rep))
      throw std::invalid_argument("swap_construction: representative " + to_string(*rep) +
                                  " is not in the family");
    for (int x : component.to_indices())
      if (rep->value(x) == 0)
        throw std::invalid_argument("swap_construction: representative " + to_string(*rep) +
                                    " vanishes on the component");
  }
  const PointSet edge = space.boundary(component);
  if (!equal_on(rep1, rep2, edge))
    throw std::invalid_argument(
        "swap_construction: representatives disagree on the component boundary");

  std::vector<int> assignment;
  assignment.reserve(static_cast<std::size_t>(family.size()));
  for (int i = 0; i < family.size(); ++i) {
    const ScalarFn& f = family[i];
    const ScalarFn* replacement = nullptr;
    if (equal_on(f, rep1, component))
      replacement = &rep2;
    else if (equal_on(f, rep2, component))
      replacement = &rep1;
    if (!replacement) {
      assignment.push_back(i);
      continue;
    }
    std::vector<Rational> vals = f.values();
    for (int x : component.to_indices()) vals[static_cast<std::size_t>(x)] = replacement->value(x);
    const auto idx = family.index_of(ScalarFn(family.space_ptr(), std::move(vals)));
    if (!idx)
      throw std::invalid_argument("swap_construction: rewritten " + to_string(f) +
                                  " is not in the family");
    assignment.push_back(*idx);
  }
  return verified_iso(family, family, std::move(assignment), "swap_construction");
}

SwapTrace swap_verification_trace(const CompatMap& map, const PointSet& component) {
  const FnFamily& fam = map.source();
  SwapTrace trace;
  trace.boundary_vacuous = fam.space().boundary(component).none();
  for (int i = 0; i < fam.size(); ++i)
    if (map.apply_index(i) != i) trace.differs_from_identity = true;
  for (int i = 0; i < fam.size(); ++i)
    for (int j = 0; j < fam.size(); ++j) {
      if (!compat_le(fam[i], fam[j])) continue;
      const bool lower_in = nonvanishing_on(fam[i], component);
      const bool upper_in = nonvanishing_on(fam[j], component);
      if (lower_in && upper_in)
        ++trace.pairs_both_in;
      else if (upper_in)
        ++trace.pairs_upper_in;
      else
        ++trace.pairs_outside;
      if (!compat_le(map.apply(i), map.apply(j))) ++trace.violations;
    }
  return trace;
}

ScalarFn PointwiseIso::apply(const ScalarFn& f) const {
  if (!(f.space() == source.space()))
    throw std::invalid_argument("PointwiseIso: function lives on a different space");
  std::vector<Rational> vals(static_cast<std::size_t>(f.space().points()));
  for (int x = 0; x < f.space().points(); ++x) {
    const auto& table = point_maps.at(static_cast<std::size_t>(x));
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const auto& p) { return p.first == f.value(x); });
    if (it == table.end())
      throw std::invalid_argument("PointwiseIso: value " + format_rational(f.value(x)) +
                                  " not covered at point " + std::to_string(x));
    vals[static_cast<std::size_t>(x)] = it->second;
  }
  return ScalarFn(f.space_ptr(), std::move(vals));
}

PointwiseIso increasing_pointwise_iso(const FnFamily& family,
                                      const std::vector<Rational>& target_values,
                                      const std::vector<Rational>& offsets) {
  const auto& values = family.value_set().values();
  if (target_values.size() != values.size())
    throw std::invalid_argument("increasing_pointwise_iso: target size differs from value set");
  for (std::size_t k = 0; k + 1 < target_values.size(); ++k)
    if (!(target_values[k] < target_values[k + 1]))
      throw std::invalid_argument("increasing_pointwise_iso: targets not strictly increasing");
  if (static_cast<int>(offsets.size()) != family.space().points())
    throw std::invalid_argument("increasing_pointwise_iso: one offset per point required");

  PointwiseIso s{family, {}};
  s.point_maps.resize(static_cast<std::size_t>(family.space().points()));
  for (int x = 0; x < family.space().points(); ++x)
    for (std::size_t k = 0; k < values.size(); ++k)
      s.point_maps[static_cast<std::size_t>(x)].emplace_back(
          values[k], target_values[k] + offsets[static_cast<std::size_t>(x)]);
  return s;
}

CompatMap shift_normalization(const PointwiseIso& s) {
  const FnFamily& fam = s.source;
  std::vector<ScalarFn> images;
  images.reserve(static_cast<std::size_t>(fam.size()));
  for (int i = 0; i < fam.size(); ++i) images.push_back(s.apply(fam[i]));

  for (int i = 0; i < fam.size(); ++i)
    for (int j = 0; j < fam.size(); ++j)
      if (pointwise_le(fam[i], fam[j]) != pointwise_le(images[static_cast<std::size_t>(i)],
                                                       images[static_cast<std::size_t>(j)]))
        throw std::invalid_argument(
            "shift_normalization: map does not preserve the pointwise order both ways at " +
            pair_text(fam, i, j));

  const ScalarFn& s_zero = images[static_cast<std::size_t>(fam.zero_index())];
  std::vector<ScalarFn> shifted;
  shifted.reserve(images.size());
  for (const ScalarFn& g : images) shifted.push_back(g - s_zero);

  FnFamily target = FnFamily::from_functions(shifted);
  std::vector<int> assignment;
  assignment.reserve(shifted.size());
  for (const ScalarFn& g : shifted) {
    const auto idx = target.index_of(g);
    if (!idx)
      throw std::invalid_argument("shift_normalization: bookkeeping lost " + to_string(g));
    assignment.push_back(*idx);
  }
  return verified_iso(fam, std::move(target), std::move(assignment), "shift_normalization");
}

ScalarFn MonomialMap::apply(const ScalarFn& f) const {
  if (!(f.space() == *space))
    throw std::invalid_argument("MonomialMap: function lives on a different space");
  std::vector<Rational> vals(static_cast<std::size_t>(space->points()));
  for (int y = 0; y < space->points(); ++y)
    vals[static_cast<std::size_t>(y)] =
        coefficients[static_cast<std::size_t>(y)] *
        f.value(point_permutation[static_cast<std::size_t>(y)]);
  return ScalarFn(f.space_ptr(), std::move(vals));
}

MonomialMap make_monomial_map(std::shared_ptr<const FiniteSpace> space,
                              std::vector<int> point_permutation,
                              std::vector<Rational> coefficients) {
  if (!space->is_discrete())
    throw std::invalid_argument("make_monomial_map: space must be discrete");
  const auto n = static_cast<std::size_t>(space->points());
  if (point_permutation.size() != n || coefficients.size() != n)
    throw std::invalid_argument("make_monomial_map: permutation/coefficient size mismatch");
  std::vector<bool> hit(n, false);
  for (int v : point_permutation) {
    if (v < 0 || v >= space->points() || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("make_monomial_map: not a point permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (const Rational& c : coefficients)
    if (c == 0) throw std::invalid_argument("make_monomial_map: zero coefficient");
  return MonomialMap{std::move(space), std::move(point_permutation), std::move(coefficients)};
}

CheckReport check_additive_lemma(const CompatMap& map) {
  CheckReport report;
  report.name = "orthogonality-additivity";
  WitnessPair w;
  if (!map.is_compat_iso(&w))
    throw std::invalid_argument("check_additive_lemma: map is not a compatibility isomorphism (" +
                                w.reason + ")");
  const FnFamily& fam = map.source();
  for (int i = 0; i < fam.size(); ++i)
    for (int j = i; j < fam.size(); ++j) {
      ++report.checks;
      const bool src_orth = is_orthogonal(fam[i], fam[j]);
      const bool img_orth = is_orthogonal(map.apply(i), map.apply(j));
      if (src_orth != img_orth) {
        report.violations.push_back("orthogonality not preserved between " +
                                    pair_text(fam, i, j));
        continue;
      }
      if (!src_orth) continue;
      const auto sum_idx = fam.index_of(fam[i] + fam[j]);
      if (!sum_idx) continue;
      ++report.checks;
      if (!(map.target()[map.apply_index(*sum_idx)] == map.apply(i) + map.apply(j)))
        report.violations.push_back("map is not additive on the orthogonal pair " +
                                    pair_text(fam, i, j));
    }
  return report;
}

CheckReport check_clopen_props(const CompatMap& map) {
  CheckReport report;
  report.name = "clopen-preservation";
  WitnessPair w;
  if (!map.is_compat_iso(&w))
    throw std::invalid_argument("check_clopen_props: map is not a compatibility isomorphism (" +
                                w.reason + ")");
  const FnFamily& fam = map.source();
  const FiniteSpace& x_space = fam.space();
  const FiniteSpace& y_space = map.target().space();

  // The induced clopen map: U is sent to the open support of the image of
  // any member supported exactly on U.
  std::map<PointSet, PointSet> tau;
  std::vector<PointSet> skipped;
  for (const PointSet& u : x_space.clopens()) {
    int rep = -1;
    for (int i = 0; i < fam.size(); ++i)
      if (open_support(fam[i]) == u) {
        rep = i;
        break;
      }
    if (rep < 0) {
      skipped.push_back(u);
      continue;
    }
    tau.emplace(u, open_support(map.apply(rep)));
  }
  for (const PointSet& u : skipped)
    report.notes.push_back("no member is supported exactly on " + u.to_string() + "; skipped");

  for (const auto& [u, tu] : tau) {
    ++report.checks;
    if (!y_space.is_clopen(tu))
      report.violations.push_back("image of clopen " + u.to_string() + " is not clopen");
    const auto complement_it = tau.find(u.complement());
    if (complement_it != tau.end()) {
      ++report.checks;
      if (complement_it->second != tu.complement())
        report.violations.push_back("complement identity fails at " + u.to_string());
    }
  }

  for (const auto& [u, tu] : tau)
    for (int i = 0; i < fam.size(); ++i)
      for (int j = i + 1; j < fam.size(); ++j) {
        if (!equal_on(fam[i], fam[j], u)) continue;
        ++report.checks;
        if (!equal_on(map.apply(i), map.apply(j), tu)) {
          report.violations.push_back("members agreeing on " + u.to_string() +
                                      " have images disagreeing on " + tu.to_string() + ": " +
                                      pair_text(fam, i, j));
        }
      }
  return report;
}

CheckReport check_agree_or_vanish(std::shared_ptr<const FiniteSpace> space,
                                  const ValueGrid& grid) {
  CheckReport report;
  report.name = "agree-or-vanish-on-connected";
  const FiniteSpace& sp = *space;
  const auto fns = enumerate_family(space, grid);
  const int n = sp.points();
  if (n > 16) throw std::invalid_argument("check_agree_or_vanish: space too large");
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    PointSet f_set(n);
    for (int x = 0; x < n; ++x)
      if (mask & (1ULL << x)) f_set.set(x);
    if (!sp.is_connected_subspace(f_set)) continue;
    for (const ScalarFn& f : fns) {
      if (!nonvanishing_on(f, f_set)) continue;
      for (const ScalarFn& g : fns) {
        if (!compat_le(g, f)) continue;
        ++report.checks;
        const bool agrees = equal_on(g, f, f_set);
        const bool vanishes = vanishes_on(g, f_set);
        if (agrees == vanishes)
          report.violations.push_back("on connected " + f_set.to_string() + ": " + to_string(g) +
                                      " ⪯ " + to_string(f) +
                                      " neither agrees nor vanishes cleanly");
      }
    }
  }
  return report;
}

IsoObstruction no_iso_certificate(const FnFamily& x, const FnFamily& y) {
  IsoObstruction out;
  out.size_x = x.size();
  out.size_y = y.size();
  const auto profile = [](const FnFamily& fam) {
    std::vector<long long> p;
    p.reserve(static_cast<std::size_t>(fam.size()));
    for (int i = 0; i < fam.size(); ++i) {
      long long below = 0;
      for (int j = 0; j < fam.size(); ++j)
        if (compat_le(fam[j], fam[i])) ++below;
      p.push_back(below);
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  out.profile_x = profile(x);
  out.profile_y = profile(y);
  return out;
}

std::string IsoObstruction::summary() const {
  const auto render = [](const std::vector<long long>& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p[i]);
    }
    return s + "]";
  };
  std::vector<std::string> parts;
  if (size_mismatch())
    parts.push_back("family sizes differ: " + std::to_string(size_x) + " vs " +
                    std::to_string(size_y));
  if (profile_mismatch())
    parts.push_back("down-set profiles differ: " + render(profile_x) + " vs " +
                    render(profile_y));
  if (parts.empty()) return "no obstruction found";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += "; " + parts[i];
  return s;
}

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  static const std::vector<Rational> pool = {
      Rational(-3), Rational(-2), Rational(-1), Rational(-1, 2), Rational(-2, 3),
      Rational(0),  Rational(1, 3), Rational(1, 2), Rational(1), Rational(2),
      Rational(5, 2), Rational(3)};
  while (true) {
    const Rational& v = pool[static_cast<std::size_t>(rng() % pool.size())];
    if (!nonzero || v != 0) return v;
  }
}

void run_multiplicative_sweep(const std::vector<int>& sizes, CheckReport& report) {
  bool any_nontrivial_relabel = false;
  bool any_nontrivial_homeo = false;
  for (int n : sizes) {
    auto space = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
    for (const ValueGrid& grid :
         {ValueGrid({Rational(0), Rational(1)}), ValueGrid({Rational(-1), Rational(0), Rational(1)})}) {
      const FnFamily fam = FnFamily::enumerate(space, grid);

      // Multiplicative value bijections fixing 0; the grids are closed
      // under multiplication, so the condition is directly checkable.
      std::vector<std::vector<std::pair<Rational, Rational>>> relabels;
      std::vector<Rational> vals = grid.values();
      std::sort(vals.begin(), vals.end());
      std::vector<Rational> perm = vals;
      do {
        std::vector<std::pair<Rational, Rational>> alpha;
        bool ok = true;
        for (std::size_t k = 0; k < vals.size(); ++k) alpha.emplace_back(vals[k], perm[k]);
        const auto apply = [&](const Rational& v) {
          for (const auto& [a, b] : alpha)
            if (a == v) return b;
          throw std::logic_error("relabel misses a value");
        };
        if (apply(Rational(0)) != 0) ok = false;
        for (const Rational& u : vals)
          for (const Rational& v : vals)
            if (ok && apply(u * v) != apply(u) * apply(v)) ok = false;
        if (ok) relabels.push_back(std::move(alpha));
      } while (std::next_permutation(perm.begin(), perm.end()));

      std::vector<int> identity_perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) identity_perm[static_cast<std::size_t>(i)] = i;
      std::vector<int> point_perm = identity_perm;
      std::sort(point_perm.begin(), point_perm.end());
      do {
        const SpaceMap phi(*space, *space, point_perm);
        const CompatMap base = from_homeomorphism(phi, fam, fam);
        if (point_perm != identity_perm) any_nontrivial_homeo = true;
        for (const auto& alpha : relabels) {
          const CompatMap t = base.then(value_relabel(alpha, fam));
          bool relabel_trivial = true;
          for (const auto& [a, b] : alpha)
            if (a != b) relabel_trivial = false;
          if (!relabel_trivial) any_nontrivial_relabel = true;

          for (int i = 0; i < fam.size(); ++i)
            for (int j = i; j < fam.size(); ++j) {
              ++report.checks;
              const auto prod_idx = fam.index_of(fam[i] * fam[j]);
              if (!prod_idx) {
                report.violations.push_back("grid not closed under multiplication at " +
                                            pair_text(fam, i, j));
                continue;
              }
              if (!(t.target()[t.apply_index(*prod_idx)] == t.apply(i) * t.apply(j)))
                report.violations.push_back("candidate map is not multiplicative at " +
                                            pair_text(fam, i, j));
            }
          WitnessPair w;
          ++report.checks;
          if (!t.is_compat_morphism(&w))
            report.violations.push_back("multiplicative bijection is not a morphism: " + w.reason);
        }
      } while (std::next_permutation(point_perm.begin(), point_perm.end()));
    }
  }
  if (!any_nontrivial_relabel)
    report.notes.push_back(
        "multiplicative sweep: no multiplicative value relabel other than the identity exists on "
        "the closed grids; that part is vacuous");
  if (!any_nontrivial_homeo)
    report.notes.push_back("multiplicative sweep: only the identity permutation was available");
}

void run_shift_sweep(const std::vector<int>& sizes, int trials, std::mt19937_64& rng,
                     CheckReport& report) {
  const std::vector<ValueGrid> grids = {
      ValueGrid({Rational(0), Rational(1)}),
      ValueGrid({Rational(-1), Rational(0), Rational(1)}),
      ValueGrid({Rational(0), Rational(1), Rational(2)}),
  };
  for (int t = 0; t < trials; ++t) {
    const int n = sizes[static_cast<std::size_t>(rng() % sizes.size())];
    auto space = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
    const ValueGrid& grid = grids[static_cast<std::size_t>(rng() % grids.size())];
    const FnFamily fam = FnFamily::enumerate(space, grid);

    std::vector<Rational> targets;
    Rational cursor = random_rational(rng, false) - Rational(3);
    for (int k = 0; k < grid.size(); ++k) {
      cursor += Rational(1 + static_cast<long long>(rng() % 4), 1 + static_cast<long long>(rng() % 3));
      targets.push_back(cursor);
    }
    std::vector<Rational> offsets;
    for (int x = 0; x < n; ++x) offsets.push_back(random_rational(rng, false));

    const PointwiseIso s = increasing_pointwise_iso(fam, targets, offsets);
    const CompatMap shifted = shift_normalization(s);
    ++report.checks;
    WitnessPair w;
    if (!shifted.is_compat_iso(&w))
      report.violations.push_back("normalized pointwise-order isomorphism failed: " + w.reason);
  }
}

void run_disjointness_sweep(const std::vector<int>& sizes, int trials, std::mt19937_64& rng,
                            CheckReport& report) {
  const ValueGrid probe_grid(
      {Rational(-1), Rational(0), Rational(1), Rational(2)});
  for (int t = 0; t < trials; ++t) {
    const int n = sizes[static_cast<std::size_t>(rng() % sizes.size())];
    auto space = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
    const FnFamily fam = FnFamily::enumerate(space, probe_grid);

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)], perm[rng() % static_cast<std::size_t>(i + 1)]);
    std::vector<Rational> coeffs;
    for (int i = 0; i < n; ++i) coeffs.push_back(random_rational(rng, true));
    const MonomialMap m = make_monomial_map(space, std::move(perm), std::move(coeffs));

    for (int i = 0; i < fam.size(); ++i)
      for (int j = 0; j < fam.size(); ++j) {
        if (!compat_le(fam[i], fam[j])) continue;
        ++report.checks;
        const ScalarFn diff = fam[j] - fam[i];
        if (!is_orthogonal(diff, fam[i])) {
          report.violations.push_back("(g-f)*f is nonzero for " + pair_text(fam, i, j));
          continue;
        }
        const ScalarFn mi = m.apply(fam[i]);
        const ScalarFn mj = m.apply(fam[j]);
        const ScalarFn mdiff = m.apply(diff);
        if (!(mdiff == mj - mi)) {
          report.violations.push_back("monomial map is not additive on " + pair_text(fam, i, j));
          continue;
        }
        if (!is_orthogonal(mdiff, mi)) {
          report.violations.push_back("disjointness not preserved on " + pair_text(fam, i, j));
          continue;
        }
        if (!compat_le_alg(mi, mj) || !compat_le(mi, mj))
          report.violations.push_back("images of " + pair_text(fam, i, j) +
                                      " are not compatibility-ordered");
      }
  }
}

}  // namespace

CheckReport check_classical_suites(const std::vector<int>& sizes, int trials, std::uint64_t seed) {
  if (sizes.empty()) throw std::invalid_argument("check_classical_suites: no sizes given");
  for (int n : sizes)
    if (n < 1 || n > 6) throw std::invalid_argument("check_classical_suites: sizes must be 1..6");
  CheckReport report;
  report.name = "classical-morphism-suites";
  std::mt19937_64 rng(seed);
  run_multiplicative_sweep(sizes, report);
  run_shift_sweep(sizes, trials, rng, report);
  run_disjointness_sweep(sizes, trials, rng, report);
  return report;
}

}  // namespace compat
