// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "compat/errors.hpp"
#include "compat/reconstruction.hpp"

namespace compat {

namespace {

std::vector<std::shared_ptr<const FiniteSpace>> sweep_spaces(int max_points) {
  std::vector<std::shared_ptr<const FiniteSpace>> out;
  for (int n = 1; n <= max_points; ++n)
    for (FiniteSpace& s : topologies_up_to_homeomorphism(n))
      out.push_back(std::make_shared<const FiniteSpace>(std::move(s)));
  return out;
}

ValueGrid grid_m1012() {
  return ValueGrid({Rational(-1), Rational(0), Rational(1), Rational(2)});
}

SuiteResult failed(SuiteResult r, const std::string& why) {
  r.pass = false;
  r.detail = why;
  return r;
}

}  // namespace

SuiteResult criterion_ordering_oracle() {
  SuiteResult r{1, "ordering-definitions-agree", false, ""};
  long long pairs = 0;
  int spaces = 0;
  for (const auto& space : sweep_spaces(4)) {
    ++spaces;
    const auto fns = enumerate_family(space, grid_m1012());
    for (const ScalarFn& f : fns)
      for (const ScalarFn& g : fns) {
        ++pairs;
        if (compat_le(f, g) != compat_le_alg(f, g))
          return failed(r, "agreement breaks for " + to_string(f) + ", " + to_string(g));
      }
  }
  r.pass = true;
  std::ostringstream d;
  d << "agreement on " << pairs << " ordered pairs across " << spaces << " spaces";
  r.detail = d.str();
  return r;
}

SuiteResult criterion_lattice_identities(LatticeLog& lattices) {
  SuiteResult r{2, "support-zero-lattice-identities", false, ""};
  long long pairs = 0;
  int built = 0;
  for (const auto& space : sweep_spaces(4)) {
    try {
      auto ro = std::make_shared<const FiniteLattice>(lattice_from_ro(*space));
      auto rc = std::make_shared<const FiniteLattice>(lattice_from_rc(*space));
      auto sup = std::make_shared<const FiniteLattice>(support_lattice(space, grid_m1012()));
      auto zero = std::make_shared<const FiniteLattice>(zero_lattice(space, grid_m1012()));
      lattices.insert(lattices.end(), {ro, rc, sup, zero});
      built += 4;
    } catch (const std::exception& e) {
      return failed(r, std::string("lattice construction failed: ") + e.what());
    }

    const auto fns = enumerate_family(space, grid_m1012());
    for (const ScalarFn& f : fns)
      for (const ScalarFn& g : fns) {
        ++pairs;
        const ScalarFn sum_abs = abs(f) + abs(g);
        const ScalarFn prod = f * g;
        if (ro_join(*space, open_support(f), open_support(g)) != open_support(sum_abs))
          return failed(r, "support join identity breaks for " + to_string(f) + ", " + to_string(g));
        if (ro_meet(*space, open_support(f), open_support(g)) != open_support(prod))
          return failed(r, "support meet identity breaks for " + to_string(f) + ", " + to_string(g));
        if (rc_meet(*space, regular_zero_set(f), regular_zero_set(g)) !=
            regular_zero_set(sum_abs))
          return failed(r, "zero-set meet identity breaks for " + to_string(f) + ", " + to_string(g));
        if (rc_join(*space, regular_zero_set(f), regular_zero_set(g)) != regular_zero_set(prod))
          return failed(r, "zero-set join identity breaks for " + to_string(f) + ", " + to_string(g));
      }
  }
  r.pass = true;
  std::ostringstream d;
  d << "set identities on " << pairs << " pairs; " << built
    << " lattices constructed with full axiom validation";
  r.detail = d.str();
  return r;
}

SuiteResult criterion_part_splitting() {
  SuiteResult r{3, "positive-negative-part-splitting", false, ""};
  const ValueGrid grid({Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)});
  long long pairs = 0;
  const ScalarFn* offender_f = nullptr;
  for (int n = 1; n <= 3; ++n) {
    auto space = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
    const auto fns = enumerate_family(space, grid);
    const ScalarFn zero = ScalarFn::constant(space, Rational(0));
    for (const ScalarFn& f : fns)
      for (const ScalarFn& g : fns) {
        ++pairs;
        const bool le = compat_le(f, g);
        if (le != (compat_le(pos_part(f), pos_part(g)) && compat_le(neg_part(f), neg_part(g)))) {
          offender_f = &f;
          return failed(r, "part splitting breaks for " + to_string(f) + ", " + to_string(g));
        }
        if (pointwise_le(zero, f) && pointwise_le(zero, g)) {
          const bool rhs = pointwise_le(f, g) && pointwise_le(g, pmax(g - f, f));
          if (le != rhs)
            return failed(r, "nonnegative criterion breaks for " + to_string(f) + ", " +
                                 to_string(g));
        }
        if (pointwise_le(f, zero) && pointwise_le(g, zero)) {
          const bool rhs = pointwise_le(g, f) && pointwise_le(pmin(g - f, f), g);
          if (le != rhs)
            return failed(r, "nonpositive criterion breaks for " + to_string(f) + ", " +
                                 to_string(g));
        }
      }
  }
  (void)offender_f;
  r.pass = true;
  std::ostringstream d;
  d << "splitting and one-sided criteria agree with the ordering on " << pairs << " pairs";
  r.detail = d.str();
  return r;
}

SuiteResult criterion_point_recovery(LatticeLog& lattices) {
  SuiteResult r{4, "point-recovery", false, ""};
  const ValueGrid grid01({Rational(0), Rational(1)});

  for (int n = 1; n <= 6; ++n) {
    auto space = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
    const ReconstructionReport rep = reconstruct(space, grid01);
    lattices.push_back(rep.zero_sets);
    if (!rep.verified || rep.ultrafilter_count != n || !rep.point_map_bijective ||
        !rep.point_map_continuous || !rep.point_map_open)
      return failed(r, "discrete space with " + std::to_string(n) +
                           " points did not recover as a homeomorphism");
  }

  int spaces = 0;
  for (const auto& space : sweep_spaces(4)) {
    ++spaces;
    const ReconstructionReport rep = reconstruct(space, grid01);
    lattices.push_back(rep.zero_sets);
    const auto quasis = space->quasicomponents();
    if (rep.ultrafilter_count != static_cast<int>(quasis.size()))
      return failed(r, "ultrafilter count differs from quasicomponent count on a " +
                           std::to_string(space->points()) + "-point space");
    if (!rep.ultrafilters.topology.is_discrete())
      return failed(r, "ultrafilter space is not discrete on a " +
                           std::to_string(space->points()) + "-point space");
    if (!rep.quotient_match)
      return failed(r, "ultrafilter space does not match the component quotient on a " +
                           std::to_string(space->points()) + "-point space");
  }
  r.pass = true;
  std::ostringstream d;
  d << "discrete recovery up to 6 points; quotient comparison on " << spaces << " spaces";
  r.detail = d.str();
  return r;
}

SuiteResult criterion_spectrum_base(const LatticeLog& lattices) {
  SuiteResult r{5, "spectrum-base-identity", false, ""};
  long long checks = 0;
  for (const LatticePtr& lat : lattices) {
    for (const SpectrumSpace& sp : {spectrum(lat), ult_space(lat)}) {
      for (const Bitset& u : sp.base) {
        ++checks;
        if (!sp.topology.is_open(u))
          return failed(r, "a base set is not open in its own spectrum");
      }
      for (int a = 0; a < lat->size(); ++a)
        for (int b = 0; b < lat->size(); ++b) {
          ++checks;
          if ((sp.base_set(a) & sp.base_set(b)) != sp.base_set(lat->join(a, b)))
            return failed(r, "base intersection identity breaks at elements " +
                                 std::to_string(a) + ", " + std::to_string(b));
        }
    }
  }
  r.pass = true;
  std::ostringstream d;
  d << checks << " base-set checks over " << lattices.size()
    << " lattices (prime and maximal carriers)";
  r.detail = d.str();
  return r;
}

namespace {

struct GeneratedIso {
  CompatMap map;
  /// Set when the generator is a homeomorphism composition whose point
  /// map the pipeline must reproduce exactly.
  std::optional<std::vector<int>> expected_points;
  std::string kind;
};

std::vector<ValueGrid> pipeline_grids() {
  return {ValueGrid({Rational(0), Rational(1)}),
          ValueGrid({Rational(-1), Rational(0), Rational(1)}),
          ValueGrid({Rational(0), Rational(1), Rational(2)})};
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(p[static_cast<std::size_t>(i)], p[rng() % static_cast<std::size_t>(i + 1)]);
  return p;
}

GeneratedIso generate_iso(std::mt19937_64& rng) {
  const auto grids = pipeline_grids();
  const int kind = static_cast<int>(rng() % 5);
  const int n = kind == 3 ? 1 : 1 + static_cast<int>(rng() % 4);
  auto space = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
  const ValueGrid& grid = grids[rng() % grids.size()];
  const FnFamily fam = FnFamily::enumerate(space, grid);

  const auto random_relabel = [&](const FnFamily& family) {
    std::vector<Rational> nonzero;
    for (const Rational& v : family.value_set().values())
      if (v != 0) nonzero.push_back(v);
    std::vector<Rational> to = nonzero;
    for (std::size_t i = to.size(); i > 1; --i) std::swap(to[i - 1], to[rng() % i]);
    std::vector<std::pair<Rational, Rational>> alpha{{Rational(0), Rational(0)}};
    for (std::size_t i = 0; i < nonzero.size(); ++i) alpha.emplace_back(nonzero[i], to[i]);
    return value_relabel(alpha, family);
  };

  switch (kind) {
    case 0: {
      auto other = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
      const FnFamily fam_y = FnFamily::enumerate(other, grid);
      const auto perm = random_permutation(n, rng);
      const SpaceMap phi(*space, *other, perm);
      return {from_homeomorphism(phi, fam, fam_y), perm, "homeomorphism"};
    }
    case 1: {
      std::vector<int> id(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
      return {random_relabel(fam), id, "value-relabel"};
    }
    case 2: {
      std::vector<Rational> targets;
      Rational cursor = Rational(-2) - Rational(static_cast<long long>(rng() % 3));
      for (int k = 0; k < fam.value_set().size(); ++k) {
        cursor += Rational(1 + static_cast<long long>(rng() % 3),
                           1 + static_cast<long long>(rng() % 2));
        targets.push_back(cursor);
      }
      std::vector<Rational> offsets;
      for (int x = 0; x < n; ++x)
        offsets.push_back(Rational(static_cast<long long>(rng() % 7) - 3));
      std::vector<int> id(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
      return {shift_normalization(increasing_pointwise_iso(fam, targets, offsets)), id,
              "order-shift"};
    }
    case 3: {
      const auto units = nowhere_zero_indices(fam);
      std::vector<int> perm(units.size());
      for (std::size_t i = 0; i < units.size(); ++i) perm[i] = static_cast<int>(i);
      for (std::size_t i = units.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
      return {nonvanishing_shuffle(perm, fam), std::vector<int>{0}, "unit-shuffle"};
    }
    default: {
      auto other = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
      const FnFamily fam_y = FnFamily::enumerate(other, grid);
      const auto perm = random_permutation(n, rng);
      const SpaceMap phi(*space, *other, perm);
      const CompatMap first = from_homeomorphism(phi, fam, fam_y);
      const CompatMap second = random_relabel(fam_y);
      return {first.then(second), perm, "composition"};
    }
  }
}

}  // namespace

SuiteResult criterion_pipeline(const SuiteOptions& options, IsoLog& isos) {
  SuiteResult r{6, "isomorphism-pipeline", false, ""};
  std::mt19937_64 rng(options.seed);
  int succeeded = 0;
  for (int t = 0; t < options.pipeline_trials; ++t) {
    GeneratedIso gen = generate_iso(rng);
    SpaceMap homeo = [&] {
      try {
        return induced_homeomorphism(gen.map);
      } catch (const PipelineError& e) {
        throw PipelineError(e.stage, gen.kind + " generator, trial " + std::to_string(t) + ": " +
                                         e.what());
      }
    }();
    if (gen.expected_points && homeo.assignment() != *gen.expected_points)
      return failed(r, gen.kind + " generator: pipeline recovered a different point map");
    isos.push_back(std::move(gen.map));
    ++succeeded;
  }
  if (succeeded < 200)
    return failed(r, "only " + std::to_string(succeeded) + " generated isomorphisms succeeded");

  for (int t = 0; t < options.composition_trials; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    auto space_a = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
    auto space_b = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
    auto space_c = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(n));
    const auto grids = pipeline_grids();
    const ValueGrid& grid = grids[rng() % grids.size()];
    const FnFamily fam_a = FnFamily::enumerate(space_a, grid);
    const FnFamily fam_b = FnFamily::enumerate(space_b, grid);
    const FnFamily fam_c = FnFamily::enumerate(space_c, grid);
    const SpaceMap phi1(*space_a, *space_b, random_permutation(n, rng));
    const SpaceMap phi2(*space_b, *space_c, random_permutation(n, rng));
    const CompatMap t1 = from_homeomorphism(phi1, fam_a, fam_b);
    const CompatMap t2 = from_homeomorphism(phi2, fam_b, fam_c);
    const SpaceMap h12 = induced_homeomorphism(t1.then(t2));
    const SpaceMap h1 = induced_homeomorphism(t1);
    const SpaceMap h2 = induced_homeomorphism(t2);
    if (h12.assignment() != h1.then(h2).assignment())
      return failed(r, "composition trial " + std::to_string(t) +
                           ": pipeline does not commute with composition");
  }

  r.pass = true;
  std::ostringstream d;
  d << succeeded << " generated isomorphisms driven to verified homeomorphisms; "
    << options.composition_trials << " composition identities";
  r.detail = d.str();
  return r;
}

SuiteResult criterion_no_isomorphism() {
  SuiteResult r{7, "non-isomorphism-certificate", false, ""};
  const ValueGrid grid01({Rational(0), Rational(1)});
  auto x = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(2));
  auto y = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(3));
  const FnFamily fam_x = FnFamily::enumerate(x, grid01);
  const FnFamily fam_y = FnFamily::enumerate(y, grid01);
  const IsoObstruction cert = no_iso_certificate(fam_x, fam_y);
  if (!cert.size_mismatch())
    return failed(r, "family cardinalities unexpectedly agree");
  if (cert.size_x != 4 || cert.size_y != 8)
    return failed(r, "family cardinalities are not 4 and 8");
  if (!cert.profile_mismatch()) return failed(r, "down-set profiles unexpectedly agree");
  const std::vector<long long> expected_x{1, 2, 2, 4};
  const std::vector<long long> expected_y{1, 2, 2, 2, 4, 4, 4, 8};
  if (cert.profile_x != expected_x || cert.profile_y != expected_y)
    return failed(r, "down-set profiles differ from the expected ones: " + cert.summary());
  r.pass = true;
  r.detail = "certified: " + cert.summary();
  return r;
}

SuiteResult criterion_structural_checks(const IsoLog& isos) {
  SuiteResult r{8, "structural-preservation", false, ""};
  long long checks = 0;
  for (const CompatMap& map : isos) {
    const CheckReport additive = check_additive_lemma(map);
    checks += additive.checks;
    if (!additive.pass()) return failed(r, "additivity sweep: " + additive.violations.front());
    const CheckReport clopen = check_clopen_props(map);
    checks += clopen.checks;
    if (!clopen.pass()) return failed(r, "clopen sweep: " + clopen.violations.front());
  }

  const ValueGrid grid({Rational(-1), Rational(0), Rational(1)});
  for (const auto& space : sweep_spaces(4)) {
    const CheckReport agree = check_agree_or_vanish(space, grid);
    checks += agree.checks;
    if (!agree.pass()) return failed(r, "agree-or-vanish sweep: " + agree.violations.front());
  }
  r.pass = true;
  std::ostringstream d;
  d << checks << " checks over " << isos.size()
    << " generated isomorphisms plus the connected-subset sweep";
  r.detail = d.str();
  return r;
}

SuiteResult criterion_swap_instances() {
  SuiteResult r{9, "component-swap-construction", false, ""};
  const ValueGrid grid012({Rational(0), Rational(1), Rational(2)});
  const ValueGrid grid_m101({Rational(-1), Rational(0), Rational(1)});

  struct Instance {
    std::string name;
    FnFamily family;
    PointSet component;
    ScalarFn rep1;
    ScalarFn rep2;
  };
  std::vector<Instance> instances;

  {
    auto space = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(3));
    FnFamily fam = FnFamily::enumerate(space, grid012);
    instances.push_back({"discrete-3/singleton", fam, PointSet::from_indices(3, {0}),
                         ScalarFn::constant(space, Rational(1)),
                         ScalarFn::constant(space, Rational(2))});
  }
  {
    // A non-discrete space with a two-point quasicomponent: one
    // two-point cluster whose only opens are nested, plus an isolated
    // point.
    auto space = std::make_shared<const FiniteSpace>(
        FiniteSpace::disjoint_union(FiniteSpace::sierpinski(), FiniteSpace::discrete(1)));
    FnFamily fam = FnFamily::enumerate(space, grid012);
    instances.push_back({"cluster-plus-point", fam, PointSet::from_indices(3, {0, 1}),
                         ScalarFn::constant(space, Rational(1)),
                         ScalarFn::constant(space, Rational(2))});
  }
  {
    auto space = std::make_shared<const FiniteSpace>(FiniteSpace::discrete(2));
    FnFamily fam = FnFamily::enumerate(space, grid_m101);
    instances.push_back({"discrete-2/sign-swap", fam, PointSet::from_indices(2, {1}),
                         ScalarFn::constant(space, Rational(-1)),
                         ScalarFn::constant(space, Rational(1))});
  }

  std::vector<std::string> parts;
  for (const Instance& inst : instances) {
    CompatMap map = [&] {
      try {
        return swap_construction(inst.family, inst.component, inst.rep1, inst.rep2);
      } catch (const std::invalid_argument& e) {
        throw PipelineError("swap-construction", inst.name + ": " + e.what());
      }
    }();
    WitnessPair w;
    if (!map.is_compat_iso(&w)) return failed(r, inst.name + ": not an isomorphism: " + w.reason);
    const SwapTrace trace = swap_verification_trace(map, inst.component);
    if (trace.violations != 0)
      return failed(r, inst.name + ": ordered pairs broken by the swap");
    if (!trace.differs_from_identity)
      return failed(r, inst.name + ": swap collapsed to the identity");
    std::ostringstream part;
    part << inst.name << " (pairs outside/upper/both " << trace.pairs_outside << "/"
         << trace.pairs_upper_in << "/" << trace.pairs_both_in
         << (trace.boundary_vacuous ? ", boundary condition vacuous" : "") << ")";
    parts.push_back(part.str());
  }
  r.pass = true;
  r.detail = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) r.detail += "; " + parts[i];
  return r;
}

SuiteResult criterion_classical(const SuiteOptions& options) {
  SuiteResult r{10, "classical-morphism-suites", false, ""};
  const CheckReport report =
      check_classical_suites({1, 2, 3, 4}, options.classical_trials, options.seed);
  if (!report.pass()) return failed(r, report.violations.front());
  std::ostringstream d;
  d << report.checks << " checks";
  for (const std::string& note : report.notes) d << "; " << note;
  r.pass = true;
  r.detail = d.str();
  return r;
}

std::vector<SuiteResult> run_acceptance_suite(const SuiteOptions& options) {
  std::vector<SuiteResult> results;
  LatticeLog lattices;
  IsoLog isos;
  results.push_back(criterion_ordering_oracle());
  results.push_back(criterion_lattice_identities(lattices));
  results.push_back(criterion_part_splitting());
  results.push_back(criterion_point_recovery(lattices));
  results.push_back(criterion_spectrum_base(lattices));
  results.push_back(criterion_pipeline(options, isos));
  results.push_back(criterion_no_isomorphism());
  results.push_back(criterion_structural_checks(isos));
  results.push_back(criterion_swap_instances());
  results.push_back(criterion_classical(options));
  return results;
}

std::string format_suite_line(const SuiteResult& result) {
  std::ostringstream out;
  out << (result.pass ? "PASS" : "FAIL") << "  [" << result.id << "] " << result.name << ": "
      << result.detail;
  return out.str();
}

}  // namespace compat
