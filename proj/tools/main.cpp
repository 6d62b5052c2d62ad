// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "compat/dot.hpp"
#include "compat/errors.hpp"
#include "compat/json_io.hpp"
#include "compat/morphisms.hpp"
#include "compat/reconstruction.hpp"
#include "compat/suites.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
  std::string space_file;
  std::string source_space_file;
  std::string target_space_file;
  std::string map_file;
  std::string input_file;
  std::string grid = "0,1";
  std::string kind = "zero";
  std::string format = "json";
  std::string out;
  int max_points = 8;
  int chain = 0;
  bool zariski = false;
  bool ultra = false;
  std::uint64_t seed = 12345;
  int pipeline_trials = 220;
  int composition_trials = 50;
  int classical_trials = 12;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text << '\n';
  } else {
    compat::save_text_file(opt.out, text + "\n");
    std::cout << "wrote " << opt.out << '\n';
  }
}

std::shared_ptr<const compat::FiniteSpace> load_space(const std::string& path, int max_points) {
  const json j = compat::load_json_file(path);
  auto space = std::make_shared<const compat::FiniteSpace>(compat::space_from_json(j));
  if (space->points() > max_points)
    throw compat::OverflowError("space " + path + " exceeds --max-points",
                                static_cast<unsigned long long>(space->points()),
                                static_cast<unsigned long long>(max_points));
  return space;
}

compat::FiniteLattice build_lattice(const Options& opt,
                                    const std::shared_ptr<const compat::FiniteSpace>& space) {
  const compat::ValueGrid grid = compat::ValueGrid::parse(opt.grid);
  if (opt.kind == "ro") return compat::lattice_from_ro(*space);
  if (opt.kind == "rc") return compat::lattice_from_rc(*space);
  if (opt.kind == "zero") return compat::zero_lattice(space, grid);
  if (opt.kind == "support") return compat::support_lattice(space, grid);
  throw compat::ParseError("unknown lattice kind '" + opt.kind +
                           "' (expected ro|rc|zero|support)");
}

/// Family files carry only value tuples, so the space arrives separately.
compat::FnFamily load_family(const std::string& path,
                             const std::shared_ptr<const compat::FiniteSpace>& space) {
  const json j = compat::load_json_file(path);
  return compat::FnFamily::from_functions(compat::family_from_json(j, space));
}

/// Map files name their family files; relative names resolve against the
/// map file's own directory.
compat::CompatMap load_map(const Options& opt) {
  const json j = compat::load_json_file(opt.map_file);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("assignment"))
    throw compat::ParseError("map file needs \"source\", \"target\", \"assignment\"");
  const fs::path base = fs::path(opt.map_file).parent_path();
  const auto resolve = [&base](const std::string& name) {
    const fs::path p(name);
    return p.is_absolute() ? p : base / p;
  };
  if (opt.source_space_file.empty() || opt.target_space_file.empty())
    throw compat::ParseError("map verbs need --source-space and --target-space");
  const auto source_space = load_space(opt.source_space_file, opt.max_points);
  const auto target_space = load_space(opt.target_space_file, opt.max_points);
  compat::FnFamily source =
      load_family(resolve(j.at("source").get<std::string>()).string(), source_space);
  compat::FnFamily target =
      load_family(resolve(j.at("target").get<std::string>()).string(), target_space);
  std::vector<int> assignment;
  for (const json& v : j.at("assignment")) assignment.push_back(v.get<int>());
  try {
    return compat::CompatMap(std::move(source), std::move(target), std::move(assignment));
  } catch (const std::invalid_argument& e) {
    throw compat::ParseError(std::string("map file: ") + e.what());
  }
}

int run_validate(const Options& opt) {
  const json j = compat::load_json_file(opt.input_file);
  try {
    if (j.is_array() || (j.is_object() && j.contains("values"))) {
      if (opt.space_file.empty())
        throw compat::ParseError("function files need --space for context");
      const auto space = load_space(opt.space_file, opt.max_points);
      const auto fns = j.is_array() ? compat::family_from_json(j, space)
                                    : std::vector<compat::ScalarFn>{
                                          compat::fn_from_json(j, space)};
      std::cout << "ok: " << fns.size() << " continuous function(s) on a " << space->points()
                << "-point space\n";
      return 0;
    }
    if (j.is_object() && j.contains("opens")) {
      const compat::FiniteSpace space = compat::space_from_json(j);
      std::cout << "ok: topology with " << space.points() << " point(s), "
                << space.opens().size() << " open set(s)\n";
      return 0;
    }
    if (j.is_object() && j.contains("assignment")) {
      Options map_opt = opt;
      map_opt.map_file = opt.input_file;
      const compat::CompatMap map = load_map(map_opt);
      std::cout << "ok: map over " << map.source().size() << " -> " << map.target().size()
                << " functions\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    throw compat::ParseError(e.what());
  }
  throw compat::ParseError("unrecognized file shape (expected space, function, family, or map)");
}

int run_lattice(const Options& opt) {
  const auto space = load_space(opt.space_file, opt.max_points);
  const compat::FiniteLattice lattice = build_lattice(opt, space);
  if (opt.format == "dot")
    emit(opt, compat::lattice_to_dot(lattice));
  else
    emit(opt, compat::lattice_to_json(lattice).dump(2));
  return 0;
}

json filter_to_json(const compat::Filter& filter) {
  json members = json::array();
  for (int i : filter.members().to_indices()) members.push_back(filter.lattice().label(i));
  return members;
}

int run_spectrum(const Options& opt) {
  compat::LatticePtr lattice;
  if (opt.chain > 0) {
    lattice = std::make_shared<const compat::FiniteLattice>(compat::chain_lattice(opt.chain));
  } else {
    if (opt.space_file.empty())
      throw compat::ParseError("spectrum needs --space or --chain N");
    const auto space = load_space(opt.space_file, opt.max_points);
    lattice = std::make_shared<const compat::FiniteLattice>(build_lattice(opt, space));
  }
  const compat::SpectrumBase base_kind =
      opt.zariski ? compat::SpectrumBase::Zariski : compat::SpectrumBase::Standard;
  const compat::SpectrumSpace sp = opt.ultra ? compat::ult_space(lattice, base_kind)
                                               : compat::spectrum(lattice, base_kind);
  if (opt.format == "dot") {
    emit(opt, compat::spectrum_to_dot(sp));
    return 0;
  }
  json report;
  report["carrier"] = opt.ultra ? "ultrafilters" : "prime-filters";
  report["base"] = opt.zariski ? "zariski" : "standard";
  report["lattice_size"] = lattice->size();
  report["points"] = sp.topology.points();
  report["discrete"] = sp.topology.is_discrete();
  report["filters"] = json::array();
  for (const compat::Filter& f : sp.carrier) report["filters"].push_back(filter_to_json(f));
  report["topology"] = compat::space_to_json(sp.topology);
  emit(opt, report.dump(2));
  return 0;
}

int run_reconstruct(const Options& opt) {
  const auto space = load_space(opt.space_file, opt.max_points);
  const compat::ReconstructionReport rep =
      compat::reconstruct(space, compat::ValueGrid::parse(opt.grid));
  json report;
  report["points"] = rep.space->points();
  report["lattice_size"] = rep.zero_sets->size();
  report["ultrafilters"] = rep.ultrafilter_count;
  report["point_map"] = rep.point_map.assignment();
  report["point_map_bijective"] = rep.point_map_bijective;
  report["point_map_continuous"] = rep.point_map_continuous;
  report["point_map_open"] = rep.point_map_open;
  report["quotient_match"] = rep.quotient_match;
  report["verified"] = rep.verified;
  emit(opt, report.dump(2));
  if (!rep.verified) {
    std::cerr << "verification failed: point map flags bijective=" << rep.point_map_bijective
              << " continuous=" << rep.point_map_continuous << " open=" << rep.point_map_open
              << " quotient_match=" << rep.quotient_match << '\n';
    return 1;
  }
  return 0;
}

int run_check_iso(const Options& opt) {
  const compat::CompatMap map = load_map(opt);
  compat::WitnessPair morphism_witness, iso_witness;
  const bool bijective = map.is_bijective();
  const bool morphism = map.is_compat_morphism(&morphism_witness);
  const bool iso = map.is_compat_iso(&iso_witness);
  json report;
  report["bijective"] = bijective;
  report["morphism"] = morphism;
  report["isomorphism"] = iso;
  if (!morphism)
    report["morphism_witness"] = {{"f", morphism_witness.f},
                                  {"g", morphism_witness.g},
                                  {"reason", morphism_witness.reason}};
  if (!iso && morphism)
    report["isomorphism_witness"] = {
        {"f", iso_witness.f}, {"g", iso_witness.g}, {"reason", iso_witness.reason}};
  emit(opt, report.dump(2));
  if (!iso) {
    const compat::WitnessPair& w = morphism ? iso_witness : morphism_witness;
    std::cerr << "not an isomorphism: " << w.reason;
    if (w.f >= 0) std::cerr << " (function indices " << w.f << ", " << w.g << ")";
    std::cerr << '\n';
    return 1;
  }
  return 0;
}

int run_induce(const Options& opt) {
  const compat::CompatMap map = load_map(opt);
  const compat::PipelineReport rep = compat::run_pipeline(map);
  json report;
  report["stages"] = json::array();
  for (const compat::PipelineStage& s : rep.stages)
    report["stages"].push_back({{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
  report["ok"] = rep.ok();
  if (rep.homeomorphism) report["homeomorphism"] = rep.homeomorphism->assignment();
  emit(opt, report.dump(2));
  if (!rep.ok()) {
    std::cerr << "pipeline failed: " << rep.first_failure() << '\n';
    return 1;
  }
  return 0;
}

int run_suite(const Options& opt) {
  compat::SuiteOptions so;
  so.seed = opt.seed;
  so.pipeline_trials = opt.pipeline_trials;
  so.composition_trials = opt.composition_trials;
  so.classical_trials = opt.classical_trials;
  const std::vector<compat::SuiteResult> results = compat::run_acceptance_suite(so);
  json report = json::array();
  bool all = true;
  for (const compat::SuiteResult& r : results) {
    std::cout << compat::format_suite_line(r) << '\n';
    report.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  if (!opt.out.empty()) {
    compat::save_text_file(opt.out, report.dump(2) + "\n");
    std::cout << "wrote " << opt.out << '\n';
  }
  return all ? 0 : 1;
}

/// Bundled example: swap two nonvanishing representatives on the
/// two-point quasicomponent of a non-discrete disconnected space, then
/// drive the result through every verification the library has.
int run_demo(const Options& opt) {
  auto space = std::make_shared<const compat::FiniteSpace>(compat::FiniteSpace::disjoint_union(
      compat::FiniteSpace::sierpinski(), compat::FiniteSpace::discrete(1)));
  const std::string grid_text = opt.grid == "0,1" ? "0,1,2" : opt.grid;
  const compat::ValueGrid grid = compat::ValueGrid::parse(grid_text);
  const compat::FnFamily family = compat::FnFamily::enumerate(space, grid);
  const compat::PointSet component = compat::PointSet::from_indices(3, {0, 1});
  const compat::ScalarFn rep1 = compat::ScalarFn::constant(space, compat::Rational(1));
  const compat::ScalarFn rep2 = compat::ScalarFn::constant(space, compat::Rational(2));

  std::cout << "space: 3 points, opens";
  for (const compat::PointSet& u : space->opens()) std::cout << ' ' << u.to_string();
  std::cout << "\nfamily: all " << family.size() << " continuous {" << grid_text
            << "}-valued functions\ncomponent under swap: " << component.to_string() << "\n";

  const compat::CompatMap map = compat::swap_construction(family, component, rep1, rep2);
  compat::WitnessPair w;
  std::cout << "swap verified as isomorphism: " << (map.is_compat_iso(&w) ? "yes" : w.reason)
            << '\n';

  const compat::SwapTrace trace = compat::swap_verification_trace(map, component);
  std::cout << "ordered pairs with both members outside the swapped subfamily: "
            << trace.pairs_outside << "\nordered pairs with only the upper member inside: "
            << trace.pairs_upper_in << "\nordered pairs rewritten on both sides: "
            << trace.pairs_both_in << "\nviolations: " << trace.violations
            << "\nboundary agreement vacuous (component is clopen): "
            << (trace.boundary_vacuous ? "yes" : "no")
            << "\ndiffers from identity: " << (trace.differs_from_identity ? "yes" : "no")
            << '\n';

  const compat::CheckReport additive = compat::check_additive_lemma(map);
  std::cout << additive.name << ": " << additive.checks << " checks, "
            << additive.violations.size() << " violations\n";
  const compat::CheckReport clopen = compat::check_clopen_props(map);
  std::cout << clopen.name << ": " << clopen.checks << " checks, " << clopen.violations.size()
            << " violations\n";
  for (const std::string& note : clopen.notes) std::cout << "  note: " << note << '\n';

  const bool clean = trace.violations == 0 && additive.pass() && clopen.pass();
  if (!opt.out.empty()) {
    json report;
    report["assignment"] = map.assignment();
    report["pairs_outside"] = trace.pairs_outside;
    report["pairs_upper_in"] = trace.pairs_upper_in;
    report["pairs_both_in"] = trace.pairs_both_in;
    report["violations"] = trace.violations;
    report["boundary_vacuous"] = trace.boundary_vacuous;
    report["differs_from_identity"] = trace.differs_from_identity;
    compat::save_text_file(opt.out, report.dump(2) + "\n");
    std::cout << "wrote " << opt.out << '\n';
  }
  return clean ? 0 : 1;
}

int run_export_dot(const Options& opt) {
  const auto space = load_space(opt.input_file, opt.max_points);
  emit(opt, compat::space_to_dot(*space));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-topology recovery from the compatibility ordering on functions"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--grid", opt.grid, "comma-separated rational values, e.g. \"-1,0,1\"");
    cmd->add_option("--max-points", opt.max_points, "largest accepted space");
    cmd->add_option("--out", opt.out, "write the report here instead of stdout");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and check a space/function/map file");
  validate->add_option("file", opt.input_file, "JSON file")->required();
  validate->add_option("--space", opt.space_file, "space context for function files");
  validate->add_option("--source-space", opt.source_space_file, "source space for map files");
  validate->add_option("--target-space", opt.target_space_file, "target space for map files");
  add_common(validate);

  CLI::App* lattice = app.add_subcommand("lattice", "build a set lattice from a space");
  lattice->add_option("--space", opt.space_file, "space JSON file")->required();
  lattice->add_option("--kind", opt.kind, "ro|rc|zero|support");
  lattice->add_option("--format", opt.format, "json|dot");
  add_common(lattice);

  CLI::App* spectrum = app.add_subcommand("spectrum", "prime or ultrafilter space of a lattice");
  spectrum->add_option("--space", opt.space_file, "space JSON file");
  spectrum->add_option("--chain", opt.chain, "use the chain lattice 0<1<...<N-1 instead");
  spectrum->add_option("--kind", opt.kind, "ro|rc|zero|support");
  spectrum->add_flag("--ultra", opt.ultra, "carrier = ultrafilters instead of prime filters");
  spectrum->add_flag("--zariski", opt.zariski, "base {F : a in F} instead of {F : a not in F}");
  spectrum->add_option("--format", opt.format, "json|dot");
  add_common(spectrum);

  CLI::App* reconstruct = app.add_subcommand("reconstruct", "recover a space from its functions");
  reconstruct->add_option("--space", opt.space_file, "space JSON file")->required();
  add_common(reconstruct);

  CLI::App* check = app.add_subcommand("check-iso", "verify a map file as an isomorphism");
  check->add_option("--map", opt.map_file, "map JSON file")->required();
  check->add_option("--source-space", opt.source_space_file, "source space")->required();
  check->add_option("--target-space", opt.target_space_file, "target space")->required();
  add_common(check);

  CLI::App* induce = app.add_subcommand("induce", "derive the homeomorphism behind a map file");
  induce->add_option("--map", opt.map_file, "map JSON file")->required();
  induce->add_option("--source-space", opt.source_space_file, "source space")->required();
  induce->add_option("--target-space", opt.target_space_file, "target space")->required();
  add_common(induce);

  CLI::App* suite = app.add_subcommand("suite", "run the full verification checklist");
  suite->add_option("--seed", opt.seed, "seed for the randomized sweeps");
  suite->add_option("--pipeline-trials", opt.pipeline_trials, "generated isomorphism count");
  suite->add_option("--composition-trials", opt.composition_trials, "composable pair count");
  suite->add_option("--classical-trials", opt.classical_trials, "trials per classical sweep");
  suite->add_option("--out", opt.out, "also write a JSON report here");

  CLI::App* demo = app.add_subcommand("demo", "component-swap construction walkthrough");
  demo->add_option("--grid", opt.grid, "value grid (needs two nonzero values)");
  demo->add_option("--out", opt.out, "also write a JSON report here");

  CLI::App* export_dot = app.add_subcommand("export-dot", "specialization digraph of a space");
  export_dot->add_option("file", opt.input_file, "space JSON file")->required();
  export_dot->add_option("--max-points", opt.max_points, "largest accepted space");
  export_dot->add_option("--out", opt.out, "write the DOT text here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(opt);
    if (app.got_subcommand(lattice)) return run_lattice(opt);
    if (app.got_subcommand(spectrum)) return run_spectrum(opt);
    if (app.got_subcommand(reconstruct)) return run_reconstruct(opt);
    if (app.got_subcommand(check)) return run_check_iso(opt);
    if (app.got_subcommand(induce)) return run_induce(opt);
    if (app.got_subcommand(suite)) return run_suite(opt);
    if (app.got_subcommand(demo)) return run_demo(opt);
    if (app.got_subcommand(export_dot)) return run_export_dot(opt);
  } catch (const compat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const compat::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return 3;
  } catch (const compat::PipelineError& e) {
    std::cerr << "pipeline failure at stage '" << e.stage << "': " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
