// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/json_io.hpp"

#include <fstream>

#include "compat/errors.hpp"

namespace compat {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

FiniteSpace space_from_json(const nlohmann::json& j) {
  const auto& jn = field(j, "n");
  if (!jn.is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = jn.get<int>();
  if (n <= 0) throw ParseError("\"n\" must be positive");
  const auto& jopens = field(j, "opens");
  if (!jopens.is_array()) throw ParseError("\"opens\" must be an array of point-index arrays");

  std::vector<PointSet> opens;
  opens.push_back(PointSet(n));
  opens.push_back(PointSet::all(n));
  for (const auto& jset : jopens) {
    if (!jset.is_array()) throw ParseError("each open set must be an array of point indices");
    PointSet s(n);
    for (const auto& jp : jset) {
      if (!jp.is_number_integer()) throw ParseError("point indices must be integers");
      const int p = jp.get<int>();
      if (p < 0 || p >= n) throw ParseError("point index " + std::to_string(p) + " out of range");
      s.set(p);
    }
    opens.push_back(std::move(s));
  }
  try {
    return FiniteSpace(n, std::move(opens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json space_to_json(const FiniteSpace& space) {
  nlohmann::json jopens = nlohmann::json::array();
  for (const PointSet& s : space.opens()) jopens.push_back(s.to_indices());
  return nlohmann::json{{"n", space.points()}, {"opens", std::move(jopens)}};
}

ScalarFn fn_from_json(const nlohmann::json& j, std::shared_ptr<const FiniteSpace> space) {
  const auto& jvals = field(j, "values");
  if (!jvals.is_array()) throw ParseError("\"values\" must be an array of rational strings");
  if (static_cast<int>(jvals.size()) != space->points())
    throw ParseError("function has " + std::to_string(jvals.size()) + " values for a space of " +
                     std::to_string(space->points()) + " points");
  std::vector<Rational> values;
  values.reserve(jvals.size());
  for (const auto& jv : jvals) {
    if (jv.is_number_integer()) {
      values.push_back(Rational(jv.get<long long>()));
    } else if (jv.is_string()) {
      values.push_back(parse_rational(jv.get<std::string>()));
    } else {
      throw ParseError("function values must be rational strings or integers");
    }
  }
  try {
    return ScalarFn(std::move(space), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json fn_to_json(const ScalarFn& f) {
  nlohmann::json jvals = nlohmann::json::array();
  for (const Rational& v : f.values()) jvals.push_back(format_rational(v));
  return nlohmann::json{{"values", std::move(jvals)}};
}

std::vector<ScalarFn> family_from_json(const nlohmann::json& j,
                                       std::shared_ptr<const FiniteSpace> space) {
  if (!j.is_array()) throw ParseError("family file must be a JSON array of functions");
  std::vector<ScalarFn> fns;
  fns.reserve(j.size());
  for (const auto& jf : j) fns.push_back(fn_from_json(jf, space));
  return fns;
}

nlohmann::json family_to_json(const std::vector<ScalarFn>& fns) {
  nlohmann::json out = nlohmann::json::array();
  for (const ScalarFn& f : fns) out.push_back(fn_to_json(f));
  return out;
}

nlohmann::json lattice_to_json(const FiniteLattice& lattice) {
  nlohmann::json jelems = nlohmann::json::array();
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.is_set_based())
      jelems.push_back(lattice.element(i).to_indices());
    else
      jelems.push_back(lattice.label(i));
  }
  nlohmann::json jjoin = nlohmann::json::array();
  nlohmann::json jmeet = nlohmann::json::array();
  for (int a = 0; a < lattice.size(); ++a) {
    nlohmann::json jrow = nlohmann::json::array();
    nlohmann::json mrow = nlohmann::json::array();
    for (int b = 0; b < lattice.size(); ++b) {
      jrow.push_back(lattice.join(a, b));
      mrow.push_back(lattice.meet(a, b));
    }
    jjoin.push_back(std::move(jrow));
    jmeet.push_back(std::move(mrow));
  }
  return nlohmann::json{{"elements", std::move(jelems)},
                        {"join", std::move(jjoin)},
                        {"meet", std::move(jmeet)},
                        {"bottom", lattice.bottom()},
                        {"top", lattice.top()},
                        {"provenance", to_string(lattice.provenance())}};
}

nlohmann::json grid_to_json(const ValueGrid& grid) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& v : grid.values()) out.push_back(format_rational(v));
  return out;
}

ValueGrid grid_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("grid must be a JSON array of rational strings");
  std::vector<Rational> values;
  for (const auto& jv : j) {
    if (jv.is_number_integer())
      values.push_back(Rational(jv.get<long long>()));
    else if (jv.is_string())
      values.push_back(parse_rational(jv.get<std::string>()));
    else
      throw ParseError("grid values must be rational strings or integers");
  }
  try {
    return ValueGrid(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

}  // namespace compat
