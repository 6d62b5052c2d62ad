// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/dot.hpp"

#include <sstream>

namespace compat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string space_to_dot(const FiniteSpace& space, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (int x = 0; x < space.points(); ++x) out << "  p" << x << " [label=" << quote(std::to_string(x)) << "];\n";
  for (int x = 0; x < space.points(); ++x)
    for (int y = 0; y < space.points(); ++y)
      if (x != y && space.specializes(x, y)) out << "  p" << x << " -> p" << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_to_dot(const FiniteLattice& lattice, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=BT;\n";
  for (int i = 0; i < lattice.size(); ++i)
    out << "  e" << i << " [label=" << quote(lattice.label(i)) << "];\n";
  for (const auto& [a, b] : lattice.covers()) out << "  e" << a << " -> e" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string spectrum_to_dot(const SpectrumSpace& spectrum, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  const FiniteSpace& top = spectrum.topology;
  for (int i = 0; i < top.points(); ++i) {
    std::string label = "{";
    bool first = true;
    for (int a : spectrum.carrier[static_cast<std::size_t>(i)].members().to_indices()) {
      if (!first) label += ",";
      label += spectrum.lattice->label(a);
      first = false;
    }
    label += "}";
    out << "  u" << i << " [label=" << quote(label) << "];\n";
  }
  for (int x = 0; x < top.points(); ++x)
    for (int y = 0; y < top.points(); ++y)
      if (x != y && top.specializes(x, y)) out << "  u" << x << " -> u" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace compat
