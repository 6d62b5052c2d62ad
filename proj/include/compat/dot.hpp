// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "compat/lattice.hpp"
#include "compat/space.hpp"

namespace compat {

/// Specialization preorder of the space: edge x -> y iff x lies in the
/// closure of {y} (self-loops omitted).
std::string space_to_dot(const FiniteSpace& space, const std::string& name = "space");

/// Hasse diagram: one edge per covering pair, drawn upward.
std::string lattice_to_dot(const FiniteLattice& lattice, const std::string& name = "lattice");

/// Specialization preorder of the spectrum topology, nodes labelled by
/// the carrier filters.
std::string spectrum_to_dot(const SpectrumSpace& spectrum, const std::string& name = "spectrum");

}  // namespace compat
