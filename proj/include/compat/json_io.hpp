// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include <json.hpp>

#include "compat/lattice.hpp"
#include "compat/scalar_fn.hpp"
#include "compat/space.hpp"

namespace compat {

/// Space files: {"n": <int>, "opens": [[point indices], ...]}.  The empty
/// and full sets may be omitted; they are added on load.
FiniteSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const FiniteSpace& space);

/// Function files: {"values": ["p/q", ...]}; family files are arrays of
/// function objects.
ScalarFn fn_from_json(const nlohmann::json& j, std::shared_ptr<const FiniteSpace> space);
nlohmann::json fn_to_json(const ScalarFn& f);

std::vector<ScalarFn> family_from_json(const nlohmann::json& j,
                                       std::shared_ptr<const FiniteSpace> space);
nlohmann::json family_to_json(const std::vector<ScalarFn>& fns);

/// Lattice dump: {"elements": [...], "join": [[...]], "meet": [[...]]}.
nlohmann::json lattice_to_json(const FiniteLattice& lattice);

nlohmann::json grid_to_json(const ValueGrid& grid);
ValueGrid grid_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file; ParseError on missing file or bad JSON.
nlohmann::json load_json_file(const std::filesystem::path& path);
void save_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace compat
