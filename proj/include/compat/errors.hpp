// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace compat {

/// Input file or schema violation (maps to CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded (maps to CLI exit code 3).
class OverflowError : public std::runtime_error {
 public:
  OverflowError(const std::string& what, unsigned long long requested,
                unsigned long long cap)
      : std::runtime_error(what + " (requested " + std::to_string(requested) +
                           ", cap " + std::to_string(cap) + ")"),
        requested(requested),
        cap(cap) {}

  unsigned long long requested;
  unsigned long long cap;
};

/// Failure of a named stage of the reconstruction pipeline
/// (maps to CLI exit code 1).
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage(std::move(stage)) {}

  std::string stage;
};

}  // namespace compat
