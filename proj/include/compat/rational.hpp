// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "compat/errors.hpp"

namespace compat {

/// Exact arbitrary-precision rational scalar.  Always kept in canonical
/// form (normalized, positive denominator) by the backing type.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

/// Parses "p", "-p" or "p/q" with arbitrary-precision integer parts.
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return ParseError("invalid rational literal: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(boost::multiprecision::cpp_int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos) throw bad();
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw ParseError("invalid rational literal (zero denominator): '" + text + "'");
    return Rational(boost::multiprecision::cpp_int(num), d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

/// Formats in the canonical "p/q" form, dropping "/q" when q = 1.
inline std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace compat
