// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "compat/rational.hpp"
#include "compat/space.hpp"

namespace compat {

/// A finite ordered set of rational values containing 0, used as the value
/// pool when enumerating continuous functions.  Values are kept sorted
/// ascending; the sort order defines the enumeration order downstream.
class ValueGrid {
 public:
  explicit ValueGrid(std::vector<Rational> values);

  static ValueGrid parse(const std::string& comma_separated);

  const std::vector<Rational>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  const Rational& value(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  bool contains(const Rational& v) const;
  /// Index in the sorted order; throws if absent.
  int index_of(const Rational& v) const;
  int zero_index() const { return zero_index_; }

  bool operator==(const ValueGrid& o) const { return values_ == o.values_; }

 private:
  std::vector<Rational> values_;
  int zero_index_ = -1;
};

/// An exact-rational-valued continuous function on a finite space.
/// Continuity (every fiber open, hence clopen) is enforced at construction.
class ScalarFn {
 public:
  ScalarFn(std::shared_ptr<const FiniteSpace> space, std::vector<Rational> values);

  static ScalarFn constant(std::shared_ptr<const FiniteSpace> space, Rational value);
  /// value on the given clopen set, 0 elsewhere.
  static ScalarFn indicator(std::shared_ptr<const FiniteSpace> space, const PointSet& where,
                            Rational value = Rational(1));

  const FiniteSpace& space() const { return *space_; }
  const std::shared_ptr<const FiniteSpace>& space_ptr() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(int x) const { return values_.at(static_cast<std::size_t>(x)); }

  bool is_zero() const;
  PointSet nonzero_set() const;
  PointSet zero_set() const;

  bool operator==(const ScalarFn& o) const;
  /// Deterministic order by values (functions on equal spaces).
  bool operator<(const ScalarFn& o) const { return values_ < o.values_; }

 private:
  std::shared_ptr<const FiniteSpace> space_;
  std::vector<Rational> values_;
};

/// Membership test for the continuous functions: every fiber must be open.
bool is_continuous(const FiniteSpace& space, const std::vector<Rational>& raw_values);

/// Closure of the nonzero set.
PointSet support(const ScalarFn& f);
/// Interior of the support.
PointSet open_support(const ScalarFn& f);
/// Closure of the interior of the zero set; complement of open_support.
PointSet regular_zero_set(const ScalarFn& f);

/// The compatibility ordering: g agrees with f everywhere on support(f).
bool compat_le(const ScalarFn& f, const ScalarFn& g);
/// Algebraic criterion for the same ordering: f*g = f*f pointwise.
bool compat_le_alg(const ScalarFn& f, const ScalarFn& g);

ScalarFn operator+(const ScalarFn& f, const ScalarFn& g);
ScalarFn operator-(const ScalarFn& f, const ScalarFn& g);
ScalarFn operator*(const ScalarFn& f, const ScalarFn& g);
ScalarFn operator-(const ScalarFn& f);
ScalarFn abs(const ScalarFn& f);
ScalarFn pos_part(const ScalarFn& f);
ScalarFn neg_part(const ScalarFn& f);
ScalarFn pmin(const ScalarFn& f, const ScalarFn& g);
ScalarFn pmax(const ScalarFn& f, const ScalarFn& g);

/// Pointwise product identically zero.
bool is_orthogonal(const ScalarFn& f, const ScalarFn& g);

/// Least upper bound of two orthogonal functions in the compatibility
/// ordering; equals their sum.  Throws on non-orthogonal inputs.
ScalarFn compat_sup(const ScalarFn& f, const ScalarFn& g);

/// f <= g at every point.
bool pointwise_le(const ScalarFn& f, const ScalarFn& g);

/// Value tuple rendering, e.g. "(1,-1/2,0)".
std::string to_string(const ScalarFn& f);

inline constexpr unsigned long long kDefaultFamilyCap = 1'000'000;

/// All continuous grid-valued functions on the space, sorted
/// lexicographically by per-point grid index.  Throws OverflowError when
/// the family would exceed the cap.
std::vector<ScalarFn> enumerate_family(std::shared_ptr<const FiniteSpace> space,
                                       const ValueGrid& grid,
                                       unsigned long long cap = kDefaultFamilyCap);

}  // namespace compat
