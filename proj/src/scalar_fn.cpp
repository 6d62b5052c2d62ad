// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/scalar_fn.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "compat/errors.hpp"

namespace compat {

ValueGrid::ValueGrid(std::vector<Rational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  if (std::adjacent_find(values_.begin(), values_.end()) != values_.end())
    throw std::invalid_argument("ValueGrid: duplicate values are forbidden");
  const auto it = std::lower_bound(values_.begin(), values_.end(), Rational(0));
  if (it == values_.end() || *it != 0)
    throw std::invalid_argument("ValueGrid: the grid must contain 0");
  zero_index_ = static_cast<int>(it - values_.begin());
}

ValueGrid ValueGrid::parse(const std::string& comma_separated) {
  std::vector<Rational> vals;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto begin = item.find_first_not_of(" \t");
    const auto end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ParseError("empty grid entry in '" + comma_separated + "'");
    vals.push_back(parse_rational(item.substr(begin, end - begin + 1)));
  }
  if (vals.empty()) throw ParseError("empty grid specification");
  try {
    return ValueGrid(std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool ValueGrid::contains(const Rational& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

int ValueGrid::index_of(const Rational& v) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v)
    throw std::invalid_argument("ValueGrid: value " + format_rational(v) + " not in grid");
  return static_cast<int>(it - values_.begin());
}

namespace {

std::shared_ptr<const FiniteSpace> require_space(std::shared_ptr<const FiniteSpace> space) {
  if (!space) throw std::invalid_argument("ScalarFn: null space");
  return space;
}

void check_same_space(const ScalarFn& f, const ScalarFn& g, const char* op) {
  if (f.space_ptr() == g.space_ptr()) return;
  if (f.space() == g.space()) return;
  throw std::invalid_argument(std::string(op) + ": functions live on different spaces");
}

}  // namespace

ScalarFn::ScalarFn(std::shared_ptr<const FiniteSpace> space, std::vector<Rational> values)
    : space_(require_space(std::move(space))), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != space_->points())
    throw std::invalid_argument("ScalarFn: value vector length " + std::to_string(values_.size()) +
                                " does not match point count " + std::to_string(space_->points()));
  if (!compat::is_continuous(*space_, values_)) {
    // Name an offending fiber for diagnostics.
    for (const auto& v : values_) {
      PointSet fiber(space_->points());
      for (int x = 0; x < space_->points(); ++x)
        if (values_[static_cast<std::size_t>(x)] == v) fiber.set(x);
      if (!space_->is_open(fiber))
        throw std::invalid_argument("ScalarFn: not continuous, fiber of " + format_rational(v) +
                                    " = " + fiber.to_string() + " is not open");
    }
  }
}

ScalarFn ScalarFn::constant(std::shared_ptr<const FiniteSpace> space, Rational value) {
  require_space(space);
  const int n = space->points();
  return ScalarFn(std::move(space), std::vector<Rational>(static_cast<std::size_t>(n), value));
}

ScalarFn ScalarFn::indicator(std::shared_ptr<const FiniteSpace> space, const PointSet& where,
                             Rational value) {
  require_space(space);
  std::vector<Rational> vals(static_cast<std::size_t>(space->points()), Rational(0));
  for (int x : where.to_indices()) vals[static_cast<std::size_t>(x)] = value;
  return ScalarFn(std::move(space), std::move(vals));
}

bool ScalarFn::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

PointSet ScalarFn::nonzero_set() const {
  PointSet s(space_->points());
  for (int x = 0; x < space_->points(); ++x)
    if (values_[static_cast<std::size_t>(x)] != 0) s.set(x);
  return s;
}

PointSet ScalarFn::zero_set() const { return nonzero_set().complement(); }

bool ScalarFn::operator==(const ScalarFn& o) const {
  return (space_ == o.space_ || *space_ == *o.space_) && values_ == o.values_;
}

bool is_continuous(const FiniteSpace& space, const std::vector<Rational>& raw_values) {
  if (static_cast<int>(raw_values.size()) != space.points())
    throw std::invalid_argument("is_continuous: value vector length does not match point count");
  std::map<Rational, PointSet> fibers;
  for (int x = 0; x < space.points(); ++x) {
    auto [it, fresh] = fibers.try_emplace(raw_values[static_cast<std::size_t>(x)],
                                          PointSet(space.points()));
    it->second.set(x);
  }
  for (const auto& [v, fiber] : fibers)
    if (!space.is_open(fiber)) return false;
  return true;
}

PointSet support(const ScalarFn& f) { return f.space().closure(f.nonzero_set()); }

PointSet open_support(const ScalarFn& f) { return f.space().interior(support(f)); }

PointSet regular_zero_set(const ScalarFn& f) {
  return f.space().closure(f.space().interior(f.zero_set()));
}

bool compat_le(const ScalarFn& f, const ScalarFn& g) {
  check_same_space(f, g, "compat_le");
  for (int x : support(f).to_indices())
    if (f.value(x) != g.value(x)) return false;
  return true;
}

bool compat_le_alg(const ScalarFn& f, const ScalarFn& g) {
  check_same_space(f, g, "compat_le_alg");
  for (int x = 0; x < f.space().points(); ++x)
    if (f.value(x) * g.value(x) != f.value(x) * f.value(x)) return false;
  return true;
}

namespace {

template <typename Op>
ScalarFn pointwise(const ScalarFn& f, const ScalarFn& g, const char* name, Op op) {
  check_same_space(f, g, name);
  std::vector<Rational> vals;
  vals.reserve(f.values().size());
  for (std::size_t i = 0; i < f.values().size(); ++i) vals.push_back(op(f.values()[i], g.values()[i]));
  return ScalarFn(f.space_ptr(), std::move(vals));
}

template <typename Op>
ScalarFn pointwise(const ScalarFn& f, Op op) {
  std::vector<Rational> vals;
  vals.reserve(f.values().size());
  for (const auto& v : f.values()) vals.push_back(op(v));
  return ScalarFn(f.space_ptr(), std::move(vals));
}

}  // namespace

ScalarFn operator+(const ScalarFn& f, const ScalarFn& g) {
  return pointwise(f, g, "add", [](const Rational& a, const Rational& b) { return a + b; });
}

ScalarFn operator-(const ScalarFn& f, const ScalarFn& g) {
  return pointwise(f, g, "sub", [](const Rational& a, const Rational& b) { return a - b; });
}

ScalarFn operator*(const ScalarFn& f, const ScalarFn& g) {
  return pointwise(f, g, "mul", [](const Rational& a, const Rational& b) { return a * b; });
}

ScalarFn operator-(const ScalarFn& f) {
  return pointwise(f, [](const Rational& a) { return -a; });
}

ScalarFn abs(const ScalarFn& f) {
  return pointwise(f, [](const Rational& a) { return a < 0 ? Rational(-a) : a; });
}

ScalarFn pos_part(const ScalarFn& f) {
  return pointwise(f, [](const Rational& a) { return a > 0 ? a : Rational(0); });
}

ScalarFn neg_part(const ScalarFn& f) {
  return pointwise(f, [](const Rational& a) { return a < 0 ? Rational(-a) : Rational(0); });
}

ScalarFn pmin(const ScalarFn& f, const ScalarFn& g) {
  return pointwise(f, g, "pmin", [](const Rational& a, const Rational& b) { return a < b ? a : b; });
}

ScalarFn pmax(const ScalarFn& f, const ScalarFn& g) {
  return pointwise(f, g, "pmax", [](const Rational& a, const Rational& b) { return a > b ? a : b; });
}

bool is_orthogonal(const ScalarFn& f, const ScalarFn& g) {
  check_same_space(f, g, "is_orthogonal");
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (f.values()[i] * g.values()[i] != 0) return false;
  return true;
}

ScalarFn compat_sup(const ScalarFn& f, const ScalarFn& g) {
  if (!is_orthogonal(f, g))
    throw std::invalid_argument("compat_sup: inputs are not orthogonal");
  return f + g;
}

bool pointwise_le(const ScalarFn& f, const ScalarFn& g) {
  check_same_space(f, g, "pointwise_le");
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (f.values()[i] > g.values()[i]) return false;
  return true;
}

std::vector<ScalarFn> enumerate_family(std::shared_ptr<const FiniteSpace> space,
                                       const ValueGrid& grid, unsigned long long cap) {
  require_space(space);
  // Finitely-valued continuous functions are locally constant, hence
  // constant on each connected component; enumerating per-component
  // assignments visits exactly the continuous grid-valued functions.
  const auto components = space->connected_components();
  const auto k = components.size();

  unsigned long long total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / static_cast<unsigned long long>(grid.size()) + 1)
      throw OverflowError("enumerate_family: family too large", 0, cap);
    total *= static_cast<unsigned long long>(grid.size());
  }
  if (total > cap) throw OverflowError("enumerate_family: family too large", total, cap);

  std::vector<ScalarFn> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> choice(k, 0);
  while (true) {
    std::vector<Rational> vals(static_cast<std::size_t>(space->points()));
    for (std::size_t c = 0; c < k; ++c)
      for (int x : components[c].to_indices())
        vals[static_cast<std::size_t>(x)] = grid.value(choice[c]);
    out.emplace_back(space, std::move(vals));
    std::size_t pos = k;
    while (pos > 0 && choice[pos - 1] == grid.size() - 1) choice[--pos] = 0;
    if (pos == 0) break;
    ++choice[pos - 1];
  }

  // Contract: order lexicographically by per-point grid index, i.e. by the
  // value vector under the grid's ascending order.
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const ScalarFn& f) {
  std::string out = "(";
  for (int x = 0; x < f.space().points(); ++x) {
    if (x > 0) out += ",";
    out += format_rational(f.value(x));
  }
  return out + ")";
}

}  // namespace compat
