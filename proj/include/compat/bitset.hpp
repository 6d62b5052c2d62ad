// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace compat {

/// Fixed-width bit vector used for point sets of a finite space and for
/// member sets of a lattice filter.  All set operations are exact and
/// require equal widths.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int width) : width_(check_width(width)), words_(word_count(width), 0) {}

  static Bitset all(int width) {
    Bitset b(width);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset from_indices(int width, std::initializer_list<int> indices) {
    Bitset b(width);
    for (int i : indices) b.set(i);
    return b;
  }

  static Bitset from_indices(int width, const std::vector<int>& indices) {
    Bitset b(width);
    for (int i : indices) b.set(i);
    return b;
  }

  int width() const { return width_; }

  bool test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
  }

  void set(int i, bool value = true) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
      words_[static_cast<std::size_t>(i) / 64] |= mask;
    else
      words_[static_cast<std::size_t>(i) / 64] &= ~mask;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool is_full() const { return count() == width_; }

  Bitset operator|(const Bitset& o) const {
    check_same_width(o);
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }

  Bitset operator&(const Bitset& o) const {
    check_same_width(o);
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  /// Set difference (elements of *this not in o).
  Bitset minus(const Bitset& o) const {
    check_same_width(o);
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  Bitset complement() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  bool is_subset_of(const Bitset& o) const {
    check_same_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    check_same_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const Bitset& o) const = default;

  /// Deterministic total order: width first, then numeric value.
  std::strong_ordering operator<=>(const Bitset& o) const {
    if (auto c = width_ <=> o.width_; c != 0) return c;
    for (std::size_t i = words_.size(); i-- > 0;)
      if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = 0; i < width_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : to_indices()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

 private:
  static int check_width(int width) {
    if (width < 0) throw std::invalid_argument("Bitset: negative width");
    return width;
  }

  static std::size_t word_count(int width) {
    return static_cast<std::size_t>(width + 63) / 64;
  }

  void check_index(int i) const {
    if (i < 0 || i >= width_)
      throw std::invalid_argument("Bitset: index " + std::to_string(i) +
                                  " out of range for width " + std::to_string(width_));
  }

  void check_same_width(const Bitset& o) const {
    if (width_ != o.width_)
      throw std::invalid_argument("Bitset: width mismatch (" + std::to_string(width_) +
                                  " vs " + std::to_string(o.width_) + ")");
  }

  // Clear bits beyond width so equality and popcount stay exact.
  void trim() {
    if (words_.empty()) return;
    const int rem = width_ % 64;
    if (rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace compat
