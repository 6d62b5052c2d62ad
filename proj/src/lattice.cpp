// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace compat {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::RO: return "regular-open";
    case Provenance::RC: return "regular-closed";
    case Provenance::ZeroSets: return "zero-sets";
    case Provenance::Supports: return "supports";
    case Provenance::Abstract: return "abstract";
  }
  throw std::logic_error("unknown provenance");
}

FiniteLattice::FiniteLattice(std::vector<std::vector<int>> join_table,
                             std::vector<std::vector<int>> meet_table,
                             std::vector<std::string> labels)
    : join_(std::move(join_table)), meet_(std::move(meet_table)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != join_.size())
    throw std::invalid_argument("FiniteLattice: label count differs from element count");
  validate();
}

void FiniteLattice::validate() const {
  const int m = static_cast<int>(join_.size());
  if (m == 0) throw std::invalid_argument("FiniteLattice: empty");
  if (meet_.size() != join_.size())
    throw std::invalid_argument("FiniteLattice: table sizes differ");
  for (const auto* table : {&join_, &meet_})
    for (const auto& row : *table) {
      if (static_cast<int>(row.size()) != m)
        throw std::invalid_argument("FiniteLattice: table is not square");
      for (int v : row)
        if (v < 0 || v >= m) throw std::invalid_argument("FiniteLattice: table entry out of range");
    }

  const auto J = [&](int a, int b) { return join_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  const auto M = [&](int a, int b) { return meet_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  for (int a = 0; a < m; ++a) {
    if (J(a, a) != a || M(a, a) != a)
      throw std::invalid_argument("FiniteLattice: operations are not idempotent");
    for (int b = 0; b < m; ++b) {
      if (J(a, b) != J(b, a) || M(a, b) != M(b, a))
        throw std::invalid_argument("FiniteLattice: operations are not commutative");
      if (J(a, M(a, b)) != a || M(a, J(a, b)) != a)
        throw std::invalid_argument("FiniteLattice: absorption fails");
      if ((M(a, b) == a) != (J(a, b) == b))
        throw std::invalid_argument("FiniteLattice: meet and join induce different orders");
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (J(J(a, b), c) != J(a, J(b, c)) || M(M(a, b), c) != M(a, M(b, c)))
          throw std::invalid_argument("FiniteLattice: operations are not associative");
        if (M(a, J(b, c)) != J(M(a, b), M(a, c)))
          throw std::invalid_argument("FiniteLattice: meet does not distribute over join");
        if (J(a, M(b, c)) != M(J(a, b), J(a, c)))
          throw std::invalid_argument("FiniteLattice: join does not distribute over meet");
      }

  int bottom = 0;
  int top = 0;
  for (int a = 1; a < m; ++a) {
    bottom = M(bottom, a);
    top = J(top, a);
  }
  for (int a = 0; a < m; ++a)
    if (J(bottom, a) != a || M(top, a) != a)
      throw std::invalid_argument("FiniteLattice: bottom/top are not neutral");
  const_cast<FiniteLattice*>(this)->bottom_ = bottom;
  const_cast<FiniteLattice*>(this)->top_ = top;
}

int FiniteLattice::index_of(const PointSet& s) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
  if (it == elements_.end() || *it != s)
    throw std::invalid_argument("FiniteLattice: " + s.to_string() + " is not an element");
  return static_cast<int>(it - elements_.begin());
}

std::string FiniteLattice::label(int i) const {
  check(i);
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(i)];
  if (is_set_based()) return elements_[static_cast<std::size_t>(i)].to_string();
  return std::to_string(i);
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  const int m = size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < m && covered; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

bool FiniteLattice::operator==(const FiniteLattice& o) const {
  return join_ == o.join_ && meet_ == o.meet_ && elements_ == o.elements_;
}

FiniteLattice lattice_from_ro(const FiniteSpace& space) {
  const int n = space.points();
  if (n > 20) throw std::invalid_argument("lattice_from_ro: space too large to enumerate subsets");
  std::vector<PointSet> elems;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    PointSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1ULL << i)) s.set(i);
    if (space.is_regular_open(s)) elems.push_back(s);
  }
  return FiniteLattice::from_sets(
      Provenance::RO, std::move(elems),
      [&](const PointSet& a, const PointSet& b) { return ro_join(space, a, b); },
      [&](const PointSet& a, const PointSet& b) { return ro_meet(space, a, b); });
}

FiniteLattice lattice_from_rc(const FiniteSpace& space) {
  const int n = space.points();
  if (n > 20) throw std::invalid_argument("lattice_from_rc: space too large to enumerate subsets");
  std::vector<PointSet> elems;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    PointSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1ULL << i)) s.set(i);
    if (space.is_regular_closed(s)) elems.push_back(s);
  }
  return FiniteLattice::from_sets(
      Provenance::RC, std::move(elems),
      [&](const PointSet& a, const PointSet& b) { return rc_join(space, a, b); },
      [&](const PointSet& a, const PointSet& b) { return rc_meet(space, a, b); });
}

FiniteLattice zero_lattice(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid,
                           unsigned long long cap) {
  std::vector<PointSet> elems;
  for (const ScalarFn& f : enumerate_family(space, grid, cap)) elems.push_back(regular_zero_set(f));
  const FiniteSpace& sp = *space;
  return FiniteLattice::from_sets(
      Provenance::ZeroSets, std::move(elems),
      [&sp](const PointSet& a, const PointSet& b) { return rc_join(sp, a, b); },
      [&sp](const PointSet& a, const PointSet& b) { return rc_meet(sp, a, b); });
}

FiniteLattice support_lattice(std::shared_ptr<const FiniteSpace> space, const ValueGrid& grid,
                              unsigned long long cap) {
  std::vector<PointSet> elems;
  for (const ScalarFn& f : enumerate_family(space, grid, cap)) elems.push_back(open_support(f));
  const FiniteSpace& sp = *space;
  return FiniteLattice::from_sets(
      Provenance::Supports, std::move(elems),
      [&sp](const PointSet& a, const PointSet& b) { return ro_join(sp, a, b); },
      [&sp](const PointSet& a, const PointSet& b) { return ro_meet(sp, a, b); });
}

FiniteLattice chain_lattice(int size) {
  if (size <= 0) throw std::invalid_argument("chain_lattice: size must be positive");
  const auto m = static_cast<std::size_t>(size);
  std::vector<std::vector<int>> join(m, std::vector<int>(m));
  std::vector<std::vector<int>> meet(m, std::vector<int>(m));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::max(a, b);
      meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a, b);
    }
  return FiniteLattice(std::move(join), std::move(meet));
}

Filter::Filter(LatticePtr lattice, Bitset members)
    : lattice_(std::move(lattice)), members_(std::move(members)) {
  if (!lattice_) throw std::invalid_argument("Filter: null lattice");
  if (members_.width() != lattice_->size())
    throw std::invalid_argument("Filter: member set width differs from lattice size");
}

bool Filter::is_filter() const {
  const auto& lat = *lattice_;
  if (members_.none() || members_.is_full()) return false;
  for (int a : members_.to_indices()) {
    for (int b = 0; b < lat.size(); ++b)
      if (lat.leq(a, b) && !members_.test(b)) return false;
    for (int b : members_.to_indices())
      if (!members_.test(lat.meet(a, b))) return false;
  }
  return true;
}

bool Filter::is_prime() const {
  if (!is_filter()) return false;
  const auto& lat = *lattice_;
  for (int a = 0; a < lat.size(); ++a)
    for (int b = a; b < lat.size(); ++b)
      if (members_.test(lat.join(a, b)) && !members_.test(a) && !members_.test(b)) return false;
  return true;
}

namespace {

// Filter generated by the element set: close under meets, then upward.
Bitset generated_filter(const FiniteLattice& lat, Bitset seed) {
  bool grew = true;
  while (grew) {
    grew = false;
    const auto idx = seed.to_indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i; j < idx.size(); ++j) {
        const int mv = lat.meet(idx[i], idx[j]);
        if (!seed.test(mv)) {
          seed.set(mv);
          grew = true;
        }
      }
    for (int a : seed.to_indices())
      for (int b = 0; b < lat.size(); ++b)
        if (lat.leq(a, b) && !seed.test(b)) {
          seed.set(b);
          grew = true;
        }
  }
  return seed;
}

}  // namespace

bool Filter::is_ultrafilter() const {
  if (!is_filter()) return false;
  const auto& lat = *lattice_;
  for (int x = 0; x < lat.size(); ++x) {
    if (members_.test(x)) continue;
    Bitset extended = members_;
    extended.set(x);
    if (!generated_filter(lat, extended).is_full()) return false;
  }
  return true;
}

Filter principal_filter(LatticePtr lattice, int a) {
  if (!lattice) throw std::invalid_argument("principal_filter: null lattice");
  Bitset members(lattice->size());
  for (int b = 0; b < lattice->size(); ++b)
    if (lattice->leq(a, b)) members.set(b);
  return Filter(std::move(lattice), std::move(members));
}

std::vector<Filter> all_filters(LatticePtr lattice) {
  if (!lattice) throw std::invalid_argument("all_filters: null lattice");
  std::vector<Filter> out;
  for (int a = 0; a < lattice->size(); ++a) {
    if (a == lattice->bottom()) continue;
    out.push_back(principal_filter(lattice, a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Filter> all_prime_filters(LatticePtr lattice) {
  std::vector<Filter> out;
  for (const Filter& f : all_filters(std::move(lattice)))
    if (f.is_prime()) out.push_back(f);
  return out;
}

std::vector<Filter> all_ultrafilters(LatticePtr lattice) {
  std::vector<Filter> out;
  for (const Filter& f : all_filters(std::move(lattice)))
    if (f.is_ultrafilter()) out.push_back(f);
  return out;
}

bool is_prime_filter(const Filter& filter) { return filter.is_prime(); }

namespace {

SpectrumSpace build_spectrum(LatticePtr lattice, std::vector<Filter> carrier, SpectrumBase base) {
  const int n = static_cast<int>(carrier.size());
  std::vector<Bitset> base_sets;
  base_sets.reserve(static_cast<std::size_t>(lattice->size()));
  for (int a = 0; a < lattice->size(); ++a) {
    Bitset u(n);
    for (int i = 0; i < n; ++i) {
      const bool in = carrier[static_cast<std::size_t>(i)].contains(a);
      if (base == SpectrumBase::Standard ? !in : in) u.set(i);
    }
    base_sets.push_back(std::move(u));
  }

  std::set<Bitset> opens(base_sets.begin(), base_sets.end());
  opens.insert(Bitset(n));
  opens.insert(Bitset::all(n));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Bitset> snapshot(opens.begin(), opens.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (opens.insert(snapshot[i] | snapshot[j]).second) grew = true;
        if (opens.insert(snapshot[i] & snapshot[j]).second) grew = true;
      }
  }

  FiniteSpace topology(n, std::vector<Bitset>(opens.begin(), opens.end()));
  return SpectrumSpace(std::move(lattice), std::move(carrier), std::move(topology),
                       std::move(base_sets), base);
}

}  // namespace

SpectrumSpace spectrum(LatticePtr lattice, SpectrumBase base) {
  auto carrier = all_prime_filters(lattice);
  return build_spectrum(std::move(lattice), std::move(carrier), base);
}

SpectrumSpace ult_space(LatticePtr lattice, SpectrumBase base) {
  auto carrier = all_ultrafilters(lattice);
  return build_spectrum(std::move(lattice), std::move(carrier), base);
}

namespace {

void check_bijection(const std::vector<int>& map, const FiniteLattice& a, const FiniteLattice& b) {
  if (static_cast<int>(map.size()) != a.size() || a.size() != b.size())
    throw std::invalid_argument("lattice map: size mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(b.size()), false);
  for (int v : map) {
    if (v < 0 || v >= b.size() || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("lattice map: not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

bool is_lattice_isomorphism(const std::vector<int>& map, const FiniteLattice& a,
                            const FiniteLattice& b) {
  check_bijection(map, a, b);
  const auto at = [&](int i) { return map[static_cast<std::size_t>(i)]; };
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (at(a.join(x, y)) != b.join(at(x), at(y)) || at(a.meet(x, y)) != b.meet(at(x), at(y)))
        return false;
  return true;
}

bool order_iso_is_lattice_iso(const std::vector<int>& map, const FiniteLattice& a,
                              const FiniteLattice& b) {
  check_bijection(map, a, b);
  const auto at = [&](int i) { return map[static_cast<std::size_t>(i)]; };
  bool order_iso = true;
  // Both directions: a bijection preserving order one way need not be an
  // order isomorphism.
  for (int x = 0; x < a.size() && order_iso; ++x)
    for (int y = 0; y < a.size() && order_iso; ++y)
      if (a.leq(x, y) != b.leq(at(x), at(y))) order_iso = false;
  if (order_iso != is_lattice_isomorphism(map, a, b))
    throw std::logic_error("order_iso_is_lattice_iso: order and operation checks disagree");
  return order_iso;
}

}  // namespace compat
