// Copyright (c) 2026 the compat authors
// SPDX-License-Identifier: Apache-2.0

#include "compat/space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace compat {

namespace {

std::vector<PointSet> normalize_family(int n, std::vector<PointSet> opens) {
  for (const auto& s : opens)
    if (s.width() != n)
      throw std::invalid_argument("FiniteSpace: open set width " + std::to_string(s.width()) +
                                  " does not match point count " + std::to_string(n));
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return opens;
}

}  // namespace

FiniteSpace::FiniteSpace(int point_count, std::vector<PointSet> opens)
    : n_(point_count), opens_(normalize_family(point_count, std::move(opens))) {
  if (n_ < 0) throw std::invalid_argument("FiniteSpace: negative point count");
  if (!std::binary_search(opens_.begin(), opens_.end(), empty_set()))
    throw std::invalid_argument("FiniteSpace: empty set missing from the topology");
  if (!std::binary_search(opens_.begin(), opens_.end(), full_set()))
    throw std::invalid_argument("FiniteSpace: full set missing from the topology");
  for (std::size_t i = 0; i < opens_.size(); ++i)
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!is_open(opens_[i] | opens_[j]))
        throw std::invalid_argument("FiniteSpace: family not closed under union: " +
                                    opens_[i].to_string() + " | " + opens_[j].to_string());
      if (!is_open(opens_[i] & opens_[j]))
        throw std::invalid_argument("FiniteSpace: family not closed under intersection: " +
                                    opens_[i].to_string() + " & " + opens_[j].to_string());
    }
  minimal_open_.reserve(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    PointSet m = full_set();
    for (const auto& u : opens_)
      if (u.test(x)) m = m & u;
    minimal_open_.push_back(m);
  }
}

FiniteSpace FiniteSpace::discrete(int point_count) {
  std::vector<PointSet> opens;
  opens.reserve(std::size_t{1} << point_count);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << point_count); ++mask) {
    PointSet s(point_count);
    for (int i = 0; i < point_count; ++i)
      if (mask >> i & 1) s.set(i);
    opens.push_back(s);
  }
  return FiniteSpace(point_count, std::move(opens));
}

FiniteSpace FiniteSpace::indiscrete(int point_count) {
  return FiniteSpace(point_count, {PointSet(point_count), PointSet::all(point_count)});
}

FiniteSpace FiniteSpace::sierpinski() {
  return FiniteSpace(2, {PointSet(2), PointSet::from_indices(2, {0}), PointSet::all(2)});
}

FiniteSpace FiniteSpace::disjoint_union(const FiniteSpace& a, const FiniteSpace& b) {
  const int n = a.points() + b.points();
  std::vector<PointSet> opens;
  for (const auto& u : a.opens())
    for (const auto& v : b.opens()) {
      PointSet s(n);
      for (int i : u.to_indices()) s.set(i);
      for (int i : v.to_indices()) s.set(a.points() + i);
      opens.push_back(s);
    }
  return FiniteSpace(n, std::move(opens));
}

void FiniteSpace::check_member(const PointSet& s) const {
  if (s.width() != n_)
    throw std::invalid_argument("FiniteSpace: point set width " + std::to_string(s.width()) +
                                " does not match point count " + std::to_string(n_));
}

bool FiniteSpace::is_open(const PointSet& s) const {
  check_member(s);
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

bool FiniteSpace::is_closed(const PointSet& s) const { return is_open(s.complement()); }

std::vector<PointSet> FiniteSpace::clopens() const {
  std::vector<PointSet> out;
  for (const auto& u : opens_)
    if (is_closed(u)) out.push_back(u);
  return out;
}

PointSet FiniteSpace::interior(const PointSet& s) const {
  check_member(s);
  PointSet r(n_);
  for (const auto& u : opens_)
    if (u.is_subset_of(s)) r = r | u;
  return r;
}

PointSet FiniteSpace::closure(const PointSet& s) const {
  return interior(s.complement()).complement();
}

PointSet FiniteSpace::boundary(const PointSet& s) const {
  return closure(s).minus(interior(s));
}

bool FiniteSpace::is_regular_open(const PointSet& s) const {
  return s == interior(closure(s));
}

bool FiniteSpace::is_regular_closed(const PointSet& s) const {
  return s == closure(interior(s));
}

const PointSet& FiniteSpace::minimal_open(int x) const {
  if (x < 0 || x >= n_)
    throw std::invalid_argument("FiniteSpace: point " + std::to_string(x) + " out of range");
  return minimal_open_[static_cast<std::size_t>(x)];
}

bool FiniteSpace::specializes(int x, int y) const {
  // x in cl{y}  <=>  every open around x contains y  <=>  y in minimal_open(x).
  return minimal_open(x).test(y);
}

std::vector<PointSet> FiniteSpace::connected_components() const {
  // Two points sharing a specialization relation lie in one component, and
  // the classes of the generated equivalence are clopen, so they are
  // exactly the components.
  std::vector<int> cls(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int x = 0; x < n_; ++x) {
    if (cls[static_cast<std::size_t>(x)] != -1) continue;
    std::vector<int> stack{x};
    cls[static_cast<std::size_t>(x)] = next;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (int q = 0; q < n_; ++q) {
        if (cls[static_cast<std::size_t>(q)] != -1) continue;
        if (specializes(p, q) || specializes(q, p)) {
          cls[static_cast<std::size_t>(q)] = next;
          stack.push_back(q);
        }
      }
    }
    ++next;
  }
  std::vector<PointSet> classes(static_cast<std::size_t>(next), PointSet(n_));
  for (int x = 0; x < n_; ++x) classes[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])].set(x);
  return classes;
}

std::vector<PointSet> FiniteSpace::quasicomponents() const {
  const auto clo = clopens();
  std::map<std::vector<bool>, PointSet> classes;
  std::vector<std::vector<bool>> order;
  for (int x = 0; x < n_; ++x) {
    std::vector<bool> sig;
    sig.reserve(clo.size());
    for (const auto& c : clo) sig.push_back(c.test(x));
    auto [it, fresh] = classes.try_emplace(sig, PointSet(n_));
    it->second.set(x);
    if (fresh) order.push_back(sig);
  }
  std::vector<PointSet> out;
  out.reserve(order.size());
  for (const auto& sig : order) out.push_back(classes.at(sig));
  return out;
}

bool FiniteSpace::is_connected_subspace(const PointSet& s) const {
  check_member(s);
  if (s.none()) return true;
  for (const auto& u : opens_) {
    const PointSet a = u & s;
    if (a.none() || a == s) continue;
    for (const auto& v : opens_) {
      const PointSet b = v & s;
      if (b.none()) continue;
      if (!a.intersects(b) && (a | b) == s) return false;
    }
  }
  return true;
}

bool FiniteSpace::is_discrete() const {
  return opens_.size() == (std::size_t{1} << n_);
}

SpaceMap::SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != source_.points())
    throw std::invalid_argument("SpaceMap: assignment not total on source points");
  for (int y : assignment_)
    if (y < 0 || y >= target_.points())
      throw std::invalid_argument("SpaceMap: assigned point " + std::to_string(y) +
                                  " outside the target space");
}

SpaceMap SpaceMap::identity(const FiniteSpace& space) {
  std::vector<int> id(static_cast<std::size_t>(space.points()));
  std::iota(id.begin(), id.end(), 0);
  return SpaceMap(space, space, std::move(id));
}

PointSet SpaceMap::image(const PointSet& s) const {
  if (s.width() != source_.points())
    throw std::invalid_argument("SpaceMap: image of a set from the wrong space");
  PointSet r(target_.points());
  for (int x : s.to_indices()) r.set(apply(x));
  return r;
}

PointSet SpaceMap::preimage(const PointSet& s) const {
  if (s.width() != target_.points())
    throw std::invalid_argument("SpaceMap: preimage of a set from the wrong space");
  PointSet r(source_.points());
  for (int x = 0; x < source_.points(); ++x)
    if (s.test(apply(x))) r.set(x);
  return r;
}

bool SpaceMap::is_continuous() const {
  for (const auto& v : target_.opens())
    if (!source_.is_open(preimage(v))) return false;
  return true;
}

bool SpaceMap::is_open_map() const {
  for (const auto& u : source_.opens())
    if (!target_.is_open(image(u))) return false;
  return true;
}

bool SpaceMap::is_bijective() const {
  if (source_.points() != target_.points()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(target_.points()), false);
  for (int y : assignment_) {
    if (hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = true;
  }
  return true;
}

bool SpaceMap::is_surjective() const {
  std::vector<bool> hit(static_cast<std::size_t>(target_.points()), false);
  for (int y : assignment_) hit[static_cast<std::size_t>(y)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool SpaceMap::is_homeomorphism() const {
  return is_bijective() && is_continuous() && is_open_map();
}

SpaceMap SpaceMap::then(const SpaceMap& other) const {
  if (!(target_ == other.source_))
    throw std::invalid_argument("SpaceMap: composition over mismatched spaces");
  std::vector<int> comp(assignment_.size());
  for (std::size_t i = 0; i < assignment_.size(); ++i)
    comp[i] = other.apply(assignment_[i]);
  return SpaceMap(source_, other.target_, std::move(comp));
}

SpaceMap SpaceMap::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("SpaceMap: inverse of a non-bijection");
  std::vector<int> inv(assignment_.size());
  for (std::size_t i = 0; i < assignment_.size(); ++i)
    inv[static_cast<std::size_t>(assignment_[i])] = static_cast<int>(i);
  return SpaceMap(target_, source_, std::move(inv));
}

namespace {

void require_regular_open(const FiniteSpace& space, const PointSet& s, const char* which) {
  if (!space.is_regular_open(s))
    throw std::invalid_argument(std::string(which) + " " + s.to_string() +
                                " is not regularly open");
}

void require_regular_closed(const FiniteSpace& space, const PointSet& s, const char* which) {
  if (!space.is_regular_closed(s))
    throw std::invalid_argument(std::string(which) + " " + s.to_string() +
                                " is not regularly closed");
}

}  // namespace

PointSet ro_join(const FiniteSpace& space, const PointSet& u, const PointSet& v) {
  require_regular_open(space, u, "ro_join: first argument");
  require_regular_open(space, v, "ro_join: second argument");
  return space.interior(space.closure(u | v));
}

PointSet ro_meet(const FiniteSpace& space, const PointSet& u, const PointSet& v) {
  require_regular_open(space, u, "ro_meet: first argument");
  require_regular_open(space, v, "ro_meet: second argument");
  return u & v;
}

PointSet rc_join(const FiniteSpace& space, const PointSet& f, const PointSet& g) {
  require_regular_closed(space, f, "rc_join: first argument");
  require_regular_closed(space, g, "rc_join: second argument");
  return f | g;
}

PointSet rc_meet(const FiniteSpace& space, const PointSet& f, const PointSet& g) {
  require_regular_closed(space, f, "rc_meet: first argument");
  require_regular_closed(space, g, "rc_meet: second argument");
  return space.closure(space.interior(f & g));
}

std::pair<FiniteSpace, SpaceMap> component_quotient(const FiniteSpace& space) {
  const auto classes = space.connected_components();
  const int k = static_cast<int>(classes.size());
  std::vector<int> cls(static_cast<std::size_t>(space.points()));
  for (int c = 0; c < k; ++c)
    for (int x : classes[static_cast<std::size_t>(c)].to_indices())
      cls[static_cast<std::size_t>(x)] = c;

  // A set of classes is open iff its preimage is open.
  std::vector<PointSet> opens;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    PointSet pre(space.points());
    PointSet w(k);
    for (int c = 0; c < k; ++c)
      if (mask >> c & 1) {
        w.set(c);
        pre = pre | classes[static_cast<std::size_t>(c)];
      }
    if (space.is_open(pre)) opens.push_back(w);
  }
  FiniteSpace quotient(k, std::move(opens));
  SpaceMap q(space, quotient, std::move(cls));
  return {std::move(quotient), std::move(q)};
}

namespace {

struct PointSignature {
  int minimal_open_size;
  int point_closure_size;
  int opens_containing;

  auto operator<=>(const PointSignature&) const = default;
};

PointSignature signature_of(const FiniteSpace& s, int x) {
  PointSet single(s.points());
  single.set(x);
  int containing = 0;
  for (const auto& u : s.opens())
    if (u.test(x)) ++containing;
  return {s.minimal_open(x).count(), s.closure(single).count(), containing};
}

// Verifies that the bijection carries opens onto opens exactly.
bool opens_map_onto_opens(const SpaceMap& m) {
  if (!m.is_bijective()) return false;
  if (m.source().opens().size() != m.target().opens().size()) return false;
  for (const auto& u : m.source().opens())
    if (!m.target().is_open(m.image(u))) return false;
  return true;
}

bool extend_assignment(const FiniteSpace& a, const FiniteSpace& b,
                       const std::vector<PointSignature>& sig_a,
                       const std::vector<PointSignature>& sig_b, std::vector<int>& assign,
                       std::vector<bool>& used, int x) {
  const int n = a.points();
  if (x == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[static_cast<std::size_t>(y)]) continue;
    if (sig_a[static_cast<std::size_t>(x)] != sig_b[static_cast<std::size_t>(y)]) continue;
    bool ok = true;
    for (int p = 0; p < x && ok; ++p) {
      const int q = assign[static_cast<std::size_t>(p)];
      ok = a.specializes(x, p) == b.specializes(y, q) &&
           a.specializes(p, x) == b.specializes(q, y);
    }
    if (!ok) continue;
    assign[static_cast<std::size_t>(x)] = y;
    used[static_cast<std::size_t>(y)] = true;
    if (extend_assignment(a, b, sig_a, sig_b, assign, used, x + 1)) return true;
    used[static_cast<std::size_t>(y)] = false;
  }
  return false;
}

}  // namespace

std::optional<SpaceMap> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.points() != b.points()) return std::nullopt;
  if (a.opens().size() != b.opens().size()) return std::nullopt;
  const int n = a.points();

  std::vector<PointSignature> sig_a, sig_b;
  for (int x = 0; x < n; ++x) sig_a.push_back(signature_of(a, x));
  for (int y = 0; y < n; ++y) sig_b.push_back(signature_of(b, y));
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (!extend_assignment(a, b, sig_a, sig_b, assign, used, 0)) return std::nullopt;

  SpaceMap candidate(a, b, std::move(assign));
  if (!opens_map_onto_opens(candidate)) return std::nullopt;
  return candidate;
}

std::vector<FiniteSpace> all_topologies(int point_count) {
  if (point_count < 0 || point_count > 5)
    throw std::invalid_argument("all_topologies: point count must be between 0 and 5");
  const int n = point_count;

  // Finite topologies correspond to preorders: the opens of the associated
  // Alexandrov topology are the up-closed sets.
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);

  std::vector<FiniteSpace> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << offdiag.size()); ++mask) {
    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (mask >> k & 1)
        rel[static_cast<std::size_t>(offdiag[k].first)][static_cast<std::size_t>(offdiag[k].second)] = true;

    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j) {
        if (!rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
        for (int k = 0; k < n; ++k)
          if (rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
              !rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;

    std::vector<PointSet> opens;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
      bool up_closed = true;
      for (int i = 0; i < n && up_closed; ++i) {
        if (!(sub >> i & 1)) continue;
        for (int j = 0; j < n; ++j)
          if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && !(sub >> j & 1)) {
            up_closed = false;
            break;
          }
      }
      if (!up_closed) continue;
      PointSet s(n);
      for (int i = 0; i < n; ++i)
        if (sub >> i & 1) s.set(i);
      opens.push_back(s);
    }
    out.emplace_back(n, std::move(opens));
  }
  return out;
}

std::vector<FiniteSpace> topologies_up_to_homeomorphism(int point_count) {
  std::vector<FiniteSpace> reps;
  for (const auto& t : all_topologies(point_count)) {
    bool fresh = true;
    for (const auto& r : reps)
      if (find_homeomorphism(t, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(t);
  }
  return reps;
}

}  // namespace compat
