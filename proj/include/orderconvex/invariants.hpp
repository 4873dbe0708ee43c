#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "orderconvex/convexity.hpp"
#include "orderconvex/extremal.hpp"

namespace orderconvex {

/// A count that may be unavailable, either because the invariant does not apply
/// to the structure or because computing it would exceed a cap.
struct Measure {
  enum class State { Value, NotApplicable, CapExceeded };
  State state = State::NotApplicable;
  std::size_t value = 0;

  static Measure of(std::size_t v) { return {State::Value, v}; }
  static Measure not_applicable() { return {State::NotApplicable, 0}; }
  static Measure cap_exceeded() { return {State::CapExceeded, 0}; }
  bool has_value() const { return state == State::Value; }
  friend bool operator==(const Measure&, const Measure&) = default;
};

/// Join-irredundant: removing any member changes the join. Singletons count.
inline bool is_join_irredundant(const JoinStructure& s, ElementSet f) {
  if (f.size() <= 1) return true;
  const Element j = s.join_of(f);
  for (Element x : f)
    if (s.join_of(f.without(x)) == j) return false;
  return true;
}

/// Largest join-irredundant subset. Irredundant sets are closed under taking
/// subsets, so the search grows them level by level.
inline std::size_t breadth(const JoinStructure& s, const Caps& caps = Caps::defaults()) {
  require_subset_scan(s.size(), caps, "breadth");
  std::vector<ElementSet> level;
  for (Element x = 0; x < s.size(); ++x) level.push_back(ElementSet::singleton(x));
  std::size_t best = level.empty() ? 0 : 1;
  while (!level.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet f : level)
      for (Element y = f.back() + 1; y < s.size(); ++y)
        if (is_join_irredundant(s, f.with(y))) next.push_back(f.with(y));
    if (!next.empty()) best = next.front().size();
    level = std::move(next);
  }
  return best;
}

/// Least b such that every nonempty F has a subset G with |G| <= b and the same join.
/// Reference implementation of the definition; exponential in n.
inline std::size_t breadth_by_definition(const JoinStructure& s, const Caps& caps = Caps::defaults()) {
  require_subset_scan(s.size(), caps, "breadth_by_definition");
  std::size_t b = 0;
  for_each_subset(s.carrier(), [&](ElementSet f) {
    if (f.empty()) return;
    const Element j = s.join_of(f);
    for (std::size_t g = 1; g <= f.size(); ++g) {
      bool found = !for_each_subset_of_size_while(f, g, [&](ElementSet sub) { return s.join_of(sub) != j; });
      if (found) {
        b = std::max(b, g);
        break;
      }
    }
  });
  return b;
}

/// Largest free set: a convex K with K = ex K.
inline std::size_t clique_number(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  std::size_t best = 0;
  for (ElementSet k : enumerate_convex_sets(cs, caps))
    if (k.size() > best && extreme_points(cs, k) == k) best = k.size();
  return best;
}

/// Least c >= 1 with hull(A) equal to the union of hulls of the subsets of A with at most c elements.
inline std::size_t caratheodory(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  require_subset_scan(cs.size(), caps, "caratheodory");
  std::size_t c = 1;
  for_each_subset(cs.carrier(), [&](ElementSet a) {
    if (a.size() <= c) return;
    const ElementSet target = hull(cs, a);
    // Union over subsets of size exactly c' covers all smaller ones (hull is monotone).
    for (std::size_t size = c; size < a.size(); ++size) {
      ElementSet covered;
      for_each_subset_of_size_while(a, size, [&](ElementSet f) {
        covered |= hull(cs, f);
        return covered != target;
      });
      if (covered == target) return;
      c = size + 1;
    }
  });
  return c;
}

/// Helly-independent: the hulls of A \ {a}, a in A, have empty common intersection.
inline bool is_helly_independent(const ConvexitySpace& cs, ElementSet a) {
  if (a.empty()) return false;
  ElementSet common = cs.carrier();
  for (Element x : a) {
    common &= hull(cs, a.without(x));
    if (common.empty()) return true;
  }
  return common.empty();
}

/// Largest Helly-independent set.
inline std::size_t helly(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  require_subset_scan(cs.size(), caps, "helly");
  std::size_t best = 0;
  for_each_subset(cs.carrier(), [&](ElementSet a) {
    if (a.size() > best && is_helly_independent(cs, a)) best = a.size();
  });
  return best;
}

/// Helly number straight from the definition: the largest m for which some m
/// convex sets have empty intersection while every m-1 of them meet. Searched
/// over families of at most max_family members of the enumerated convexity.
inline std::size_t helly_by_families(const ConvexitySpace& cs, std::size_t max_family,
                                     const Caps& caps = Caps::defaults()) {
  const std::vector<ElementSet> family = enumerate_convex_sets(cs, caps);
  const ElementSet all = cs.carrier();
  std::size_t best = 0;
  std::vector<ElementSet> chosen;
  // Depth-first over increasing index tuples. A critical family has every proper
  // subfamily meeting, so a prefix with empty intersection is tested but never
  // extended, and a set containing the prefix's intersection is never added (the
  // family would keep meeting without the other members).
  auto critical = [&]() {
    for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
      ElementSet rest = all;
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (i != skip) rest &= chosen[i];
      if (rest.empty()) return false;
    }
    return true;
  };
  std::size_t steps = 0;
  auto rec = [&](auto&& self, std::size_t from, ElementSet meet) -> void {
    if (!chosen.empty() && meet.empty()) {
      if (chosen.size() > best && critical()) best = chosen.size();
      return;
    }
    if (chosen.size() == max_family) return;
    for (std::size_t i = from; i < family.size(); ++i) {
      if (meet.is_subset_of(family[i])) continue;
      if (++steps > caps.family_pairs) throw CapExceeded("helly_by_families search", best);
      chosen.push_back(family[i]);
      self(self, i + 1, meet & family[i]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, all);
  return best;
}

struct Rank {
  std::size_t rank = 0;
  /// The rank is meaningful for distributive semilattices; reported for the caller's warning.
  bool distributive = false;
  friend bool operator==(const Rank&, const Rank&) = default;
};

/// Number of non-bottom extreme points of S under its algebraic convexity.
inline Rank rank(const JoinStructure& s) {
  auto bottom = s.bottom();
  if (!bottom) throw Error(ErrorCode::NoBottom, "rank needs a least element");
  return {coirreducible_in(s, s.carrier()).without(*bottom).size(), is_distributive_semilattice(s)};
}

struct InvariantProfile {
  Measure breadth, depth, clique_number, rank, caratheodory, helly;
  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

namespace detail {
template <typename F>
Measure measure(F&& f) {
  try {
    return Measure::of(f());
  } catch (const CapExceeded&) {
    return Measure::cap_exceeded();
  }
}
}  // namespace detail

/// All invariants of one convexity space; each field fails independently.
inline InvariantProfile invariant_profile(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  InvariantProfile r;
  if (cs.has_structure()) {
    r.breadth = detail::measure([&] { return breadth(cs.structure(), caps); });
    if (cs.structure().bottom()) r.rank = Measure::of(rank(cs.structure()).rank);
  }
  r.depth = Measure::of(depth(cs.poset()));
  r.clique_number = detail::measure([&] { return clique_number(cs, caps); });
  r.caratheodory = detail::measure([&] { return caratheodory(cs, caps); });
  r.helly = detail::measure([&] { return helly(cs, caps); });
  return r;
}

}  // namespace orderconvex
