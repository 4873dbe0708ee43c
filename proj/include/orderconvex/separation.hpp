#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orderconvex/convexity.hpp"
#include "orderconvex/report.hpp"

namespace orderconvex {

struct Halfspace {
  ElementSet set;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Convex sets whose complement is convex, including the empty set and the carrier.
inline std::vector<Halfspace> halfspaces(const ConvexitySpace& cs, const std::vector<ElementSet>& family) {
  std::vector<Halfspace> out;
  for (ElementSet c : family)
    if (family_contains(family, c.complement(cs.size()))) out.push_back({c});
  return out;
}

inline std::vector<Halfspace> halfspaces(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  return halfspaces(cs, enumerate_convex_sets(cs, caps));
}

struct SeparationProfile {
  std::array<bool, 5> s{true, true, true, true, true};
  std::array<std::optional<Witness>, 5> witness;
  friend bool operator==(const SeparationProfile&, const SeparationProfile&) = default;
};

/// S0..S4 by exhaustive quantification over points, the convex family and the halfspaces.
inline SeparationProfile separation_profile(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  const std::vector<ElementSet> family = enumerate_convex_sets(cs, caps);
  const std::vector<Halfspace> hs = halfspaces(cs, family);
  const std::size_t n = cs.size();
  if (family.size() * family.size() > caps.family_pairs)
    throw CapExceeded("separation_profile over " + std::to_string(family.size()) + " convex sets", family.size());
  SeparationProfile r;
  auto fail = [&](int i, Witness w) {
    if (r.s[i]) r.witness[i] = std::move(w);
    r.s[i] = false;
  };
  std::vector<ElementSet> point_hull(n);
  for (Element x = 0; x < n; ++x) point_hull[x] = hull(cs, ElementSet::singleton(x));

  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      // S0: some convex set holds exactly one of them; the smallest candidates are the point hulls.
      if (r.s[0] && point_hull[x].contains(y) && point_hull[y].contains(x))
        fail(0, Witness{"no convex set distinguishes the points", {}, {}}.point("x", x).point("y", y));
      // S2: a halfspace containing x whose complement contains y (complements of halfspaces are halfspaces).
      if (r.s[2]) {
        bool separated = false;
        for (const Halfspace& h : hs)
          if (h.set.contains(x) != h.set.contains(y)) {
            separated = true;
            break;
          }
        if (!separated) fail(2, Witness{"no complementary halfspaces separate the points", {}, {}}.point("x", x).point("y", y));
      }
    }

  for (Element x = 0; x < n; ++x)
    if (point_hull[x] != ElementSet::singleton(x)) {
      fail(1, Witness{"singleton is not convex", {}, {}}.point("x", x));
      break;
    }

  for (ElementSet c : family) {
    ElementSet meet = cs.carrier();
    for (const Halfspace& h : hs)
      if (c.is_subset_of(h.set)) meet &= h.set;
    if (meet != c) {
      fail(3, Witness{"convex set is not an intersection of halfspaces", {}, {}}.set("C", c).set("halfspace hull", meet));
      break;
    }
  }

  for (std::size_t i = 0; i < family.size() && r.s[4]; ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const ElementSet c = family[i], d = family[j];
      if (c.intersects(d)) continue;
      bool separated = false;
      for (const Halfspace& h : hs)
        if (c.is_subset_of(h.set) && !d.intersects(h.set)) {
          separated = true;
          break;
        }
      if (!separated) {
        fail(4, Witness{"disjoint convex sets admit no complementary halfspaces", {}, {}}.set("C", c).set("D", d));
        break;
      }
    }
  return r;
}

/// Separating 0/1 join-morphism for an upper set A and a point x outside it:
/// the indicator of the complement of down(x). Returned as its support.
inline ElementSet separate_upper(const JoinStructure& s, ElementSet a, Element x) {
  if (!is_up_set(s.poset(), a)) throw Error(ErrorCode::NotUpperSet, "A is not an upper set");
  if (a.contains(x)) throw Error(ErrorCode::PointInA, "'" + s.name(x) + "' lies in A");
  return s.carrier() - s.poset().down(x);
}

/// phi(y + z) = max(phi(y), phi(z)) for the indicator of `support`.
inline bool is_join_morphism_indicator(const JoinStructure& s, ElementSet support) {
  for (Element y = 0; y < s.size(); ++y)
    for (Element z = y; z < s.size(); ++z)
      if (support.contains(s.join(y, z)) != (support.contains(y) || support.contains(z))) return false;
  return true;
}

struct Projection {
  Element point;
  /// {y : y <= x implies y <= p}, present when x lies outside K.
  std::optional<ElementSet> halfspace;
  /// The halfspace is convex with convex complement, contains K and avoids x.
  bool halfspace_verified = false;
};

/// p_K(x) = join of {k in K : k <= x}, for K nonempty and join-closed and x above some member of K.
inline Projection project(const JoinStructure& s, ElementSet k, Element x) {
  if (k.empty() || !s.is_join_closed(k)) throw Error(ErrorCode::NotConvex, "K must be a nonempty subsemilattice");
  const ElementSet below = k & s.poset().down(x);
  if (below.empty()) throw Error(ErrorCode::NotInUpSet, "'" + s.name(x) + "' is not above any member of K");
  Projection r{s.join_of(below), std::nullopt, false};
  if (!k.contains(x)) {
    const ElementSet h = s.carrier() - (s.poset().down(x) - s.poset().down(r.point));
    r.halfspace = h;
    r.halfspace_verified = s.is_join_closed(h) && s.is_join_closed(s.carrier() - h) && k.is_subset_of(h) &&
                           !h.contains(x);
  }
  return r;
}

}  // namespace orderconvex
