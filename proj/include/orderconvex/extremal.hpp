#pragma once

#include <optional>
#include <utility>

#include "orderconvex/convexity.hpp"
#include "orderconvex/element_set.hpp"
#include "orderconvex/error.hpp"
#include "orderconvex/join_structure.hpp"

namespace orderconvex {

/// Element classes relative to a reference subset K, each stored as the subset
/// of K whose members have the property. Prime and the dual classes are empty
/// when the structure has no meet.
struct ElementClassifier {
  ElementSet coirreducible;       // x = join F (F nonempty, F in K) forces x in F
  ElementSet dual_coirreducible;  // x = meet F forces x in F
  ElementSet coprime;             // x <= join F forces x <= f for some f in F
  ElementSet prime;               // x >= meet F forces x >= f for some f in F
  ElementSet doubly_irreducible;  // coirreducible for <= and for >=
  friend bool operator==(const ElementClassifier&, const ElementClassifier&) = default;
};

// Closed forms. Each quantifier over F reduces to its largest candidate:
// a violating F only ever contains elements of the set named in the comment.

/// Members x of K with no nonempty F in K \ {x} joining to x: {y in K : y < x} is empty or joins below x.
inline ElementSet coirreducible_in(const JoinStructure& s, ElementSet k) {
  ElementSet out;
  for (Element x : k) {
    ElementSet below = k & s.poset().down(x).without(x);
    if (below.empty() || s.join_of(below) != x) out.insert(x);
  }
  return out;
}

/// Members x of K such that {y in K : x not <= y} is empty or does not join above x.
inline ElementSet coprime_in(const JoinStructure& s, ElementSet k) {
  ElementSet out;
  for (Element x : k) {
    ElementSet avoid = k - s.poset().up(x);
    if (avoid.empty() || !s.leq(x, s.join_of(avoid))) out.insert(x);
  }
  return out;
}

inline ElementSet dual_coirreducible_in(const JoinStructure& s, ElementSet k) {
  if (!s.has_meet()) return {};
  ElementSet out;
  for (Element x : k) {
    ElementSet above = k & s.poset().up(x).without(x);
    if (above.empty() || s.meet_of(above) != x) out.insert(x);
  }
  return out;
}

inline ElementSet prime_in(const JoinStructure& s, ElementSet k) {
  if (!s.has_meet()) return {};
  ElementSet out;
  for (Element x : k) {
    ElementSet avoid = k - s.poset().down(x);
    if (avoid.empty() || !s.leq(s.meet_of(avoid), x)) out.insert(x);
  }
  return out;
}

inline ElementSet doubly_irreducible_in(const JoinStructure& s, ElementSet k) {
  return coirreducible_in(s, k) & dual_coirreducible_in(s, k);
}

/// Exhaustive classification: quantifies over every nonempty F contained in K.
inline ElementClassifier classify_elements(const JoinStructure& s, ElementSet k, const Caps& caps = Caps::defaults()) {
  require_subset_scan(k.size(), caps, "classify_elements");
  const FinitePoset& p = s.poset();
  ElementClassifier c;
  c.coirreducible = c.coprime = k;
  if (s.has_meet()) c.dual_coirreducible = c.prime = k;
  for_each_subset(k, [&](ElementSet f) {
    if (f.empty()) return;
    Element j = s.join_of(f);
    if (!f.contains(j)) c.coirreducible.erase(j);
    c.coprime -= (k & p.down(j)) - down_set(p, f);
    if (s.has_meet()) {
      Element m = s.meet_of(f);
      if (!f.contains(m)) c.dual_coirreducible.erase(m);
      c.prime -= (k & p.up(m)) - up_set(p, f);
    }
  });
  c.doubly_irreducible = c.coirreducible & c.dual_coirreducible;
  return c;
}

/// Closed-form classification; agrees with classify_elements.
inline ElementClassifier element_classes(const JoinStructure& s, ElementSet k) {
  ElementClassifier c;
  c.coirreducible = coirreducible_in(s, k);
  c.coprime = coprime_in(s, k);
  c.dual_coirreducible = dual_coirreducible_in(s, k);
  c.prime = prime_in(s, k);
  c.doubly_irreducible = c.coirreducible & c.dual_coirreducible;
  return c;
}

/// {x in K : x not in hull(K \ {x})}, straight from the definition.
inline ElementSet extreme_points(const ConvexitySpace& cs, ElementSet k) {
  ElementSet out;
  for (Element x : k)
    if (!hull(cs, k.without(x)).contains(x)) out.insert(x);
  return out;
}

/// Order-theoretic description of the extreme points of a convex K:
/// upper: minimal; lower: maximal; order: minimal or maximal; algebraic
/// semilattice: coirreducible; ideal: max-coprime; order-algebraic semilattice:
/// minimal or max-coprime; order-algebraic lattice: min-prime or max-coprime;
/// algebraic lattice: doubly-irreducible.
inline ElementSet characterized_extreme_points(const ConvexitySpace& cs, ElementSet k) {
  const FinitePoset& p = cs.poset();
  switch (cs.kind()) {
    case ConvexityKind::Upper: return minimal_elements(p, k);
    case ConvexityKind::Lower: return maximal_elements(p, k);
    case ConvexityKind::Order: return minimal_elements(p, k) | maximal_elements(p, k);
    case ConvexityKind::AlgebraicSemilattice: return coirreducible_in(cs.structure(), k);
    case ConvexityKind::Ideal: return maximal_elements(p, k) & coprime_in(cs.structure(), k);
    case ConvexityKind::OrderAlgebraicSemilattice:
      return minimal_elements(p, k) | (maximal_elements(p, k) & coprime_in(cs.structure(), k));
    case ConvexityKind::OrderAlgebraicLattice:
      return (minimal_elements(p, k) & prime_in(cs.structure(), k)) |
             (maximal_elements(p, k) & coprime_in(cs.structure(), k));
    case ConvexityKind::AlgebraicLattice: return doubly_irreducible_in(cs.structure(), k);
  }
  return {};
}

/// A pair x, y in K with x + y in E but neither in E, if any.
inline std::optional<std::pair<Element, Element>> extreme_subset_violation(const JoinStructure& s, ElementSet k,
                                                                          ElementSet e) {
  if (!e.is_subset_of(k)) throw Error(ErrorCode::NotASubset, "E is not contained in K");
  const ElementSet rest = k - e;
  for (Element x : rest)
    for (Element y : rest)
      if (y >= x && e.contains(s.join(x, y))) return std::pair{x, y};
  return std::nullopt;
}

/// For all x, y in K: x + y in E implies x in E or y in E.
inline bool is_extreme_subset(const JoinStructure& s, ElementSet k, ElementSet e) {
  return !extreme_subset_violation(s, k, e).has_value();
}

/// A nonempty extreme subset (compactness is automatic on a finite carrier).
inline bool is_face(const JoinStructure& s, ElementSet k, ElementSet e) { return !e.empty() && is_extreme_subset(s, k, e); }

/// Modified Lassak extremality: for every F contained in K, E meets hull(F) only if E meets F.
/// Quantifies over all subsets F of K.
inline bool is_lassak_extreme(const ConvexitySpace& cs, ElementSet k, ElementSet e, const Caps& caps = Caps::defaults()) {
  if (!e.is_subset_of(k)) throw Error(ErrorCode::NotASubset, "E is not contained in K");
  require_subset_scan(k.size(), caps, "is_lassak_extreme");
  return for_each_subset_while(k, [&](ElementSet f) { return f.intersects(e) || !hull(cs, f).intersects(e); });
}

}  // namespace orderconvex
