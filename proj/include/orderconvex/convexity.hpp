#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orderconvex/element_set.hpp"
#include "orderconvex/error.hpp"
#include "orderconvex/join_structure.hpp"
#include "orderconvex/poset.hpp"
#include "orderconvex/report.hpp"

namespace orderconvex {

enum class ConvexityKind {
  Upper,
  Lower,
  Order,
  AlgebraicSemilattice,
  Ideal,
  OrderAlgebraicSemilattice,
  OrderAlgebraicLattice,
  AlgebraicLattice,
};

inline constexpr std::array<ConvexityKind, 8> kAllKinds = {
    ConvexityKind::Upper,         ConvexityKind::Lower,
    ConvexityKind::Order,         ConvexityKind::AlgebraicSemilattice,
    ConvexityKind::Ideal,         ConvexityKind::OrderAlgebraicSemilattice,
    ConvexityKind::OrderAlgebraicLattice, ConvexityKind::AlgebraicLattice,
};

constexpr std::string_view to_string(ConvexityKind k) {
  switch (k) {
    case ConvexityKind::Upper: return "upper";
    case ConvexityKind::Lower: return "lower";
    case ConvexityKind::Order: return "order";
    case ConvexityKind::AlgebraicSemilattice: return "alg-semilattice";
    case ConvexityKind::Ideal: return "ideal";
    case ConvexityKind::OrderAlgebraicSemilattice: return "order-alg-semilattice";
    case ConvexityKind::OrderAlgebraicLattice: return "order-alg-lattice";
    case ConvexityKind::AlgebraicLattice: return "alg-lattice";
  }
  return "?";
}

inline ConvexityKind parse_kind(std::string_view s) {
  for (ConvexityKind k : kAllKinds)
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::ParseError, "unknown convexity kind '" + std::string(s) + "'");
}

constexpr bool requires_join(ConvexityKind k) {
  return k != ConvexityKind::Upper && k != ConvexityKind::Lower && k != ConvexityKind::Order;
}
constexpr bool requires_meet(ConvexityKind k) {
  return k == ConvexityKind::OrderAlgebraicLattice || k == ConvexityKind::AlgebraicLattice;
}

/// A structure together with one of its convexities.
class ConvexitySpace {
 public:
  /// Poset-level kinds (upper, lower, order) need no join; the other kinds
  /// build the join table and throw KindNotApplicable when it does not exist.
  ConvexitySpace(FinitePoset p, ConvexityKind kind) : poset_(std::move(p)), kind_(kind) {
    if (requires_join(kind)) {
      auto r = try_join_structure(poset_);
      if (auto* bad = std::get_if<NotASemilattice>(&r))
        throw Error(ErrorCode::KindNotApplicable, std::string(to_string(kind)) + " convexity needs a join: " + bad->message);
      structure_ = std::get<JoinStructure>(std::move(r));
      check_meet();
    }
  }
  ConvexitySpace(JoinStructure s, ConvexityKind kind) : poset_(s.poset()), structure_(std::move(s)), kind_(kind) {
    check_meet();
  }

  ConvexityKind kind() const { return kind_; }
  const FinitePoset& poset() const { return poset_; }
  bool has_structure() const { return structure_.has_value(); }
  const JoinStructure& structure() const {
    if (!structure_) throw Error(ErrorCode::NotASemilattice, "convexity space carries no join table");
    return *structure_;
  }
  std::size_t size() const { return poset_.size(); }
  ElementSet carrier() const { return poset_.carrier(); }

 private:
  void check_meet() const {
    if (requires_meet(kind_) && !structure_->has_meet())
      throw Error(ErrorCode::KindNotApplicable, std::string(to_string(kind_)) + " convexity needs a lattice");
  }

  FinitePoset poset_;
  std::optional<JoinStructure> structure_;
  ConvexityKind kind_;
};

/// Kinds whose structural requirement the poset meets.
inline std::vector<ConvexityKind> applicable_kinds(const FinitePoset& p) {
  std::vector<ConvexityKind> out = {ConvexityKind::Upper, ConvexityKind::Lower, ConvexityKind::Order};
  auto r = try_join_structure(p);
  if (auto* s = std::get_if<JoinStructure>(&r)) {
    out.insert(out.end(), {ConvexityKind::AlgebraicSemilattice, ConvexityKind::Ideal,
                           ConvexityKind::OrderAlgebraicSemilattice});
    if (s->has_meet()) out.insert(out.end(), {ConvexityKind::OrderAlgebraicLattice, ConvexityKind::AlgebraicLattice});
  }
  return out;
}

inline bool is_order_convex(const FinitePoset& p, ElementSet k) { return (up_set(p, k) & down_set(p, k)) == k; }

/// Membership in the kind's convexity, by the defining predicate.
inline bool is_convex(const ConvexitySpace& cs, ElementSet k) {
  const FinitePoset& p = cs.poset();
  switch (cs.kind()) {
    case ConvexityKind::Upper: return is_up_set(p, k);
    case ConvexityKind::Lower: return is_down_set(p, k);
    case ConvexityKind::Order: return is_order_convex(p, k);
    case ConvexityKind::AlgebraicSemilattice: return cs.structure().is_join_closed(k);
    case ConvexityKind::Ideal: return is_down_set(p, k) && cs.structure().is_join_closed(k);
    case ConvexityKind::OrderAlgebraicSemilattice: return is_order_convex(p, k) && cs.structure().is_join_closed(k);
    case ConvexityKind::OrderAlgebraicLattice:
      return is_order_convex(p, k) && cs.structure().is_join_closed(k) && cs.structure().is_meet_closed(k);
    case ConvexityKind::AlgebraicLattice: return cs.structure().is_join_closed(k) && cs.structure().is_meet_closed(k);
  }
  return false;
}

/// Least convex superset of A, by fixpoint of the kind's pairwise closure steps.
inline ElementSet hull(const ConvexitySpace& cs, ElementSet a) {
  const FinitePoset& p = cs.poset();
  auto order_fill = [&](ElementSet s) { return up_set(p, s) & down_set(p, s); };
  auto iterate = [](ElementSet s, auto step) {
    while (true) {
      ElementSet next = step(s);
      if (next == s) return s;
      s = next;
    }
  };
  switch (cs.kind()) {
    case ConvexityKind::Upper: return up_set(p, a);
    case ConvexityKind::Lower: return down_set(p, a);
    case ConvexityKind::Order: return order_fill(a);
    case ConvexityKind::AlgebraicSemilattice: return cs.structure().join_closure(a);
    case ConvexityKind::Ideal:
      return iterate(a, [&](ElementSet s) { return cs.structure().join_closure(down_set(p, s)); });
    case ConvexityKind::OrderAlgebraicSemilattice:
      return iterate(a, [&](ElementSet s) { return cs.structure().join_closure(order_fill(s)); });
    case ConvexityKind::OrderAlgebraicLattice:
      return iterate(a, [&](ElementSet s) {
        return cs.structure().meet_closure(cs.structure().join_closure(order_fill(s)));
      });
    case ConvexityKind::AlgebraicLattice:
      return iterate(a, [&](ElementSet s) { return cs.structure().meet_closure(cs.structure().join_closure(s)); });
  }
  return a;
}

/// All convex sets in increasing bitmask order, by predicate filtering of 2^n subsets.
inline std::vector<ElementSet> enumerate_convex_sets(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  require_subset_scan(cs.size(), caps, "enumerate_convex_sets");
  std::vector<ElementSet> out;
  for_each_subset(cs.carrier(), [&](ElementSet k) {
    if (!is_convex(cs, k)) return;
    if (out.size() >= caps.convex_sets) throw CapExceeded("more convex sets than the convex_sets cap", out.size());
    out.push_back(k);
  });
  return out;
}

/// Membership test against a family sorted by bitmask (enumerate_convex_sets order).
inline bool family_contains(const std::vector<ElementSet>& family, ElementSet k) {
  return std::binary_search(family.begin(), family.end(), k);
}

/// Hull as the intersection of all members of the family containing A (the definition).
inline ElementSet hull_by_intersection(const std::vector<ElementSet>& family, ElementSet a, std::size_t n) {
  ElementSet out = ElementSet::full(n);
  for (ElementSet c : family)
    if (a.is_subset_of(c)) out &= c;
  return out;
}

inline ElementSet hull_by_intersection(const ConvexitySpace& cs, ElementSet a, const Caps& caps = Caps::defaults()) {
  return hull_by_intersection(enumerate_convex_sets(cs, caps), a, cs.size());
}

/// Checks that a family of subsets of an n-element carrier is a convexity:
/// contains the empty set and the carrier, is closed under intersections, and
/// under unions of directed subfamilies with at most three members.
inline TheoremReport verify_convexity_axioms(std::vector<ElementSet> family, std::size_t n,
                                             const Caps& caps = Caps::defaults()) {
  TheoremReport r;
  r.theorem_id = "convexity-axioms";
  ReportTimer timer(r);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const std::size_t m = family.size();
  if (m * m * m > caps.family_pairs) throw CapExceeded("axiom check over " + std::to_string(m) + " convex sets", m);
  r.metric("convex_sets", static_cast<long long>(m));
  if (!family_contains(family, ElementSet{})) {
    r.fail(Witness{"empty set is not convex", {}, {}});
    return r;
  }
  if (!family_contains(family, ElementSet::full(n))) {
    r.fail(Witness{"carrier is not convex", {}, {}});
    return r;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!family_contains(family, family[i] & family[j])) {
        r.fail(Witness{"intersection of two convex sets is not convex", {}, {}}.set("A", family[i]).set("B", family[j]));
        return r;
      }
  // Directed subfamilies of size 2 and 3: every pair has an upper bound inside the subfamily.
  auto bounded = [](ElementSet a, ElementSet b, std::initializer_list<ElementSet> members) {
    for (ElementSet c : members)
      if (a.is_subset_of(c) && b.is_subset_of(c)) return true;
    return false;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      ElementSet a = family[i], b = family[j];
      if (bounded(a, b, {a, b}) && !family_contains(family, a | b)) {
        r.fail(Witness{"directed union is not convex", {}, {}}.set("A", a).set("B", b));
        return r;
      }
      for (std::size_t k = j + 1; k < m; ++k) {
        ElementSet c = family[k];
        if (bounded(a, b, {a, b, c}) && bounded(a, c, {a, b, c}) && bounded(b, c, {a, b, c}) &&
            !family_contains(family, a | b | c)) {
          r.fail(Witness{"directed union is not convex", {}, {}}.set("A", a).set("B", b).set("C", c));
          return r;
        }
      }
    }
  return r;
}

inline TheoremReport verify_convexity_axioms(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  auto r = verify_convexity_axioms(enumerate_convex_sets(cs, caps), cs.size(), caps);
  r.theorem_id = "convexity-axioms/" + std::string(to_string(cs.kind()));
  return r;
}

/// Least k >= 1 such that a set is convex exactly when it contains the hull of
/// each of its subsets with at most k elements.
inline std::size_t arity(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  const std::vector<ElementSet> family = enumerate_convex_sets(cs, caps);
  const std::size_t n = cs.size();
  if (n == 0) return 1;
  for (std::size_t k = 1; k <= n; ++k) {
    bool ok = true;
    for_each_subset_while(cs.carrier(), [&](ElementSet s) {
      if (family_contains(family, s)) return true;
      bool closed = true;
      for (std::size_t size = 1; size <= k && closed; ++size)
        closed = for_each_subset_of_size_while(s, size, [&](ElementSet f) { return hull(cs, f).is_subset_of(s); });
      if (closed) ok = false;  // a non-convex set passes the k-test
      return ok;
    });
    if (ok) return k;
  }
  return n;
}

}  // namespace orderconvex
