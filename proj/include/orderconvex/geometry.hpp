#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orderconvex/convexity.hpp"
#include "orderconvex/extremal.hpp"
#include "orderconvex/report.hpp"

namespace orderconvex {

struct Copoint {
  ElementSet set;
  ElementSet attaching_points;
  friend bool operator==(const Copoint&, const Copoint&) = default;
};

/// Points x outside the convex set C such that C is maximal among convex sets
/// avoiding x: every convex proper superset of C contains some z outside C, hence
/// hull(C + z), so x must lie in all of those hulls.
inline ElementSet attaching_points(const ConvexitySpace& cs, ElementSet c) {
  ElementSet common = cs.carrier();
  for (Element z : c.complement(cs.size())) common &= hull(cs, c.with(z));
  return common - c;
}

/// Maximal convex sets avoiding x, each with all of its attaching points.
inline std::vector<Copoint> copoints_at(const ConvexitySpace& cs, Element x, const std::vector<ElementSet>& family) {
  std::vector<ElementSet> avoiding;
  for (ElementSet c : family)
    if (!c.contains(x)) avoiding.push_back(c);
  std::vector<Copoint> out;
  for (ElementSet c : avoiding) {
    bool maximal = std::none_of(avoiding.begin(), avoiding.end(),
                                [&](ElementSet d) { return d != c && c.is_subset_of(d); });
    if (maximal) out.push_back({c, attaching_points(cs, c)});
  }
  return out;
}

inline std::vector<Copoint> copoints_at(const ConvexitySpace& cs, Element x, const Caps& caps = Caps::defaults()) {
  return copoints_at(cs, x, enumerate_convex_sets(cs, caps));
}

/// Every copoint of the space (a convex set with at least one attaching point), in family order.
inline std::vector<Copoint> all_copoints(const ConvexitySpace& cs, const std::vector<ElementSet>& family) {
  std::vector<Copoint> out;
  for (ElementSet c : family) {
    ElementSet att = attaching_points(cs, c);
    if (!att.empty()) out.push_back({c, att});
  }
  return out;
}

struct ConvexGeometryVerdict {
  /// Indices 0..3: anti-exchange (the definition), polytopes are hulls of their
  /// extreme points, C + x convex for copoints C at x, unique attaching points.
  std::array<bool, 4> condition{true, true, true, true};
  std::array<std::optional<Witness>, 4> witness;
  bool is_convex_geometry = true;

  bool conditions_agree() const {
    return std::all_of(condition.begin(), condition.end(), [&](bool c) { return c == condition[0]; });
  }
  friend bool operator==(const ConvexGeometryVerdict&, const ConvexGeometryVerdict&) = default;
};

/// Evaluates the four equivalent conditions of the convex-geometry theorem independently.
inline ConvexGeometryVerdict convex_geometry(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  const std::vector<ElementSet> family = enumerate_convex_sets(cs, caps);
  const std::size_t n = cs.size();
  if (family.size() * n * n > caps.family_pairs)
    throw CapExceeded("convex_geometry over " + std::to_string(family.size()) + " convex sets", family.size());
  ConvexGeometryVerdict v;
  auto fail = [&](int i, Witness w) {
    if (v.condition[i]) v.witness[i] = std::move(w);
    v.condition[i] = false;
  };

  // (1) y in hull(K + x) implies x not in hull(K + y), for convex K and distinct x, y outside K.
  for (ElementSet k : family) {
    if (!v.condition[0]) break;
    const ElementSet outside = k.complement(n);
    for (Element x : outside) {
      const ElementSet hx = hull(cs, k.with(x));
      for (Element y : outside & hx)
        if (y != x && hull(cs, k.with(y)).contains(x)) {
          fail(0, Witness{"anti-exchange fails", {}, {}}.set("K", k).point("x", x).point("y", y));
          break;
        }
      if (!v.condition[0]) break;
    }
  }

  // (2) every polytope is the hull of its extreme points; in the finite case every convex set is a polytope.
  for (ElementSet k : family) {
    const ElementSet ex = extreme_points(cs, k);
    if (hull(cs, ex) != k) {
      fail(1, Witness{"polytope is not the hull of its extreme points", {}, {}}.set("K", k).set("ex K", ex));
      break;
    }
  }

  // (3) and (4) over all copoints.
  for (const Copoint& c : all_copoints(cs, family)) {
    for (Element x : c.attaching_points)
      if (v.condition[2] && !is_convex(cs, c.set.with(x)))
        fail(2, Witness{"C + x is not convex for a copoint C at x", {}, {}}.set("C", c.set).point("x", x));
    if (v.condition[3] && c.attaching_points.size() != 1)
      fail(3, Witness{"copoint with several attaching points", {}, {}}.set("C", c.set).set("attaching",
                                                                                             c.attaching_points));
  }
  v.is_convex_geometry = v.condition[0];
  return v;
}

/// Structural predicate the paper pairs with each kind's convex-geometry property:
/// ideal and order-algebraic lattice convexities need a chain, the
/// order-algebraic semilattice convexity needs a tree. Other kinds have none.
inline std::optional<bool> characterization_predicate(const ConvexitySpace& cs) {
  switch (cs.kind()) {
    case ConvexityKind::Ideal:
    case ConvexityKind::OrderAlgebraicLattice: return is_chain(cs.poset());
    case ConvexityKind::OrderAlgebraicSemilattice: return is_tree(cs.poset());
    case ConvexityKind::Upper:
    case ConvexityKind::Lower:
    case ConvexityKind::Order:
    case ConvexityKind::AlgebraicSemilattice: return true;
    case ConvexityKind::AlgebraicLattice: return std::nullopt;
  }
  return std::nullopt;
}

/// Compares the structural predicate with the brute-force verdict.
inline TheoremReport characterization_checks(const ConvexitySpace& cs, const Caps& caps = Caps::defaults()) {
  TheoremReport r;
  r.theorem_id = "characterization/" + std::string(to_string(cs.kind()));
  ReportTimer timer(r);
  auto predicted = characterization_predicate(cs);
  if (!predicted) {
    r.hypotheses_met = false;
    r.witness = Witness{"no structural characterization for this kind", {}, {}};
    return r;
  }
  const ConvexGeometryVerdict v = convex_geometry(cs, caps);
  r.metric("predicted", *predicted);
  r.metric("convex_geometry", v.is_convex_geometry);
  if (*predicted != v.is_convex_geometry) {
    Witness w{*predicted ? "structural predicate holds but the convexity is not a convex geometry"
                         : "convex geometry although the structural predicate fails",
              {},
              {}};
    if (v.witness[1]) w = *v.witness[1];
    r.fail(std::move(w));
  }
  return r;
}

/// Dedekind-MacNeille completion: cuts A with A = L(U(A)), ordered by inclusion.
struct CompletionLattice {
  std::vector<ElementSet> cuts;  // increasing bitmask order
  std::vector<std::size_t> embedding;  // element x of the poset -> index of the cut down(x)

  /// The cuts as a poset; principal cuts carry the name of their generator,
  /// the others their member list.
  FinitePoset as_poset(const FinitePoset& p) const {
    if (cuts.size() > kMaxCarrier) throw CapExceeded("completion has more cuts than a carrier can hold", cuts.size());
    std::vector<std::string> names(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) names[i] = format_set(p, cuts[i]);
    for (Element x = 0; x < p.size(); ++x) names[embedding[x]] = p.name(x);
    std::vector<ElementSet> down(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i)
      for (std::size_t j = 0; j < cuts.size(); ++j)
        if (cuts[j].is_subset_of(cuts[i])) down[i].insert(static_cast<Element>(j));
    return FinitePoset::from_ideals(std::move(names), std::move(down));
  }
};

/// Lower bounds of B (intersection of principal ideals; the whole carrier for B empty).
inline ElementSet lower_bounds(const FinitePoset& p, ElementSet b) {
  ElementSet out = p.carrier();
  for (Element x : b) out &= p.down(x);
  return out;
}
inline ElementSet upper_bounds(const FinitePoset& p, ElementSet a) {
  ElementSet out = p.carrier();
  for (Element x : a) out &= p.up(x);
  return out;
}

/// Cuts are exactly the intersections of families of principal ideals; the
/// closure of {down(x)} plus the carrier under pairwise intersection.
inline CompletionLattice dm_completion(const FinitePoset& p) {
  std::vector<ElementSet> cuts = {p.carrier()};
  for (Element x = 0; x < p.size(); ++x) cuts.push_back(p.down(x));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet c = cuts[i] & cuts[j];
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
  std::sort(cuts.begin(), cuts.end());
  CompletionLattice l;
  l.cuts = std::move(cuts);
  for (Element x = 0; x < p.size(); ++x)
    l.embedding.push_back(
        static_cast<std::size_t>(std::lower_bound(l.cuts.begin(), l.cuts.end(), p.down(x)) - l.cuts.begin()));
  return l;
}

/// Principal separation within the poset P: for all x not <= y there are p <= x,
/// q >= y with p not <= q and up(p) + down(q) the whole of P.
inline bool is_principally_separated(const FinitePoset& p) {
  const ElementSet all = p.carrier();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) continue;
      bool found = false;
      for (Element a : p.down(x)) {
        for (Element b : p.up(y))
          if (!p.leq(a, b) && (p.up(a) | p.down(b)) == all) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

struct MweConditions {
  /// principally separated coprimes, distributive completion of the coprimes,
  /// generated by doubly-irreducibles, coprimes are meets of doubly-irreducibles,
  /// prime/coprime interpolation.
  std::array<bool, 5> condition{};
  ElementSet coprimes, primes, doubly_irreducible;

  bool agree() const {
    return std::all_of(condition.begin(), condition.end(), [&](bool c) { return c == condition[0]; });
  }
};

inline MweConditions evaluate_mwe(const JoinStructure& l) {
  if (!l.has_meet() || !is_distributive_lattice(l))
    throw Error(ErrorCode::NotDistributive, "the conditions are stated for finite distributive lattices");
  const FinitePoset& p = l.poset();
  const ElementSet all = l.carrier();
  MweConditions m;
  m.coprimes = coprime_in(l, all);
  m.primes = prime_in(l, all);
  m.doubly_irreducible = doubly_irreducible_in(l, all);
  const FinitePoset pc = induced(p, m.coprimes);

  m.condition[0] = is_principally_separated(pc);

  {
    const CompletionLattice c = dm_completion(pc);
    const FinitePoset cp = c.as_poset(pc);
    auto r = try_join_structure(cp);
    auto* s = std::get_if<JoinStructure>(&r);
    m.condition[1] = s && is_distributive_lattice(*s);
  }

  // Generated sublattice: fixpoint of alternating join and meet closures.
  {
    ElementSet gen = m.doubly_irreducible;
    while (true) {
      ElementSet next = l.meet_closure(l.join_closure(gen));
      if (next == gen) break;
      gen = next;
    }
    m.condition[2] = gen == all;
  }

  m.condition[3] = true;
  for (Element x : m.coprimes) {
    ElementSet above = m.doubly_irreducible & p.up(x);
    if (above.empty() || l.meet_of(above) != x) {
      m.condition[3] = false;
      break;
    }
  }

  m.condition[4] = true;
  const ElementSet both = m.coprimes & m.primes;
  for (Element a : m.coprimes)
    for (Element b : m.primes)
      if (p.leq(a, b) && !both.intersects(interval(p, a, b))) m.condition[4] = false;
  return m;
}

/// Evaluates the five conditions and reports whether they agree; the joint
/// verdict is surfaced as the "verdict" metric.
inline TheoremReport mwe_conditions(const JoinStructure& l) {
  TheoremReport r;
  r.theorem_id = "monjardet-wille-erne";
  ReportTimer timer(r);
  const MweConditions m = evaluate_mwe(l);
  for (std::size_t i = 0; i < 5; ++i) r.metric("condition_" + std::to_string(i + 1), m.condition[i]);
  r.metric("verdict", m.agree() && m.condition[0]);
  if (!m.agree()) r.fail(Witness{"the five conditions disagree", {}, {}});
  return r;
}

/// Sublattices (nonempty sets closed under join and meet), as lattices in their own right.
inline std::vector<ElementSet> sublattices(const JoinStructure& l, const Caps& caps = Caps::defaults()) {
  if (!l.has_meet()) throw Error(ErrorCode::NotALattice, "sublattices need a meet");
  std::vector<ElementSet> out;
  require_subset_scan(l.size(), caps, "sublattices");
  for_each_subset(l.carrier(), [&](ElementSet k) {
    if (!k.empty() && l.is_join_closed(k) && l.is_meet_closed(k)) out.push_back(k);
  });
  return out;
}

/// On a distributive lattice: the algebraic lattice convexity is a convex geometry
/// exactly when every sublattice satisfies the five conditions.
inline TheoremReport check_sublattice_mwe(const JoinStructure& l, const Caps& caps = Caps::defaults()) {
  TheoremReport r;
  r.theorem_id = "alg-lattice-geometry-iff-sublattices";
  ReportTimer timer(r);
  if (!l.has_meet() || !is_distributive_lattice(l)) {
    r.hypotheses_met = false;
    r.witness = Witness{"not a distributive lattice", {}, {}};
    return r;
  }
  bool every = true;
  std::optional<ElementSet> bad;
  for (ElementSet k : sublattices(l, caps)) {
    const MweConditions m = evaluate_mwe(make_join_structure(induced(l.poset(), k)));
    if (!m.condition[0]) {
      every = false;
      bad = k;
      break;
    }
  }
  const bool geometry = convex_geometry(ConvexitySpace(l, ConvexityKind::AlgebraicLattice), caps).is_convex_geometry;
  r.metric("every_sublattice_mwe", every);
  r.metric("convex_geometry", geometry);
  if (every != geometry) {
    Witness w{"sublattice condition and convex-geometry verdict differ", {}, {}};
    if (bad) w.set("sublattice", *bad);
    r.fail(std::move(w));
  }
  return r;
}

}  // namespace orderconvex
