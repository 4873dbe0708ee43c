#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "orderconvex/convexity.hpp"
#include "orderconvex/extremal.hpp"
#include "orderconvex/geometry.hpp"
#include "orderconvex/invariants.hpp"
#include "orderconvex/report.hpp"

namespace orderconvex {

namespace detail {

inline TheoremReport start(std::string id) {
  TheoremReport r;
  r.theorem_id = std::move(id);
  return r;
}

inline void require_poset_kind(ConvexityKind kind) {
  if (requires_join(kind))
    throw Error(ErrorCode::KindNotApplicable, "expected the upper, lower or order convexity");
}

inline void require_join_closed(const JoinStructure& s, ElementSet k) {
  if (!s.is_join_closed(k)) throw Error(ErrorCode::NotConvex, "K is not a subsemilattice");
}

}  // namespace detail

/// co(K) = co(ex co(K)); for the upper convexity also K contained in up(Min K).
inline TheoremReport check_km_poset(const FinitePoset& p, ConvexityKind kind, ElementSet k) {
  detail::require_poset_kind(kind);
  TheoremReport r = detail::start("krein-milman-poset/" + std::string(to_string(kind)));
  ReportTimer timer(r);
  const ConvexitySpace cs(p, kind);
  const ElementSet hk = hull(cs, k);
  const ElementSet ex = extreme_points(cs, hk);
  if (hull(cs, ex) != hk) r.fail(Witness{"co(K) differs from co(ex co(K))", {}, {}}.set("K", k).set("ex", ex));
  if (kind == ConvexityKind::Upper && !k.is_subset_of(up_set(p, minimal_elements(p, k))))
    r.fail(Witness{"K not contained in the upper set of its minimal elements", {}, {}}.set("K", k));
  return r;
}

/// hull(A) = K implies ex K contained in A.
inline TheoremReport check_milman_poset(const FinitePoset& p, ConvexityKind kind, ElementSet k, ElementSet a) {
  detail::require_poset_kind(kind);
  const ConvexitySpace cs(p, kind);
  if (hull(cs, a) != k) throw Error(ErrorCode::HypothesisUnmet, "hull(A) differs from K");
  TheoremReport r = detail::start("milman-poset/" + std::string(to_string(kind)));
  ReportTimer timer(r);
  const ElementSet ex = extreme_points(cs, k);
  if (!ex.is_subset_of(a)) r.fail(Witness{"extreme point missing from A", {}, {}}.set("K", k).set("A", a).set("ex K", ex));
  return r;
}

/// K = co(ex K) and x = join(ex K below x) for every x in K, algebraic semilattice convexity.
inline TheoremReport check_km_semilattice(const JoinStructure& s, ElementSet k) {
  detail::require_join_closed(s, k);
  TheoremReport r = detail::start("krein-milman-semilattice");
  ReportTimer timer(r);
  const ConvexitySpace cs(s, ConvexityKind::AlgebraicSemilattice);
  const ElementSet ex = extreme_points(cs, k);
  if (hull(cs, ex) != k) r.fail(Witness{"K differs from co(ex K)", {}, {}}.set("K", k).set("ex K", ex));
  for (Element x : k) {
    const ElementSet gens = ex & s.poset().down(x);
    if (gens.empty() || s.join_of(gens) != x) {
      r.fail(Witness{"x is not the join of the extreme points below it", {}, {}}.set("K", k).point("x", x));
      break;
    }
  }
  return r;
}

/// hull(A) = K implies ex K contained in A; also, x in ex K is in every A' in K joining to x.
inline TheoremReport check_milman_semilattice(const JoinStructure& s, ElementSet k, ElementSet a,
                                              const Caps& caps = Caps::defaults()) {
  const ConvexitySpace cs(s, ConvexityKind::AlgebraicSemilattice);
  if (hull(cs, a) != k) throw Error(ErrorCode::HypothesisUnmet, "hull(A) differs from K");
  TheoremReport r = detail::start("milman-semilattice");
  ReportTimer timer(r);
  const ElementSet ex = extreme_points(cs, k);
  if (!ex.is_subset_of(a)) r.fail(Witness{"extreme point missing from A", {}, {}}.set("K", k).set("A", a).set("ex K", ex));
  // The lemma: a join of members of K equal to an extreme point x must use x.
  for (Element x : ex) {
    const ElementSet below = (k & s.poset().down(x)).without(x);
    require_subset_scan(below.size(), caps, "check_milman_semilattice");
    bool ok = for_each_subset_while(below, [&](ElementSet f) { return f.empty() || s.join_of(f) != x; });
    if (!ok) r.fail(Witness{"extreme point is a join of other members of K", {}, {}}.set("K", k).point("x", x));
  }
  return r;
}

/// A map into the chain 0 < 1 < ... < top.
struct ChainMap {
  std::vector<unsigned> values;
  unsigned top = 1;
  unsigned operator()(Element x) const { return values.at(x); }
};

struct ChainMapFlags {
  bool is_convex = true;   // f(x + y) <= max(f(x), f(y))
  bool is_concave = true;  // f(x + y) >= max(f(x), f(y)); equivalently order-preserving on K
  bool is_affine = true;
  bool is_quasiconcave = true;  // every strict upper level set {f > a} is a subsemilattice
  friend bool operator==(const ChainMapFlags&, const ChainMapFlags&) = default;
};

/// Flags of f relative to the domain K (K join-closed).
inline ChainMapFlags chain_map_flags(const JoinStructure& s, ElementSet k, const ChainMap& f) {
  ChainMapFlags c;
  for (Element x : k)
    for (Element y : k) {
      const unsigned j = f(s.join(x, y)), m = std::max(f(x), f(y));
      if (j > m) c.is_convex = false;
      if (j < m) c.is_concave = false;
    }
  c.is_affine = c.is_convex && c.is_concave;
  for (unsigned a = 0; a <= f.top; ++a) {
    ElementSet level;
    for (Element x : k)
      if (f(x) > a) level.insert(x);
    if (!s.is_join_closed(level)) c.is_quasiconcave = false;
  }
  return c;
}

namespace detail {

inline ElementSet argmax(ElementSet k, const ChainMap& f) {
  unsigned best = 0;
  for (Element x : k) best = std::max(best, f(x));
  ElementSet out;
  for (Element x : k)
    if (f(x) == best) out.insert(x);
  return out;
}

inline ElementSet argmin(ElementSet k, const ChainMap& f) {
  unsigned best = f.top;
  for (Element x : k) best = std::min(best, f(x));
  ElementSet out;
  for (Element x : k)
    if (f(x) == best) out.insert(x);
  return out;
}

inline void face_and_extreme(TheoremReport& r, const JoinStructure& s, ElementSet k, ElementSet arg, const char* what) {
  const ElementSet ex = extreme_points(ConvexitySpace(s, ConvexityKind::AlgebraicSemilattice), k);
  if (!is_face(s, k, arg)) r.fail(Witness{std::string(what) + " is not a face of K", {}, {}}.set("K", k).set(what, arg));
  if (!arg.intersects(ex))
    r.fail(Witness{std::string(what) + " misses the extreme points", {}, {}}.set("K", k).set(what, arg).set("ex K", ex));
}

}  // namespace detail

/// Bauer maximum principle: argmax f is a face of K meeting ex K, for convex f.
inline TheoremReport check_bauer_max(const JoinStructure& s, ElementSet k, const ChainMap& f) {
  if (k.empty()) throw Error(ErrorCode::NotConvex, "K must be nonempty");
  detail::require_join_closed(s, k);
  if (!chain_map_flags(s, k, f).is_convex) throw Error(ErrorCode::NotConvexMap, "f is not convex on K");
  TheoremReport r = detail::start("bauer-max");
  ReportTimer timer(r);
  detail::face_and_extreme(r, s, k, detail::argmax(k, f), "argmax");
  return r;
}

/// Quasiconcave minimum principle: argmin f is a face of K meeting ex K, for f
/// quasiconcave and not constantly the top of its chain.
inline TheoremReport check_bauer_min(const JoinStructure& s, ElementSet k, const ChainMap& f) {
  if (k.empty()) throw Error(ErrorCode::NotConvex, "K must be nonempty");
  detail::require_join_closed(s, k);
  if (!chain_map_flags(s, k, f).is_quasiconcave) throw Error(ErrorCode::NotQuasiconcave, "f is not quasiconcave on K");
  if (std::all_of(k.begin(), k.end(), [&](Element x) { return f(x) == f.top; }))
    throw Error(ErrorCode::ConstantTop, "f is constantly the top of its chain");
  TheoremReport r = detail::start("bauer-min");
  ReportTimer timer(r);
  detail::face_and_extreme(r, s, k, detail::argmin(k, f), "argmin");
  return r;
}

/// Smallest subset E of ex K below x with join x, by increasing size and then
/// lexicographic order of element indices; nullopt if none exists.
inline std::optional<ElementSet> minkowski_witness(const JoinStructure& s, ElementSet ex, Element x,
                                                   const Caps& caps = Caps::defaults()) {
  const ElementSet gens = ex & s.poset().down(x);
  require_subset_scan(gens.size(), caps, "minkowski_witness");
  std::optional<ElementSet> found;
  for (std::size_t size = 1; size <= gens.size() && !found; ++size)
    for_each_subset_of_size_while(gens, size, [&](ElementSet e) {
      if (s.join_of(e) == x) found = e;
      return !found;
    });
  return found;
}

/// Largest Minkowski witness over K, or nullopt if some member has none.
inline std::optional<std::size_t> minkowski_max_witness(const JoinStructure& s, ElementSet k,
                                                        const Caps& caps = Caps::defaults()) {
  const ElementSet ex = extreme_points(ConvexitySpace(s, ConvexityKind::AlgebraicSemilattice), k);
  std::size_t worst = 0;
  for (Element x : k) {
    auto w = minkowski_witness(s, ex, x, caps);
    if (!w) return std::nullopt;
    worst = std::max(worst, w->size());
  }
  return worst;
}

/// Every x in K is the join of at most breadth(L) extreme points of K, on a distributive lattice.
inline TheoremReport check_minkowski(const JoinStructure& l, ElementSet k, const Caps& caps = Caps::defaults()) {
  if (!l.has_meet() || !is_distributive_lattice(l))
    throw Error(ErrorCode::NotDistributive, "the Minkowski bound is stated for distributive lattices");
  detail::require_join_closed(l, k);
  TheoremReport r = detail::start("minkowski");
  ReportTimer timer(r);
  const std::size_t b = breadth(l, caps);
  const ElementSet ex = extreme_points(ConvexitySpace(l, ConvexityKind::AlgebraicSemilattice), k);
  std::size_t worst = 0;
  for (Element x : k) {
    auto w = minkowski_witness(l, ex, x, caps);
    if (!w) {
      r.fail(Witness{"no decomposition into extreme points", {}, {}}.set("K", k).point("x", x));
      continue;
    }
    worst = std::max(worst, w->size());
    if (w->size() > b)
      r.fail(Witness{"decomposition needs more than breadth extreme points", {}, {}}.set("K", k).set("E", *w).point("x", x));
  }
  r.metric("breadth", static_cast<long long>(b));
  r.metric("max_witness", static_cast<long long>(worst));
  return r;
}

/// |ex K| equals the depth of K, for K a subsemilattice of a distributive semilattice.
inline TheoremReport check_depth_count(const JoinStructure& s, ElementSet k) {
  if (!is_distributive_semilattice(s)) throw Error(ErrorCode::NotDistributive, "S is not a distributive semilattice");
  detail::require_join_closed(s, k);
  TheoremReport r = detail::start("depth-count");
  ReportTimer timer(r);
  const ElementSet ex = extreme_points(ConvexitySpace(s, ConvexityKind::AlgebraicSemilattice), k);
  const std::size_t d = depth(s.poset(), k);
  r.metric("extreme_points", static_cast<long long>(ex.size()));
  r.metric("depth", static_cast<long long>(d));
  if (ex.size() != d) r.fail(Witness{"number of extreme points differs from depth", {}, {}}.set("K", k).set("ex K", ex));
  return r;
}

struct FreeModule {
  ElementSet basis;          // non-bottom coprimes
  std::size_t rank = 0;      // |basis|
  bool is_free = false;      // every element is the join of exactly one subset of the basis (bottom: the empty one)
  bool unique_antichain_decomposition = false;  // every element is the join of exactly one antichain of the basis
  bool size_matches = false;  // |S| = 2^rank
  bool distributive = false;
};

inline FreeModule free_module(const JoinStructure& s, const Caps& caps = Caps::defaults()) {
  auto bottom = s.bottom();
  if (!bottom) throw Error(ErrorCode::NoBottom, "a B-module needs a least element");
  FreeModule m;
  m.basis = coprime_in(s, s.carrier()).without(*bottom);
  m.rank = m.basis.size();
  require_subset_scan(m.rank, caps, "free_module");
  std::vector<std::size_t> any(s.size(), 0), antichains(s.size(), 0);
  for_each_subset(m.basis, [&](ElementSet f) {
    const Element j = f.empty() ? *bottom : s.join_of(f);
    ++any[j];
    if (is_antichain(s.poset(), f)) ++antichains[j];
  });
  m.is_free = std::all_of(any.begin(), any.end(), [](std::size_t c) { return c == 1; });
  m.unique_antichain_decomposition = std::all_of(antichains.begin(), antichains.end(), [](std::size_t c) { return c == 1; });
  m.size_matches = m.rank < 32 && s.size() == (std::size_t{1} << m.rank);
  m.distributive = is_distributive_semilattice(s);
  return m;
}

/// A free B-module has 2^rank elements and is distributive.
inline TheoremReport check_free_module(const JoinStructure& s, const Caps& caps = Caps::defaults()) {
  const FreeModule m = free_module(s, caps);
  TheoremReport r = detail::start("free-module");
  ReportTimer timer(r);
  r.metric("is_free", m.is_free);
  r.metric("rank", static_cast<long long>(m.rank));
  r.metric("unique_antichain_decomposition", m.unique_antichain_decomposition);
  if (m.is_free && !m.size_matches)
    r.fail(Witness{"free module whose size is not 2^rank", {}, {}}.set("basis", m.basis));
  if (m.is_free && !m.distributive) r.fail(Witness{"free module that is not distributive", {}, {}}.set("basis", m.basis));
  return r;
}

/// Distributivity of the lattice of convex sets (meet = intersection, join = hull of the union).
inline bool convexity_lattice_distributive(const ConvexitySpace& cs, const std::vector<ElementSet>& family) {
  auto join = [&](ElementSet a, ElementSet b) { return hull(cs, a | b); };
  for (ElementSet x : family)
    for (ElementSet y : family)
      for (ElementSet z : family)
        if ((x & join(y, z)) != join(x & y, x & z)) return false;
  return true;
}

struct MartinezConditions {
  std::optional<bool> distributive_convexity;  // (i); nullopt when the family exceeds the cap
  bool unique_copoint_attaching = false;      // (ii)
  bool unique_decomposition = false;          // (iii): unique antichain of non-zero coprimes
};

inline MartinezConditions martinez_conditions(const JoinStructure& s, const Caps& caps = Caps::defaults()) {
  MartinezConditions m;
  const ConvexitySpace cs(s, ConvexityKind::Ideal);
  const std::vector<ElementSet> family = enumerate_convex_sets(cs, caps);
  const std::size_t f = family.size();
  if (f * f * f <= caps.family_pairs) m.distributive_convexity = convexity_lattice_distributive(cs, family);

  std::vector<std::size_t> copoints_per_point(s.size());
  for (Element x = 0; x < s.size(); ++x) copoints_per_point[x] = copoints_at(cs, x, family).size();
  m.unique_copoint_attaching = true;
  for (const Copoint& c : all_copoints(cs, family)) {
    bool some = false;
    for (Element x : c.attaching_points)
      if (copoints_per_point[x] == 1) some = true;
    if (!some) m.unique_copoint_attaching = false;
  }
  m.unique_decomposition = free_module(s, caps).unique_antichain_decomposition;
  return m;
}

/// The three conditions of Martinez' theorem on the ideal convexity agree.
inline TheoremReport check_martinez_equivalence(const JoinStructure& s, const Caps& caps = Caps::defaults()) {
  if (!s.bottom()) throw Error(ErrorCode::NoBottom, "Martinez' theorem is applied to semilattices with a least element");
  TheoremReport r = detail::start("martinez");
  ReportTimer timer(r);
  const MartinezConditions m = martinez_conditions(s, caps);
  r.metric("unique_copoint_attaching", m.unique_copoint_attaching);
  r.metric("unique_decomposition", m.unique_decomposition);
  if (m.distributive_convexity) r.metric("distributive_convexity", *m.distributive_convexity);
  const bool agree = m.unique_copoint_attaching == m.unique_decomposition &&
                     (!m.distributive_convexity || *m.distributive_convexity == m.unique_decomposition);
  if (!agree) r.fail(Witness{"Martinez conditions disagree", {}, {}});
  return r;
}

}  // namespace orderconvex
