#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orderconvex/element_set.hpp"
#include "orderconvex/error.hpp"
#include "orderconvex/poset.hpp"

namespace orderconvex {

struct NotASemilattice {
  Element x;
  Element y;
  std::string message;
};

/// A finite join-semilattice with its binary join table, plus the meet table when
/// the poset is also a lattice. Joins of the empty set are not defined.
class JoinStructure {
 public:
  const FinitePoset& poset() const { return data_->poset; }
  std::size_t size() const { return data_->poset.size(); }
  ElementSet carrier() const { return data_->poset.carrier(); }
  const std::string& name(Element x) const { return data_->poset.name(x); }
  bool leq(Element x, Element y) const { return data_->poset.leq(x, y); }

  Element join(Element x, Element y) const { return data_->join[x * size() + y]; }

  bool has_meet() const { return !data_->meet.empty() || size() == 0; }
  Element meet(Element x, Element y) const {
    if (!has_meet()) throw Error(ErrorCode::NotALattice, "structure has no meet table");
    return data_->meet[x * size() + y];
  }

  std::optional<Element> bottom() const { return data_->bottom; }
  Element top() const { return data_->top; }

  /// Join of a nonempty subset.
  Element join_of(ElementSet f) const {
    if (f.empty()) throw Error(ErrorCode::EmptyJoin, "join of the empty set is undefined");
    Element acc = f.front();
    for (Element x : f) acc = join(acc, x);
    return acc;
  }
  /// Meet of a nonempty subset (lattices only).
  Element meet_of(ElementSet f) const {
    if (f.empty()) throw Error(ErrorCode::EmptyJoin, "meet of the empty set is undefined");
    Element acc = f.front();
    for (Element x : f) acc = meet(acc, x);
    return acc;
  }

  bool is_join_closed(ElementSet a) const {
    for (Element x : a)
      for (Element y : a)
        if (y > x && !a.contains(join(x, y))) return false;
    return true;
  }
  bool is_meet_closed(ElementSet a) const {
    for (Element x : a)
      for (Element y : a)
        if (y > x && !a.contains(meet(x, y))) return false;
    return true;
  }

  /// Subsemilattice generated by A.
  ElementSet join_closure(ElementSet a) const {
    ElementSet closed = a;
    ElementSet frontier = a;
    while (!frontier.empty()) {
      ElementSet fresh;
      for (Element x : frontier)
        for (Element y : closed) fresh.insert(join(x, y));
      fresh -= closed;
      closed |= fresh;
      frontier = fresh;
    }
    return closed;
  }
  ElementSet meet_closure(ElementSet a) const {
    ElementSet closed = a;
    ElementSet frontier = a;
    while (!frontier.empty()) {
      ElementSet fresh;
      for (Element x : frontier)
        for (Element y : closed) fresh.insert(meet(x, y));
      fresh -= closed;
      closed |= fresh;
      frontier = fresh;
    }
    return closed;
  }

  friend std::variant<JoinStructure, NotASemilattice> try_join_structure(const FinitePoset& p);

 private:
  struct Data {
    FinitePoset poset;
    std::vector<Element> join;
    std::vector<Element> meet;
    std::optional<Element> bottom;
    Element top = 0;
  };
  explicit JoinStructure(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

namespace detail {

/// Least element of an up-closed set U if it exists.
inline std::optional<Element> least_of(const FinitePoset& p, ElementSet u) {
  ElementSet mins = minimal_elements(p, u);
  if (mins.size() != 1) return std::nullopt;
  return mins.front();
}

inline std::optional<Element> greatest_of(const FinitePoset& p, ElementSet d) {
  ElementSet maxs = maximal_elements(p, d);
  if (maxs.size() != 1) return std::nullopt;
  return maxs.front();
}

}  // namespace detail

/// Join table when every pair has a least upper bound; the meet table is filled
/// when every pair also has a greatest lower bound.
inline std::variant<JoinStructure, NotASemilattice> try_join_structure(const FinitePoset& p) {
  const std::size_t n = p.size();
  auto d = std::make_shared<JoinStructure::Data>();
  d->poset = p;
  d->join.resize(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      auto lub = detail::least_of(p, p.up(x) & p.up(y));
      if (!lub) {
        return NotASemilattice{x, y, "'" + p.name(x) + "' and '" + p.name(y) + "' have no least upper bound"};
      }
      d->join[x * n + y] = d->join[y * n + x] = *lub;
    }
  std::vector<Element> meet(n * n);
  bool lattice = true;
  for (Element x = 0; x < n && lattice; ++x)
    for (Element y = x; y < n; ++y) {
      auto glb = detail::greatest_of(p, p.down(x) & p.down(y));
      if (!glb) {
        lattice = false;
        break;
      }
      meet[x * n + y] = meet[y * n + x] = *glb;
    }
  if (lattice) d->meet = std::move(meet);
  d->bottom = detail::least_of(p, p.carrier());
  if (n > 0) d->top = *detail::greatest_of(p, p.carrier());
  return JoinStructure(std::move(d));
}

/// Throwing variant of try_join_structure.
inline JoinStructure make_join_structure(const FinitePoset& p) {
  auto r = try_join_structure(p);
  if (auto* bad = std::get_if<NotASemilattice>(&r)) throw Error(ErrorCode::NotASemilattice, bad->message);
  return std::get<JoinStructure>(std::move(r));
}

/// The subsemilattice K as a structure in its own right (join inherited from s).
inline JoinStructure substructure(const JoinStructure& s, ElementSet k) {
  if (!s.is_join_closed(k)) throw Error(ErrorCode::NotConvex, "subset is not join-closed");
  return make_join_structure(induced(s.poset(), k));
}

/// x <= y+z implies x = y'+z' for some y' <= y, z' <= z.
inline bool is_distributive_semilattice(const JoinStructure& s) {
  const FinitePoset& p = s.poset();
  for (Element y = 0; y < s.size(); ++y)
    for (Element z = y; z < s.size(); ++z) {
      ElementSet reachable;
      for (Element y2 : p.down(y))
        for (Element z2 : p.down(z)) reachable.insert(s.join(y2, z2));
      if (!p.down(s.join(y, z)).is_subset_of(reachable)) return false;
    }
  return true;
}

/// x ^ (y v z) = (x ^ y) v (x ^ z) over all triples; false when there is no meet.
inline bool is_distributive_lattice(const JoinStructure& s) {
  if (!s.has_meet()) return false;
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      for (Element z = y; z < s.size(); ++z)
        if (s.meet(x, s.join(y, z)) != s.join(s.meet(x, y), s.meet(x, z))) return false;
  return true;
}

struct StructureClass {
  bool is_chain = false;
  bool is_antichain = false;
  bool is_tree = false;
  bool is_lattice = false;
  bool has_bottom = false;
  bool is_distributive_semilattice = false;
  bool is_distributive_lattice = false;
  friend bool operator==(const StructureClass&, const StructureClass&) = default;
};

inline StructureClass classify(const JoinStructure& s) {
  StructureClass c;
  c.is_chain = is_chain(s.poset());
  c.is_antichain = is_antichain(s.poset());
  c.is_tree = is_tree(s.poset());
  c.is_lattice = s.has_meet();
  c.has_bottom = s.bottom().has_value();
  c.is_distributive_semilattice = is_distributive_semilattice(s);
  c.is_distributive_lattice = is_distributive_lattice(s);
  return c;
}

/// Poset-level classification for structures that are not semilattices.
inline StructureClass classify(const FinitePoset& p) {
  StructureClass c;
  c.is_chain = is_chain(p);
  c.is_antichain = is_antichain(p);
  c.is_tree = is_tree(p);
  c.has_bottom = detail::least_of(p, p.carrier()).has_value();
  return c;
}

}  // namespace orderconvex
