#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orderconvex/element_set.hpp"
#include "orderconvex/error.hpp"

namespace orderconvex {

/// A finite partially ordered set. Immutable; copies share storage.
///
/// The order is stored as two bitmask rows per element: the principal ideal
/// and the principal filter. `leq(x, y)` is therefore a single bit test.
class FinitePoset {
 public:
  FinitePoset() : data_(std::make_shared<Data>()) {}

  std::size_t size() const { return data_->names.size(); }
  ElementSet carrier() const { return ElementSet::full(size()); }

  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(Element x) const { return data_->names.at(x); }
  std::optional<Element> find(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }
  Element index_of(std::string_view name) const {
    auto x = find(name);
    if (!x) throw Error(ErrorCode::UnknownElement, "no element named '" + std::string(name) + "'");
    return *x;
  }
  ElementSet set_of(std::initializer_list<std::string_view> names) const {
    ElementSet s;
    for (auto n : names) s.insert(index_of(n));
    return s;
  }

  bool leq(Element x, Element y) const { return data_->down[y].contains(x); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// Principal ideal {z : z <= x}.
  ElementSet down(Element x) const { return data_->down[x]; }
  /// Principal filter {z : x <= z}.
  ElementSet up(Element x) const { return data_->up[x]; }

  /// Elements covering x (x < y with nothing strictly between).
  ElementSet upper_covers(Element x) const { return data_->upper_covers[x]; }
  ElementSet lower_covers(Element x) const { return data_->lower_covers[x]; }

  std::vector<std::pair<Element, Element>> cover_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < size(); ++x)
      for (Element y : upper_covers(x)) out.emplace_back(x, y);
    return out;
  }

  /// Builds from a reflexive, transitive, antisymmetric relation given as principal ideals.
  /// No validation; callers go through build_poset / build_poset_from_relation.
  static FinitePoset from_ideals(std::vector<std::string> names, std::vector<ElementSet> down) {
    auto d = std::make_shared<Data>();
    const std::size_t n = names.size();
    d->names = std::move(names);
    d->down = std::move(down);
    d->up.assign(n, ElementSet{});
    for (Element y = 0; y < n; ++y)
      for (Element x : d->down[y]) d->up[x].insert(y);
    d->upper_covers.assign(n, ElementSet{});
    d->lower_covers.assign(n, ElementSet{});
    for (Element x = 0; x < n; ++x) {
      ElementSet strict_up = d->up[x].without(x);
      ElementSet covers = strict_up;
      for (Element y : strict_up) covers -= d->up[y].without(y);
      d->upper_covers[x] = covers;
      for (Element y : covers) d->lower_covers[y].insert(x);
    }
    for (Element x = 0; x < n; ++x) d->index.emplace(d->names[x], x);
    return FinitePoset(std::move(d));
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.data_ == b.data_ || (a.data_->names == b.data_->names && a.data_->down == b.data_->down);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, Element> index;
    std::vector<ElementSet> down;
    std::vector<ElementSet> up;
    std::vector<ElementSet> upper_covers;
    std::vector<ElementSet> lower_covers;
  };

  explicit FinitePoset(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

namespace detail {

inline std::unordered_map<std::string, Element> index_names(const std::vector<std::string>& names, const Caps& caps) {
  if (names.size() > caps.max_elements || names.size() > kMaxCarrier)
    throw CapExceeded("carrier of " + std::to_string(names.size()) + " elements exceeds max_elements", names.size());
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error(ErrorCode::ParseError, "empty element name");
    if (!index.emplace(names[i], i).second) throw Error(ErrorCode::DuplicateElement, "element '" + names[i] + "' repeated");
  }
  return index;
}

inline Element lookup(const std::unordered_map<std::string, Element>& index, const std::string& name) {
  auto it = index.find(name);
  if (it == index.end()) throw Error(ErrorCode::UnknownElement, "no element named '" + name + "'");
  return it->second;
}

}  // namespace detail

/// Index-based construction from cover pairs (x, y) meaning x is covered by y.
/// The order is the reflexive-transitive closure of the pairs.
inline FinitePoset build_poset(std::vector<std::string> names, const std::vector<std::pair<Element, Element>>& covers,
                               const Caps& caps = Caps::defaults()) {
  detail::index_names(names, caps);
  const std::size_t n = names.size();
  std::vector<ElementSet> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [x, y] : covers) {
    if (x >= n || y >= n) throw Error(ErrorCode::UnknownElement, "cover index out of range");
    if (x == y) throw Error(ErrorCode::CycleDetected, "self-cover on '" + names[x] + "'");
    if (!succ[x].contains(y)) {
      succ[x].insert(y);
      ++indegree[y];
    }
  }
  // Kahn's algorithm; the topological order also drives the closure.
  std::vector<Element> order;
  std::vector<Element> ready;
  for (Element x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    Element x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (Element y : succ[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  if (order.size() != n) {
    std::string where;
    for (Element x = 0; x < n; ++x)
      if (indegree[x] != 0) where += (where.empty() ? "" : " ") + names[x];
    throw Error(ErrorCode::CycleDetected, "cover pairs contain a directed cycle through {" + where + "}");
  }
  std::vector<ElementSet> down(n);
  for (Element x : order) {
    down[x].insert(x);
    for (Element y : succ[x]) down[y] |= down[x];
  }
  return FinitePoset::from_ideals(std::move(names), std::move(down));
}

/// Name-based construction, mirroring the Hasse-diagram text format.
inline FinitePoset build_poset(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& covers,
                               const Caps& caps = Caps::defaults()) {
  auto index = detail::index_names(names, caps);
  std::vector<std::pair<Element, Element>> idx;
  idx.reserve(covers.size());
  for (const auto& [a, b] : covers) idx.emplace_back(detail::lookup(index, a), detail::lookup(index, b));
  return build_poset(std::move(names), idx, caps);
}

/// Construction from an explicit order relation. Reflexive pairs are implied;
/// the relation must already be transitive and antisymmetric.
inline FinitePoset build_poset_from_relation(std::vector<std::string> names,
                                             const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                                             const Caps& caps = Caps::defaults()) {
  auto index = detail::index_names(names, caps);
  const std::size_t n = names.size();
  std::vector<ElementSet> down(n);
  for (Element x = 0; x < n; ++x) down[x].insert(x);
  for (const auto& [a, b] : leq_pairs) down[detail::lookup(index, b)].insert(detail::lookup(index, a));
  for (Element x = 0; x < n; ++x)
    for (Element y : down[x]) {
      if (y != x && down[y].contains(x))
        throw Error(ErrorCode::CycleDetected, "antisymmetry fails for '" + names[x] + "' and '" + names[y] + "'");
      if (!down[y].is_subset_of(down[x]))
        throw Error(ErrorCode::InvalidRelation, "relation is not transitive below '" + names[x] + "'");
    }
  return FinitePoset::from_ideals(std::move(names), std::move(down));
}

/// Lower set generated by A.
inline ElementSet down_set(const FinitePoset& p, ElementSet a) {
  ElementSet out;
  for (Element x : a) out |= p.down(x);
  return out;
}

/// Upper set generated by A.
inline ElementSet up_set(const FinitePoset& p, ElementSet a) {
  ElementSet out;
  for (Element x : a) out |= p.up(x);
  return out;
}

inline ElementSet interval(const FinitePoset& p, Element lo, Element hi) { return p.up(lo) & p.down(hi); }

inline ElementSet minimal_elements(const FinitePoset& p, ElementSet k) {
  ElementSet out;
  for (Element x : k)
    if ((p.down(x) & k) == ElementSet::singleton(x)) out.insert(x);
  return out;
}

inline ElementSet maximal_elements(const FinitePoset& p, ElementSet k) {
  ElementSet out;
  for (Element x : k)
    if ((p.up(x) & k) == ElementSet::singleton(x)) out.insert(x);
  return out;
}

inline bool is_down_set(const FinitePoset& p, ElementSet a) { return down_set(p, a) == a; }
inline bool is_up_set(const FinitePoset& p, ElementSet a) { return up_set(p, a) == a; }

inline bool is_chain(const FinitePoset& p, ElementSet k) {
  for (Element x : k)
    if (!k.is_subset_of(p.down(x) | p.up(x))) return false;
  return true;
}
inline bool is_chain(const FinitePoset& p) { return is_chain(p, p.carrier()); }

inline bool is_antichain(const FinitePoset& p, ElementSet k) {
  for (Element x : k)
    if ((p.down(x) | p.up(x)).intersects(k.without(x))) return false;
  return true;
}
inline bool is_antichain(const FinitePoset& p) { return is_antichain(p, p.carrier()); }

/// Every principal filter is a chain.
inline bool is_tree(const FinitePoset& p) {
  for (Element x = 0; x < p.size(); ++x)
    if (!is_chain(p, p.up(x))) return false;
  return true;
}

/// The sub-poset induced on K, with element i of the result being the i-th member of K.
inline FinitePoset induced(const FinitePoset& p, ElementSet k) {
  const std::vector<Element> members = k.to_vector();
  std::vector<std::string> names;
  std::vector<ElementSet> down(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    names.push_back(p.name(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j)
      if (p.leq(members[j], members[i])) down[i].insert(static_cast<Element>(j));
  }
  return FinitePoset::from_ideals(std::move(names), std::move(down));
}

/// The same carrier with the reverse order.
inline FinitePoset dual(const FinitePoset& p) {
  std::vector<ElementSet> down(p.size());
  for (Element x = 0; x < p.size(); ++x) down[x] = p.up(x);
  return FinitePoset::from_ideals(p.names(), std::move(down));
}

/// Longest chain cardinality (0 for an empty subset).
inline std::size_t depth(const FinitePoset& p, ElementSet k) {
  // Longest chain ending at x, processed in order of increasing ideal size.
  std::vector<Element> order = k.to_vector();
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return p.down(a).size() < p.down(b).size(); });
  std::vector<std::size_t> best(p.size(), 0);
  std::size_t overall = 0;
  for (Element x : order) {
    std::size_t b = 0;
    for (Element y : p.down(x).without(x) & k) b = std::max(b, best[y]);
    best[x] = b + 1;
    overall = std::max(overall, best[x]);
  }
  return overall;
}
inline std::size_t depth(const FinitePoset& p) { return depth(p, p.carrier()); }

inline std::string format_set(const FinitePoset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += p.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace orderconvex
