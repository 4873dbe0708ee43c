#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orderconvex/error.hpp"
#include "orderconvex/join_structure.hpp"
#include "orderconvex/poset.hpp"

namespace orderconvex::workbench {

/// Builds a poset from a leq predicate over named elements (no validation; the
/// predicate must already be a partial order).
template <typename Leq>
FinitePoset poset_from_order(std::vector<std::string> names, Leq&& leq, const Caps& caps = Caps::defaults()) {
  if (names.size() > caps.max_elements || names.size() > kMaxCarrier)
    throw CapExceeded("generated structure with " + std::to_string(names.size()) + " elements", names.size());
  std::vector<ElementSet> down(names.size());
  for (Element y = 0; y < names.size(); ++y)
    for (Element x = 0; x < names.size(); ++x)
      if (leq(x, y)) down[y].insert(x);
  return FinitePoset::from_ideals(std::move(names), std::move(down));
}

/// A family of subsets of a ground set, ordered by inclusion.
inline FinitePoset set_family_poset(std::vector<std::uint32_t> sets, const Caps& caps = Caps::defaults()) {
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  static constexpr std::string_view labels = "123456789ABCDEFGHIJKLMNOPQRSTUVW";  // one per bit
  std::vector<std::string> names;
  for (std::uint32_t s : sets) {
    std::string name;
    for (unsigned i = 0; i < labels.size(); ++i)
      if (s >> i & 1U) name += labels[i];
    names.push_back(name.empty() ? "0" : name);
  }
  return poset_from_order(std::move(names), [&](Element x, Element y) { return (sets[x] & ~sets[y]) == 0; }, caps);
}

inline FinitePoset chain(std::size_t k, const Caps& caps = Caps::defaults()) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
  return poset_from_order(std::move(names), [](Element x, Element y) { return x <= y; }, caps);
}

inline FinitePoset antichain(std::size_t k, const Caps& caps = Caps::defaults()) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i)
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  return poset_from_order(std::move(names), [](Element x, Element y) { return x == y; }, caps);
}

/// Power set of {1..k} under inclusion; the empty set is named "0", others by their digits.
inline FinitePoset boolean(std::size_t k, const Caps& caps = Caps::defaults()) {
  if (k > 5) throw CapExceeded("boolean(" + std::to_string(k) + ") has more than 32 elements", 0);
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 0; s < (1U << k); ++s) sets.push_back(s);
  return set_family_poset(std::move(sets), caps);
}

/// Divisors of m under divisibility.
inline FinitePoset divisors(unsigned m, const Caps& caps = Caps::defaults()) {
  if (m == 0) throw Error(ErrorCode::ParseError, "divisors of 0");
  std::vector<unsigned> ds;
  for (unsigned d = 1; d <= m; ++d)
    if (m % d == 0) ds.push_back(d);
  std::vector<std::string> names;
  for (unsigned d : ds) names.push_back(std::to_string(d));
  return poset_from_order(std::move(names), [&](Element x, Element y) { return ds[y] % ds[x] == 0; }, caps);
}

/// Componentwise order on the cartesian product; elements named "x,y".
inline FinitePoset product(const FinitePoset& a, const FinitePoset& b, const Caps& caps = Caps::defaults()) {
  std::vector<std::string> names;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < b.size(); ++y) names.push_back(a.name(x) + "," + b.name(y));
  const std::size_t nb = b.size();
  return poset_from_order(
      std::move(names),
      [&](Element u, Element v) { return a.leq(u / nb, v / nb) && b.leq(u % nb, v % nb); }, caps);
}

/// The V-shaped semilattice a, b < t.
inline FinitePoset vee() { return build_poset({"a", "b", "t"}, std::vector<std::pair<std::string, std::string>>{{"a", "t"}, {"b", "t"}}); }

/// M3: bottom, three atoms, top.
inline FinitePoset m3() {
  return build_poset({"0", "a", "b", "c", "1"}, std::vector<std::pair<std::string, std::string>>{
                                                     {"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

/// N5: 0 < a < b < 1 and 0 < c < 1.
inline FinitePoset n5() {
  return build_poset({"0", "a", "b", "c", "1"}, std::vector<std::pair<std::string, std::string>>{
                                                     {"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

/// Random rooted tree with the root on top: node i > 0 hangs below a uniformly
/// chosen earlier node. Every principal filter is a chain, so this is a tree
/// semilattice whose join is the lowest common ancestor.
inline FinitePoset tree_random(std::size_t n, std::uint64_t seed, const Caps& caps = Caps::defaults()) {
  std::mt19937_64 rng(seed);
  std::vector<Element> parent(n, 0);
  for (Element i = 1; i < n; ++i) parent[i] = std::uniform_int_distribution<Element>(0, i - 1)(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
  auto above = [&](Element x, Element y) {  // y is an ancestor of x (or x itself)
    while (true) {
      if (x == y) return true;
      if (x == 0) return false;
      x = parent[x];
    }
  };
  return poset_from_order(std::move(names), above, caps);
}

/// Random poset: each pair i < j is a relation with probability `density`, then closed transitively.
inline FinitePoset poset_random(std::size_t n, double density, std::uint64_t seed, const Caps& caps = Caps::defaults()) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(std::clamp(density, 0.0, 1.0));
  std::vector<std::pair<Element, Element>> covers;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (edge(rng)) covers.emplace_back(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return build_poset(std::move(names), covers, caps);
}

namespace detail {

/// An isomorphic family on at most |family| - 1 ground elements. Lattices (closed
/// under union and intersection, hence distributive) are encoded by the
/// join-irreducible members below each set; semilattices by x -> S \ up(x) over
/// the non-top members, which turns joins into unions.
inline std::vector<std::uint32_t> compact_encoding(const std::vector<std::uint32_t>& family, bool lattice) {
  auto subset = [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; };
  std::vector<std::uint32_t> basis;
  std::uint32_t top = 0;
  for (std::uint32_t s : family) top |= s;
  for (std::uint32_t s : family) {
    if (lattice) {
      std::uint32_t below = 0;
      bool any = false;
      for (std::uint32_t t : family)
        if (t != s && subset(t, s)) below |= t, any = true;
      if (!any || below != s) basis.push_back(s);  // join-irreducible, or the bottom
    } else if (s != top) {
      basis.push_back(s);
    }
  }
  if (lattice) {
    std::uint32_t bottom = top;
    for (std::uint32_t s : family) bottom &= s;
    basis.erase(std::remove(basis.begin(), basis.end(), bottom), basis.end());
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : family) {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (lattice ? subset(basis[i], s) : !subset(s, basis[i])) code |= 1U << i;
    out.push_back(code);
  }
  return out;
}

/// Grows a family of subsets of a (n-1)-element ground set to exactly n members,
/// closing under union (and intersection when `lattice`). Random candidates
/// include each ground element with probability `inclusion`; when they keep
/// overshooting, the union of the family plus one unused ground element is added
/// (after re-encoding if none is unused), which grows the family by exactly one.
inline std::vector<std::uint32_t> grow_family(std::size_t n, std::uint64_t seed, double inclusion, bool lattice) {
  const unsigned ground = n <= 1 ? 0 : static_cast<unsigned>(n - 1);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(std::clamp(inclusion, 0.0, 1.0));
  auto random_set = [&] {
    std::uint32_t s = 0;
    for (unsigned i = 0; i < ground; ++i)
      if (pick(rng)) s |= 1U << i;
    return s;
  };
  auto close = [&](std::vector<std::uint32_t> f) {
    bool changed = true;
    while (changed) {
      changed = false;
      const std::size_t m = f.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          for (std::uint32_t c : {f[i] | f[j], lattice ? (f[i] & f[j]) : (f[i] | f[j])})
            if (std::find(f.begin(), f.end(), c) == f.end()) {
              f.push_back(c);
              changed = true;
            }
    }
    return f;
  };
  std::vector<std::uint32_t> family = {random_set()};
  if (n == 0) return {};
  while (family.size() < n) {
    bool grown = false;
    for (int attempt = 0; attempt < 64 && !grown; ++attempt) {
      std::vector<std::uint32_t> next = family;
      std::uint32_t s = random_set();
      if (std::find(next.begin(), next.end(), s) != next.end()) continue;
      next.push_back(s);
      next = close(std::move(next));
      if (next.size() <= n) {
        family = std::move(next);
        grown = true;
      }
    }
    if (grown) continue;
    // Deterministic scan of every candidate before falling back to a fresh top.
    if (ground <= 12)
      for (std::uint32_t cand = 0; cand < (1U << ground) && !grown; ++cand) {
        if (std::find(family.begin(), family.end(), cand) != family.end()) continue;
        std::vector<std::uint32_t> next = family;
        next.push_back(cand);
        next = close(std::move(next));
        if (next.size() <= n) {
          family = std::move(next);
          grown = true;
        }
      }
    if (grown) continue;
    std::uint32_t all = 0;
    for (std::uint32_t s : family) all |= s;
    std::uint32_t fresh = ~all & ((ground >= 32 ? 0U : (1U << ground)) - 1U);
    if (fresh == 0) {
      // Every ground element is in use: re-encode the family on at most |family| - 1 elements.
      family = compact_encoding(family, lattice);
      all = 0;
      for (std::uint32_t s : family) all |= s;
      fresh = ~all & ((ground >= 32 ? 0U : (1U << ground)) - 1U);
    }
    family.push_back(all | (fresh & (~fresh + 1U)));
  }
  return family;
}

}  // namespace detail

/// Random n-element join-semilattice: a union-closed family of subsets of an
/// (n-1)-element ground set, ordered by inclusion.
inline FinitePoset semilattice_random(std::size_t n, std::uint64_t seed, double inclusion = 0.5,
                                      const Caps& caps = Caps::defaults()) {
  if (n > caps.max_elements || n > kMaxCarrier) throw CapExceeded("semilattice_random size", n);
  return set_family_poset(detail::grow_family(n, seed, inclusion, false), caps);
}

/// Random n-element distributive lattice: a family closed under union and intersection.
inline FinitePoset distributive_random(std::size_t n, std::uint64_t seed, double inclusion = 0.5,
                                       const Caps& caps = Caps::defaults()) {
  if (n > caps.max_elements || n > kMaxCarrier) throw CapExceeded("distributive_random size", n);
  return set_family_poset(detail::grow_family(n, seed, inclusion, true), caps);
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline unsigned long long parse_count(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "bad number '" + s + "' in generator spec '" + spec + "'");
}

}  // namespace detail

/// Generator spec grammar, colon separated:
///   chain:k  antichain:k  boolean:k  divisors:m  vee  m3  n5
///   tree:n:seed  poset:n:density:seed  semilattice:n:seed  distributive:n:seed
///   product:<spec>*<spec>[*<spec>...]
inline FinitePoset generate(std::string_view spec, const Caps& caps = Caps::defaults()) {
  const std::string s(spec);
  if (s.rfind("product:", 0) == 0) {
    auto parts = detail::split(std::string_view(s).substr(8), '*');
    if (parts.size() < 2) throw Error(ErrorCode::ParseError, "product needs at least two factors: '" + s + "'");
    FinitePoset acc = generate(parts[0], caps);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = product(acc, generate(parts[i], caps), caps);
    return acc;
  }
  auto f = detail::split(s, ':');
  const std::string& family = f[0];
  auto arg = [&](std::size_t i) {
    if (i >= f.size()) throw Error(ErrorCode::ParseError, "missing parameter in generator spec '" + s + "'");
    return detail::parse_count(f[i], s);
  };
  auto arity = [&](std::size_t k) {
    if (f.size() != k + 1) throw Error(ErrorCode::ParseError, "generator '" + family + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (family == "chain") return arity(1), chain(arg(1), caps);
  if (family == "antichain") return arity(1), antichain(arg(1), caps);
  if (family == "boolean") return arity(1), boolean(arg(1), caps);
  if (family == "divisors") return arity(1), divisors(static_cast<unsigned>(arg(1)), caps);
  if (family == "vee") return arity(0), vee();
  if (family == "m3") return arity(0), m3();
  if (family == "n5") return arity(0), n5();
  if (family == "tree") return arity(2), tree_random(arg(1), arg(2), caps);
  if (family == "semilattice") return arity(2), semilattice_random(arg(1), arg(2), 0.5, caps);
  if (family == "distributive") return arity(2), distributive_random(arg(1), arg(2), 0.5, caps);
  if (family == "poset") {
    arity(3);
    double density = 0;
    try {
      density = std::stod(f[2]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad density '" + f[2] + "'");
    }
    return poset_random(arg(1), density, arg(3), caps);
  }
  throw Error(ErrorCode::ParseError, "unknown generator family '" + family + "'");
}

}  // namespace orderconvex::workbench
