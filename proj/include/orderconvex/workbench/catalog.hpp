#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "orderconvex/workbench/generators.hpp"

namespace orderconvex::workbench {

struct Instance {
  std::string id;
  FinitePoset poset;
};

/// Canonical form of a poset up to isomorphism: the lexicographically least
/// adjacency bit string over all relabelings. Exhaustive over n! orders, so
/// only meant for the small exhaustive catalogs.
inline std::vector<bool> canonical_form(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > 8) throw CapExceeded("canonical_form on more than 8 elements", n);
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code.push_back(p.leq(perm[i], perm[j]));
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const FinitePoset& a, const FinitePoset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

/// Every join-semilattice with n elements, up to isomorphism. Each one is
/// represented by x -> S \ up(x), a union-closed family of n subsets of the
/// (n-1) non-top elements, so enumerating those families is exhaustive.
inline std::vector<FinitePoset> all_semilattices(std::size_t n) {
  if (n == 0) return {};
  if (n > 6) throw CapExceeded("exhaustive semilattice catalog beyond n = 6", 0);
  const std::uint32_t universe = 1U << (n - 1);
  std::vector<FinitePoset> out;
  std::vector<std::vector<bool>> seen;
  std::vector<std::uint32_t> chosen;
  auto emit = [&] {
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (std::find(chosen.begin(), chosen.end(), chosen[i] | chosen[j]) == chosen.end()) return;
    FinitePoset p = set_family_poset(chosen);
    auto code = canonical_form(p);
    if (std::find(seen.begin(), seen.end(), code) != seen.end()) return;
    seen.push_back(std::move(code));
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (chosen.size() == n) {
      emit();
      return;
    }
    for (std::uint32_t s = from; s < universe; ++s) {
      chosen.push_back(s);
      self(self, s + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// The named catalog used for the appendix tables.
inline std::vector<Instance> table_catalog() {
  std::vector<Instance> out;
  for (std::size_t k = 1; k <= 5; ++k) out.push_back({"chain:" + std::to_string(k), chain(k)});
  for (std::size_t k = 2; k <= 4; ++k) out.push_back({"antichain:" + std::to_string(k), antichain(k)});
  for (std::size_t k = 2; k <= 3; ++k) out.push_back({"boolean:" + std::to_string(k), boolean(k)});
  out.push_back({"vee", vee()});
  out.push_back({"divisors:12", divisors(12)});
  out.push_back({"divisors:36", divisors(36)});
  return out;
}

/// Exhaustive semilattices with at most max_n elements, ids "sl<n>-<index>".
inline std::vector<Instance> semilattice_catalog(std::size_t max_n) {
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto all = all_semilattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      out.push_back({"sl" + std::to_string(n) + "-" + std::to_string(i), std::move(all[i])});
  }
  return out;
}

}  // namespace orderconvex::workbench
