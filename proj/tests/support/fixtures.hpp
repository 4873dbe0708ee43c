#pragma once

// Shared fixtures for the test suites: the small named structures every suite uses.

#include <string>
#include <utility>
#include <vector>

#include "orderconvex/orderconvex.hpp"

namespace fixtures {

using namespace orderconvex;
using namespace orderconvex::workbench;

using Covers = std::vector<std::pair<std::string, std::string>>;

inline FinitePoset b3() { return boolean(3); }

/// V with a bottom added: z < a, b < t.
inline FinitePoset vee_with_bottom() { return build_poset({"z", "a", "b", "t"}, Covers{{"z", "a"}, {"z", "b"}, {"a", "t"}, {"b", "t"}}); }

inline ConvexitySpace space(const FinitePoset& p, ConvexityKind kind) {
  auto r = try_join_structure(p);
  if (auto* s = std::get_if<JoinStructure>(&r)) return ConvexitySpace(*s, kind);
  return ConvexitySpace(p, kind);
}

/// Element names of a set, for readable assertions.
inline std::vector<std::string> names(const FinitePoset& p, ElementSet s) {
  std::vector<std::string> out;
  for (Element x : s) out.push_back(p.name(x));
  return out;
}

}  // namespace fixtures
