#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orderconvex/poset.hpp"

namespace orderconvex::workbench {

struct DotHighlight {
  ElementSet gray;   // filled gray
  ElementSet black;  // filled black, white label
};

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Hasse diagram as a DOT digraph drawn bottom to top. Nodes at the same
/// longest-chain height share a rank, so levels line up like the paper's figures.
inline std::string export_dot(const FinitePoset& p, const std::optional<DotHighlight>& highlight = std::nullopt,
                              const std::string& graph_name = "hasse") {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(graph_name) << " {\n";
  out << "  rankdir=BT;\n  node [shape=circle, style=filled, fillcolor=white];\n  edge [arrowhead=none];\n";
  std::map<std::size_t, std::vector<Element>> levels;
  for (Element x = 0; x < p.size(); ++x) {
    std::string attrs;
    if (highlight && highlight->black.contains(x))
      attrs = " [fillcolor=black, fontcolor=white]";
    else if (highlight && highlight->gray.contains(x))
      attrs = " [fillcolor=gray]";
    out << "  n" << x << " [label=" << detail::dot_quote(p.name(x)) << "]" << attrs << ";\n";
    levels[depth(p, p.down(x))].push_back(x);
  }
  for (const auto& [level, xs] : levels) {
    out << "  { rank=same;";
    for (Element x : xs) out << " n" << x << ";";
    out << " }\n";
  }
  for (auto [x, y] : p.cover_pairs()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace orderconvex::workbench
