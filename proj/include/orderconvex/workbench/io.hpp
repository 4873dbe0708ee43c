#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orderconvex/poset.hpp"

namespace orderconvex::workbench {

namespace detail {

inline std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace detail

/// Text format:
///   elements: a b c
///   cover: a c          (a is covered by c)
///   # comments
/// With `format: relation` the pairs are given as `leq: x y` lines of a full
/// order relation (reflexive pairs optional), validated for antisymmetry and transitivity.
inline FinitePoset parse_poset_text(const std::string& text, const Caps& caps = Caps::defaults()) {
  std::istringstream in(text);
  std::vector<std::string> names;
  bool have_elements = false;
  bool relation = false;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto w = detail::words(detail::strip_comment(raw));
    if (w.empty()) continue;
    const std::string where = " (line " + std::to_string(line_no) + ")";
    const std::string& key = w[0];
    if (key == "elements:") {
      if (have_elements) throw Error(ErrorCode::ParseError, "repeated elements line" + where);
      names.assign(w.begin() + 1, w.end());
      have_elements = true;
    } else if (key == "format:") {
      if (w.size() != 2 || (w[1] != "relation" && w[1] != "covers"))
        throw Error(ErrorCode::ParseError, "format must be 'covers' or 'relation'" + where);
      relation = w[1] == "relation";
    } else if (key == "cover:" || key == "leq:") {
      if (w.size() != 3) throw Error(ErrorCode::ParseError, "expected two element names" + where);
      if ((key == "leq:") != relation)
        throw Error(ErrorCode::ParseError, "'" + key + "' lines do not match the declared format" + where);
      pairs.emplace_back(w[1], w[2]);
    } else {
      throw Error(ErrorCode::ParseError, "unrecognized line '" + raw + "'" + where);
    }
  }
  if (!have_elements) throw Error(ErrorCode::ParseError, "missing 'elements:' line");
  return relation ? build_poset_from_relation(std::move(names), pairs, caps) : build_poset(std::move(names), pairs, caps);
}

/// JSON mirror: {"elements": [...], "covers": [[x, y], ...]} or
/// {"elements": [...], "relation": [[x, y], ...]}.
inline FinitePoset parse_poset_json(const nlohmann::json& j, const Caps& caps = Caps::defaults()) {
  try {
    auto names = j.at("elements").get<std::vector<std::string>>();
    if (j.contains("relation"))
      return build_poset_from_relation(std::move(names),
                                       j.at("relation").get<std::vector<std::pair<std::string, std::string>>>(), caps);
    auto covers = j.contains("covers") ? j.at("covers").get<std::vector<std::pair<std::string, std::string>>>()
                                       : std::vector<std::pair<std::string, std::string>>{};
    return build_poset(std::move(names), covers, caps);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed poset JSON: ") + e.what());
  }
}

inline std::string to_text(const FinitePoset& p) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& n : p.names()) out << ' ' << n;
  out << '\n';
  for (auto [x, y] : p.cover_pairs()) out << "cover: " << p.name(x) << ' ' << p.name(y) << '\n';
  return out.str();
}

inline nlohmann::json to_json_value(const FinitePoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [x, y] : p.cover_pairs()) covers.push_back({p.name(x), p.name(y)});
  return {{"elements", p.names()}, {"covers", covers}};
}

/// Reads a poset file; JSON when the first non-blank character is '{', text otherwise.
inline FinitePoset read_poset_file(const std::string& path, const Caps& caps = Caps::defaults()) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
    }
    return parse_poset_json(j, caps);
  }
  return parse_poset_text(text, caps);
}

}  // namespace orderconvex::workbench
