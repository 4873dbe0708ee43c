#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orderconvex/convexity.hpp"
#include "orderconvex/extremal.hpp"
#include "orderconvex/geometry.hpp"
#include "orderconvex/invariants.hpp"
#include "orderconvex/separation.hpp"
#include "orderconvex/theorems.hpp"

namespace orderconvex {

// JSON for library value types (found by ADL).

inline void to_json(nlohmann::json& j, const Measure& m) {
  switch (m.state) {
    case Measure::State::Value: j = m.value; break;
    case Measure::State::NotApplicable: j = "n/a"; break;
    case Measure::State::CapExceeded: j = "cap-exceeded"; break;
  }
}
inline void from_json(const nlohmann::json& j, Measure& m) {
  if (j.is_number_unsigned()) m = Measure::of(j.get<std::size_t>());
  else if (j == "cap-exceeded") m = Measure::cap_exceeded();
  else m = Measure::not_applicable();
}

inline void to_json(nlohmann::json& j, const InvariantProfile& p) {
  j = {{"breadth", p.breadth}, {"depth", p.depth}, {"clique_number", p.clique_number},
       {"rank", p.rank},       {"caratheodory", p.caratheodory}, {"helly", p.helly}};
}
inline void from_json(const nlohmann::json& j, InvariantProfile& p) {
  j.at("breadth").get_to(p.breadth);
  j.at("depth").get_to(p.depth);
  j.at("clique_number").get_to(p.clique_number);
  j.at("rank").get_to(p.rank);
  j.at("caratheodory").get_to(p.caratheodory);
  j.at("helly").get_to(p.helly);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StructureClass, is_chain, is_antichain, is_tree, is_lattice, has_bottom,
                                   is_distributive_semilattice, is_distributive_lattice)

}  // namespace orderconvex

namespace orderconvex::workbench {

inline constexpr const char* kSchema = "orderconvex/1";

using NamedSets = std::vector<std::pair<std::string, std::vector<std::string>>>;
using NamedPoints = std::vector<std::pair<std::string, std::string>>;
using Metrics = std::vector<std::pair<std::string, long long>>;

/// Witness with element names instead of indices.
struct WitnessDto {
  std::string note;
  NamedSets sets;
  NamedPoints points;
  friend bool operator==(const WitnessDto&, const WitnessDto&) = default;
};

struct TheoremDto {
  std::string theorem_id;
  std::string instance_id;
  bool hypotheses_met = true;
  bool holds = true;
  std::optional<WitnessDto> witness;
  long long elapsed_us = 0;
  Metrics metrics;
  bool failed() const { return hypotheses_met && !holds; }
  friend bool operator==(const TheoremDto&, const TheoremDto&) = default;
};

struct GeometryDto {
  std::string status = "ok";  // ok | cap-exceeded
  bool is_convex_geometry = false;
  std::array<bool, 4> conditions{};
  std::optional<WitnessDto> witness;
  friend bool operator==(const GeometryDto&, const GeometryDto&) = default;
};

struct SeparationDto {
  std::string status = "ok";
  std::array<bool, 5> s{};
  std::size_t halfspace_count = 0;
  std::vector<std::pair<std::string, WitnessDto>> witnesses;  // keyed "s0".."s4"
  friend bool operator==(const SeparationDto&, const SeparationDto&) = default;
};

struct KindSection {
  std::string kind;
  InvariantProfile invariants;
  Measure arity;
  GeometryDto geometry;
  SeparationDto separation;
  std::vector<std::string> extreme_points;  // of the whole carrier
  friend bool operator==(const KindSection&, const KindSection&) = default;
};

struct InstanceDto {
  std::string id;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  friend bool operator==(const InstanceDto&, const InstanceDto&) = default;
};

struct AnalysisReport {
  std::string schema = kSchema;
  InstanceDto instance;
  bool is_semilattice = false;
  StructureClass structure_class;
  std::vector<KindSection> kinds;
  std::vector<TheoremDto> theorems;

  bool any_failure() const {
    return std::any_of(theorems.begin(), theorems.end(), [](const TheoremDto& t) { return t.failed(); });
  }
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// ---- JSON ----

inline void to_json(nlohmann::json& j, const WitnessDto& w) {
  j = {{"note", w.note}, {"sets", w.sets}, {"points", w.points}};
}
inline void from_json(const nlohmann::json& j, WitnessDto& w) {
  j.at("note").get_to(w.note);
  j.at("sets").get_to(w.sets);
  j.at("points").get_to(w.points);
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& o) {
  return o ? nlohmann::json(*o) : nlohmann::json(nullptr);
}
template <typename T>
std::optional<T> optional_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

inline void to_json(nlohmann::json& j, const TheoremDto& t) {
  j = {{"theorem_id", t.theorem_id}, {"instance_id", t.instance_id}, {"hypotheses_met", t.hypotheses_met},
       {"holds", t.holds},           {"witness", optional_json(t.witness)}, {"elapsed_us", t.elapsed_us},
       {"metrics", t.metrics}};
}
inline void from_json(const nlohmann::json& j, TheoremDto& t) {
  j.at("theorem_id").get_to(t.theorem_id);
  j.at("instance_id").get_to(t.instance_id);
  j.at("hypotheses_met").get_to(t.hypotheses_met);
  j.at("holds").get_to(t.holds);
  t.witness = optional_from<WitnessDto>(j.at("witness"));
  j.at("elapsed_us").get_to(t.elapsed_us);
  j.at("metrics").get_to(t.metrics);
}

inline void to_json(nlohmann::json& j, const GeometryDto& g) {
  j = {{"status", g.status}, {"is_convex_geometry", g.is_convex_geometry}, {"conditions", g.conditions},
       {"witness", optional_json(g.witness)}};
}
inline void from_json(const nlohmann::json& j, GeometryDto& g) {
  j.at("status").get_to(g.status);
  j.at("is_convex_geometry").get_to(g.is_convex_geometry);
  j.at("conditions").get_to(g.conditions);
  g.witness = optional_from<WitnessDto>(j.at("witness"));
}

inline void to_json(nlohmann::json& j, const SeparationDto& s) {
  j = {{"status", s.status}, {"s0", s.s[0]}, {"s1", s.s[1]}, {"s2", s.s[2]}, {"s3", s.s[3]}, {"s4", s.s[4]},
       {"halfspace_count", s.halfspace_count}, {"witnesses", s.witnesses}};
}
inline void from_json(const nlohmann::json& j, SeparationDto& s) {
  j.at("status").get_to(s.status);
  for (std::size_t i = 0; i < 5; ++i) j.at("s" + std::to_string(i)).get_to(s.s[i]);
  j.at("halfspace_count").get_to(s.halfspace_count);
  j.at("witnesses").get_to(s.witnesses);
}

inline void to_json(nlohmann::json& j, const KindSection& k) {
  j = {{"kind", k.kind},           {"invariants", k.invariants},         {"arity", k.arity},
       {"geometry", k.geometry},   {"separation", k.separation},         {"extreme_points", k.extreme_points}};
}
inline void from_json(const nlohmann::json& j, KindSection& k) {
  j.at("kind").get_to(k.kind);
  j.at("invariants").get_to(k.invariants);
  j.at("arity").get_to(k.arity);
  j.at("geometry").get_to(k.geometry);
  j.at("separation").get_to(k.separation);
  j.at("extreme_points").get_to(k.extreme_points);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InstanceDto, id, elements, covers)

inline void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = {{"schema", r.schema},
       {"instance", r.instance},
       {"is_semilattice", r.is_semilattice},
       {"class", r.structure_class},
       {"kinds", r.kinds},
       {"theorems", r.theorems}};
}
inline void from_json(const nlohmann::json& j, AnalysisReport& r) {
  j.at("schema").get_to(r.schema);
  if (r.schema != kSchema) throw Error(ErrorCode::ParseError, "unsupported report schema '" + r.schema + "'");
  j.at("instance").get_to(r.instance);
  j.at("is_semilattice").get_to(r.is_semilattice);
  j.at("class").get_to(r.structure_class);
  j.at("kinds").get_to(r.kinds);
  j.at("theorems").get_to(r.theorems);
}

// ---- conversion from library results ----

inline std::vector<std::string> names_of(const FinitePoset& p, ElementSet s) {
  std::vector<std::string> out;
  for (Element x : s) out.push_back(p.name(x));
  return out;
}

inline WitnessDto to_dto(const FinitePoset& p, const Witness& w) {
  WitnessDto d{w.note, {}, {}};
  for (const auto& [label, s] : w.sets) d.sets.emplace_back(label, names_of(p, s));
  for (const auto& [label, x] : w.points) d.points.emplace_back(label, p.name(x));
  return d;
}

inline TheoremDto to_dto(const FinitePoset& p, const TheoremReport& r, bool timings) {
  TheoremDto d;
  d.theorem_id = r.theorem_id;
  d.instance_id = r.instance_id;
  d.hypotheses_met = r.hypotheses_met;
  d.holds = r.holds;
  if (r.witness) d.witness = to_dto(p, *r.witness);
  d.elapsed_us = timings ? static_cast<long long>(r.elapsed.count()) : 0;
  d.metrics = r.metrics;
  return d;
}

inline InstanceDto to_dto(const std::string& id, const FinitePoset& p) {
  InstanceDto d{id, p.names(), {}};
  for (auto [x, y] : p.cover_pairs()) d.covers.emplace_back(p.name(x), p.name(y));
  return d;
}

// ---- the analysis pipeline ----

struct AnalysisOptions {
  Caps caps = Caps::defaults();
  bool run_sections = true;  // per-kind invariants, geometry and separation
  bool run_theorems = true;
  bool timings = false;  // elapsed times vary between runs; off keeps reports reproducible
};

namespace detail {

// Bauer principles are checked exhaustively over all maps, so only on small structures.
inline constexpr std::size_t kBauerMaxElements = 4;
inline constexpr unsigned kBauerChainTop = 2;

/// Runs `body` over a family of cases, folding the per-case reports into one:
/// fails on the first failing case, vacuous if no case met its hypotheses,
/// vacuous with a note if a cap was hit.
inline TheoremReport aggregate(const std::string& id, const std::function<void(std::vector<TheoremReport>&)>& body) {
  TheoremReport r;
  r.theorem_id = id;
  ReportTimer timer(r);
  std::vector<TheoremReport> cases;
  try {
    body(cases);
  } catch (const CapExceeded& e) {
    r.hypotheses_met = false;
    r.witness = Witness{std::string("not evaluated: ") + e.what(), {}, {}};
    return r;
  }
  std::size_t met = 0;
  for (const TheoremReport& c : cases) {
    if (!c.hypotheses_met) continue;
    ++met;
    if (!c.holds && r.holds) {
      r.holds = false;
      r.witness = c.witness;
      r.metrics = c.metrics;
    }
  }
  r.metric("cases", static_cast<long long>(met));
  if (met == 0) {
    r.hypotheses_met = false;
    if (!r.witness) r.witness = Witness{"no case met the hypotheses", {}, {}};
  }
  return r;
}

inline std::vector<TheoremReport> instance_theorems(const FinitePoset& p, const std::vector<ConvexityKind>& kinds,
                                                    const Caps& caps) {
  std::vector<TheoremReport> out;
  auto sr = try_join_structure(p);
  const JoinStructure* s = std::get_if<JoinStructure>(&sr);

  for (ConvexityKind kind : kinds) {
    const ConvexitySpace cs = s ? ConvexitySpace(*s, kind) : ConvexitySpace(p, kind);
    out.push_back(aggregate("convexity-axioms/" + std::string(to_string(kind)),
                            [&](auto& cases) { cases.push_back(verify_convexity_axioms(cs, caps)); }));
    if (!requires_join(kind)) {
      out.push_back(aggregate("krein-milman-poset/" + std::string(to_string(kind)), [&](auto& cases) {
        require_subset_scan(p.size(), caps, "krein-milman-poset");
        for_each_subset(p.carrier(), [&](ElementSet k) { cases.push_back(check_km_poset(p, kind, k)); });
      }));
      out.push_back(aggregate("milman-poset/" + std::string(to_string(kind)), [&](auto& cases) {
        require_subset_scan(p.size(), caps, "milman-poset");
        for_each_subset(p.carrier(), [&](ElementSet a) { cases.push_back(check_milman_poset(p, kind, hull(cs, a), a)); });
      }));
    }
    if (characterization_predicate(cs).has_value() &&
        (kind == ConvexityKind::Ideal || kind == ConvexityKind::OrderAlgebraicSemilattice ||
         kind == ConvexityKind::OrderAlgebraicLattice))
      out.push_back(aggregate("characterization/" + std::string(to_string(kind)),
                              [&](auto& cases) { cases.push_back(characterization_checks(cs, caps)); }));
  }
  if (!s) return out;

  const ConvexitySpace alg(*s, ConvexityKind::AlgebraicSemilattice);
  out.push_back(aggregate("krein-milman-semilattice", [&](auto& cases) {
    for (ElementSet k : enumerate_convex_sets(alg, caps)) cases.push_back(check_km_semilattice(*s, k));
  }));
  out.push_back(aggregate("milman-semilattice", [&](auto& cases) {
    require_subset_scan(p.size(), caps, "milman-semilattice");
    for_each_subset(p.carrier(),
                    [&](ElementSet a) { cases.push_back(check_milman_semilattice(*s, hull(alg, a), a, caps)); });
  }));
  out.push_back(aggregate("semilattice-identities", [&](auto& cases) {
    TheoremReport r;
    r.theorem_id = "semilattice-identities";
    const std::size_t d = depth(p), b = breadth(*s, caps);
    const std::size_t h = helly(alg, caps), c = clique_number(alg, caps), k = caratheodory(alg, caps);
    r.metric("depth", static_cast<long long>(d));
    r.metric("breadth", static_cast<long long>(b));
    r.metric("helly", static_cast<long long>(h));
    r.metric("clique_number", static_cast<long long>(c));
    r.metric("caratheodory", static_cast<long long>(k));
    if (h != d) r.fail(Witness{"Helly number differs from depth", {}, {}});
    if (c != d) r.fail(Witness{"clique number differs from depth", {}, {}});
    if (k != b) r.fail(Witness{"Caratheodory number differs from breadth", {}, {}});
    cases.push_back(std::move(r));
  }));
  out.push_back(aggregate("depth-count", [&](auto& cases) {
    if (!is_distributive_semilattice(*s)) return;
    // Applied to subsemilattices that are distributive in their own right.
    for (ElementSet k : enumerate_convex_sets(alg, caps)) {
      if (k.empty() || !is_distributive_semilattice(substructure(*s, k))) continue;
      cases.push_back(check_depth_count(*s, k));
    }
  }));
  if (s->size() <= kBauerMaxElements) {
    // Every map of every nonempty subsemilattice into the chain 0 < 1 < 2.
    auto each_map = [&](auto&& visit) {
      for (ElementSet k : enumerate_convex_sets(alg, caps)) {
        if (k.empty()) continue;
        const std::vector<Element> xs = k.to_vector();
        ChainMap f{std::vector<unsigned>(s->size(), 0), kBauerChainTop};
        std::size_t count = 1;
        for (std::size_t i = 0; i < xs.size(); ++i) count *= kBauerChainTop + 1;
        for (std::size_t code = 0; code < count; ++code) {
          std::size_t c = code;
          for (Element x : xs) {
            f.values[x] = static_cast<unsigned>(c % (kBauerChainTop + 1));
            c /= kBauerChainTop + 1;
          }
          visit(k, f, chain_map_flags(*s, k, f));
        }
      }
    };
    out.push_back(aggregate("bauer-max", [&](auto& cases) {
      each_map([&](ElementSet k, const ChainMap& f, const ChainMapFlags& fl) {
        if (fl.is_convex) cases.push_back(check_bauer_max(*s, k, f));
      });
    }));
    out.push_back(aggregate("bauer-min", [&](auto& cases) {
      each_map([&](ElementSet k, const ChainMap& f, const ChainMapFlags& fl) {
        const bool constant_top = std::all_of(k.begin(), k.end(), [&](Element x) { return f(x) == f.top; });
        if (fl.is_quasiconcave && !constant_top) cases.push_back(check_bauer_min(*s, k, f));
      });
    }));
  }
  if (s->bottom()) {
    out.push_back(aggregate("free-module", [&](auto& cases) { cases.push_back(check_free_module(*s, caps)); }));
    out.push_back(aggregate("martinez", [&](auto& cases) { cases.push_back(check_martinez_equivalence(*s, caps)); }));
  }
  if (s->has_meet() && is_distributive_lattice(*s)) {
    out.push_back(aggregate("monjardet-wille-erne", [&](auto& cases) { cases.push_back(mwe_conditions(*s)); }));
    out.push_back(aggregate("minkowski", [&](auto& cases) {
      for (ElementSet k : enumerate_convex_sets(alg, caps)) cases.push_back(check_minkowski(*s, k, caps));
    }));
  }
  return out;
}

}  // namespace detail

inline KindSection analyze_kind(const ConvexitySpace& cs, const Caps& caps) {
  const FinitePoset& p = cs.poset();
  KindSection k;
  k.kind = std::string(to_string(cs.kind()));
  k.invariants = invariant_profile(cs, caps);
  k.arity = orderconvex::detail::measure([&] { return arity(cs, caps); });
  k.extreme_points = names_of(p, extreme_points(cs, cs.carrier()));
  try {
    const ConvexGeometryVerdict v = convex_geometry(cs, caps);
    k.geometry.is_convex_geometry = v.is_convex_geometry;
    k.geometry.conditions = v.condition;
    for (const auto& w : v.witness)
      if (w) {
        k.geometry.witness = to_dto(p, *w);
        break;
      }
  } catch (const CapExceeded&) {
    k.geometry.status = "cap-exceeded";
  }
  try {
    const SeparationProfile sp = separation_profile(cs, caps);
    k.separation.s = sp.s;
    k.separation.halfspace_count = halfspaces(cs, caps).size();
    for (std::size_t i = 0; i < 5; ++i)
      if (sp.witness[i]) k.separation.witnesses.emplace_back("s" + std::to_string(i), to_dto(p, *sp.witness[i]));
  } catch (const CapExceeded&) {
    k.separation.status = "cap-exceeded";
  }
  return k;
}

/// Runs every module on one structure for the requested kinds (all applicable
/// kinds when `kinds` is empty). Deterministic for fixed inputs and options.
inline AnalysisReport analyze(const FinitePoset& p, const std::string& instance_id, std::vector<ConvexityKind> kinds,
                              const AnalysisOptions& options = {}) {
  const std::vector<ConvexityKind> applicable = applicable_kinds(p);
  if (kinds.empty()) kinds = applicable;
  for (ConvexityKind k : kinds)
    if (std::find(applicable.begin(), applicable.end(), k) == applicable.end())
      throw Error(ErrorCode::KindNotApplicable,
                  "the " + std::string(to_string(k)) + " convexity does not apply to '" + instance_id + "'");
  AnalysisReport r;
  r.instance = to_dto(instance_id, p);
  auto sr = try_join_structure(p);
  const JoinStructure* s = std::get_if<JoinStructure>(&sr);
  r.is_semilattice = s != nullptr;
  r.structure_class = s ? classify(*s) : classify(p);
  if (options.run_sections)
    for (ConvexityKind k : kinds) r.kinds.push_back(analyze_kind(s ? ConvexitySpace(*s, k) : ConvexitySpace(p, k), options.caps));
  if (options.run_theorems)
    for (TheoremReport& t : detail::instance_theorems(p, kinds, options.caps)) {
      t.instance_id = instance_id;
      r.theorems.push_back(to_dto(p, t, options.timings));
    }
  std::sort(r.theorems.begin(), r.theorems.end(),
            [](const TheoremDto& a, const TheoremDto& b) { return a.theorem_id < b.theorem_id; });
  return r;
}

}  // namespace orderconvex::workbench
