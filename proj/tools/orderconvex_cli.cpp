// orderconvex: command-line front end to the library and workbench.
//
// Exit codes: 0 success, 1 theorem failure, 2 input or usage error,
// 3 cap exceeded where an exact answer was required.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orderconvex/orderconvex.hpp"

namespace oc = orderconvex;
namespace wb = orderconvex::workbench;

namespace {

enum Exit : int { kOk = 0, kTheoremFailure = 1, kInputError = 2, kCapExceeded = 3 };

struct Common {
  std::size_t cap_subsets = 0;      // 0: keep default
  std::size_t cap_convex_sets = 0;  // 0: keep default
  std::uint64_t seed = 0;
};

/// ORDERCONVEX_CAPS="subset_bits=16,convex_sets=65536,family_pairs=...,max_elements=..."
oc::Caps caps_from_environment() {
  oc::Caps caps;
  const char* env = std::getenv("ORDERCONVEX_CAPS");
  if (!env) return caps;
  std::stringstream in(env);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw oc::Error(oc::ErrorCode::ParseError, "ORDERCONVEX_CAPS: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw oc::Error(oc::ErrorCode::ParseError, "ORDERCONVEX_CAPS: bad value in '" + item + "'");
    }
    if (key == "max_elements") caps.max_elements = value;
    else if (key == "subset_bits") caps.subset_bits = value;
    else if (key == "convex_sets") caps.convex_sets = value;
    else if (key == "family_pairs") caps.family_pairs = value;
    else throw oc::Error(oc::ErrorCode::ParseError, "ORDERCONVEX_CAPS: unknown key '" + key + "'");
  }
  return caps;
}

oc::Caps effective_caps(const Common& c) {
  oc::Caps caps = caps_from_environment();
  if (c.cap_subsets) caps.subset_bits = c.cap_subsets;
  if (c.cap_convex_sets) caps.convex_sets = c.cap_convex_sets;
  return caps;
}

/// "gen:<spec>" builds a generated instance, anything else is a file path.
oc::FinitePoset load_input(const std::string& input, const oc::Caps& caps) {
  if (input.rfind("gen:", 0) == 0) return wb::generate(input.substr(4), caps);
  return wb::read_poset_file(input, caps);
}

std::vector<oc::ConvexityKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<oc::ConvexityKind> kinds;
  for (const std::string& list : names) {
    std::stringstream in(list);
    for (std::string name; std::getline(in, name, ',');)
      if (!name.empty()) kinds.push_back(oc::parse_kind(name));
  }
  return kinds;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw oc::Error(oc::ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

std::string set_names(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

std::string measure_text(const oc::Measure& m) {
  switch (m.state) {
    case oc::Measure::State::Value: return std::to_string(m.value);
    case oc::Measure::State::NotApplicable: return "n/a";
    case oc::Measure::State::CapExceeded: return "cap-exceeded";
  }
  return "?";
}

void print_invariants(std::ostream& out, const oc::InvariantProfile& p) {
  out << "  invariants: breadth=" << measure_text(p.breadth) << " depth=" << measure_text(p.depth)
      << " clique=" << measure_text(p.clique_number) << " rank=" << measure_text(p.rank)
      << " caratheodory=" << measure_text(p.caratheodory) << " helly=" << measure_text(p.helly) << '\n';
}

void print_geometry(std::ostream& out, const wb::GeometryDto& g) {
  if (g.status != "ok") {
    out << "  geometry: " << g.status << '\n';
    return;
  }
  out << "  geometry: convex_geometry=" << (g.is_convex_geometry ? "yes" : "no") << " conditions=";
  for (bool c : g.conditions) out << c;
  if (g.witness) out << " (" << g.witness->note << ")";
  out << '\n';
}

void print_separation(std::ostream& out, const wb::SeparationDto& s) {
  if (s.status != "ok") {
    out << "  separation: " << s.status << '\n';
    return;
  }
  out << "  separation:";
  for (std::size_t i = 0; i < 5; ++i) out << " S" << i << '=' << (s.s[i] ? "yes" : "no");
  out << " halfspaces=" << s.halfspace_count << '\n';
}

void print_theorem(std::ostream& out, const wb::TheoremDto& t) {
  const char* verdict = !t.hypotheses_met ? "vacuous" : t.holds ? "holds" : "FAILS";
  out << "  " << t.theorem_id << ": " << verdict;
  for (const auto& [k, v] : t.metrics) out << ' ' << k << '=' << v;
  if (t.witness) {
    out << " -- " << t.witness->note;
    for (const auto& [label, names] : t.witness->sets) out << ' ' << label << '=' << set_names(names);
    for (const auto& [label, name] : t.witness->points) out << ' ' << label << '=' << name;
  }
  out << '\n';
}

void print_report(std::ostream& out, const wb::AnalysisReport& r) {
  const auto& c = r.structure_class;
  out << r.instance.id << ": " << r.instance.elements.size() << " elements, "
      << (!r.is_semilattice            ? "poset"
          : c.is_distributive_lattice   ? "distributive lattice"
          : c.is_lattice                ? "lattice"
          : c.is_distributive_semilattice ? "distributive join-semilattice"
                                        : "join-semilattice")
      << (c.is_chain ? ", chain" : "") << (c.is_antichain ? ", antichain" : "") << (c.is_tree ? ", tree" : "")
      << '\n';
  for (const wb::KindSection& k : r.kinds) {
    out << "[" << k.kind << "]\n";
    print_invariants(out, k.invariants);
    out << "  arity: " << measure_text(k.arity) << '\n';
    out << "  extreme points: " << set_names(k.extreme_points) << '\n';
    print_geometry(out, k.geometry);
    print_separation(out, k.separation);
  }
  if (!r.theorems.empty()) out << "theorems:\n";
  for (const wb::TheoremDto& t : r.theorems) print_theorem(out, t);
}

/// Fig. 4 convention on lattices (gray: coirreducible, black: dual coirreducible);
/// otherwise the extreme points of the first analysed kind in gray.
wb::DotHighlight highlight_for(const oc::FinitePoset& p, const std::vector<oc::ConvexityKind>& kinds) {
  auto sr = oc::try_join_structure(p);
  if (const auto* s = std::get_if<oc::JoinStructure>(&sr); s && s->has_meet()) {
    const oc::ElementClassifier e = oc::element_classes(*s, s->carrier());
    return {e.coirreducible, e.dual_coirreducible};
  }
  if (kinds.empty()) return {};
  const oc::ConvexitySpace cs(p, kinds.front());
  return {oc::extreme_points(cs, cs.carrier()), {}};
}

// ---- subcommands ----

int run_analyze(const Common& common, const std::string& input, const std::vector<std::string>& kind_names,
                const std::string& json_path, const std::string& dot_path, bool no_theorems, bool timings) {
  const oc::Caps caps = effective_caps(common);
  const oc::FinitePoset p = load_input(input, caps);
  wb::AnalysisOptions options;
  options.caps = caps;
  options.run_theorems = !no_theorems;
  options.timings = timings;
  const std::vector<oc::ConvexityKind> kinds = parse_kinds(kind_names);
  const wb::AnalysisReport report = wb::analyze(p, input, kinds, options);
  print_report(std::cout, report);
  if (!json_path.empty()) write_file(json_path, nlohmann::json(report).dump(2) + "\n");
  if (!dot_path.empty())
    write_file(dot_path, wb::export_dot(p, highlight_for(p, kinds.empty() ? oc::applicable_kinds(p) : kinds)));
  return report.any_failure() ? kTheoremFailure : kOk;
}

enum class Section { Invariants, Geometry, Separation };

/// Single-section commands need an exact answer: a cap hit exits with 3.
int run_section(const Common& common, Section section, const std::string& input, const std::string& kind_name,
                bool json) {
  const oc::Caps caps = effective_caps(common);
  const oc::FinitePoset p = load_input(input, caps);
  const oc::ConvexityKind kind = oc::parse_kind(kind_name);
  auto sr = oc::try_join_structure(p);
  const auto* s = std::get_if<oc::JoinStructure>(&sr);
  const oc::ConvexitySpace cs = s ? oc::ConvexitySpace(*s, kind) : oc::ConvexitySpace(p, kind);
  const wb::KindSection k = wb::analyze_kind(cs, caps);
  nlohmann::json j;
  bool capped = false;
  switch (section) {
    case Section::Invariants: {
      const auto& v = k.invariants;
      for (const oc::Measure* m : {&v.breadth, &v.depth, &v.clique_number, &v.rank, &v.caratheodory, &v.helly})
        capped = capped || m->state == oc::Measure::State::CapExceeded;
      if (json) j = {{"kind", k.kind}, {"invariants", v}, {"arity", k.arity}};
      else {
        std::cout << "[" << k.kind << "]\n";
        print_invariants(std::cout, v);
        std::cout << "  arity: " << measure_text(k.arity) << '\n';
      }
      capped = capped || k.arity.state == oc::Measure::State::CapExceeded;
      break;
    }
    case Section::Geometry:
      capped = k.geometry.status != "ok";
      if (json) j = {{"kind", k.kind}, {"geometry", k.geometry}, {"extreme_points", k.extreme_points}};
      else {
        std::cout << "[" << k.kind << "]\n  extreme points: " << set_names(k.extreme_points) << '\n';
        print_geometry(std::cout, k.geometry);
      }
      break;
    case Section::Separation:
      capped = k.separation.status != "ok";
      if (json) j = {{"kind", k.kind}, {"separation", k.separation}};
      else {
        std::cout << "[" << k.kind << "]\n";
        print_separation(std::cout, k.separation);
      }
      break;
  }
  if (json) std::cout << j.dump(2) << '\n';
  return capped ? kCapExceeded : kOk;
}

/// Sweep instances: for every seed and every size 1..max_n, one instance of each
/// random family. Runs on a thread pool; results are collected per instance and
/// emitted in (instance_id, theorem_id) order, so output does not depend on scheduling.
int run_theorems(const Common& common, const std::string& input, const std::string& sweep, std::size_t seeds,
                 std::size_t jobs, const std::string& json_path, bool verbose) {
  const oc::Caps caps = effective_caps(common);
  std::vector<std::string> specs;
  if (!input.empty()) specs.push_back(input);
  if (!sweep.empty()) {
    if (sweep.rfind("n=", 0) != 0) throw oc::Error(oc::ErrorCode::ParseError, "--sweep expects n=<max>");
    std::size_t max_n = 0;
    try {
      max_n = std::stoul(sweep.substr(2));
    } catch (const std::exception&) {
      throw oc::Error(oc::ErrorCode::ParseError, "--sweep expects n=<max>");
    }
    for (std::size_t i = 0; i < seeds; ++i) {
      const std::string seed = std::to_string(common.seed + i);
      for (std::size_t n = 1; n <= max_n; ++n) {
        const std::string ns = std::to_string(n);
        specs.push_back("gen:semilattice:" + ns + ":" + seed);
        specs.push_back("gen:distributive:" + ns + ":" + seed);
        specs.push_back("gen:tree:" + ns + ":" + seed);
        specs.push_back("gen:poset:" + ns + ":0.4:" + seed);
      }
    }
  }
  if (specs.empty()) throw oc::Error(oc::ErrorCode::ParseError, "theorems needs an input or --sweep");

  struct Outcome {
    std::vector<wb::TheoremDto> theorems;
    std::string error;
    int code = kOk;
  };
  std::vector<Outcome> outcomes(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < specs.size();) {
      Outcome& o = outcomes[i];
      try {
        const oc::FinitePoset p = load_input(specs[i], caps);
        wb::AnalysisOptions options;
        options.caps = caps;
        options.run_sections = false;
        o.theorems = wb::analyze(p, specs[i], {}, options).theorems;
      } catch (const oc::CapExceeded& e) {
        o.error = e.what();
        o.code = kCapExceeded;
      } catch (const std::exception& e) {
        o.error = e.what();
        o.code = kInputError;
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(jobs, specs.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::size_t> order(specs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return specs[a] < specs[b]; });

  int code = kOk;
  std::size_t checked = 0, vacuous = 0, failed = 0;
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t i : order) {
    const Outcome& o = outcomes[i];
    if (o.code != kOk) {
      std::cerr << specs[i] << ": " << o.error << '\n';
      code = std::max(code, o.code);
      continue;
    }
    for (const wb::TheoremDto& t : o.theorems) {
      all.push_back(t);
      if (!t.hypotheses_met) ++vacuous;
      else ++checked;
      if (t.failed()) {
        ++failed;
        std::cout << t.instance_id << ' ';
        print_theorem(std::cout, t);
      } else if (verbose) {
        std::cout << t.instance_id << ' ';
        print_theorem(std::cout, t);
      }
    }
  }
  if (failed) code = std::max(code, static_cast<int>(kTheoremFailure));
  std::cout << specs.size() << " instances, " << checked << " theorem checks, " << vacuous << " vacuous, " << failed
            << " failures\n";
  if (!json_path.empty()) write_file(json_path, nlohmann::json{{"schema", wb::kSchema}, {"theorems", all}}.dump(2) + "\n");
  // A theorem failure is the more informative outcome than input errors in other instances.
  return failed ? kTheoremFailure : code;
}

int run_gen(const Common& common, const std::string& spec, const std::string& out_path, const std::string& format) {
  const oc::Caps caps = effective_caps(common);
  const oc::FinitePoset p = wb::generate(spec.rfind("gen:", 0) == 0 ? spec.substr(4) : spec, caps);
  std::string text;
  if (format == "json") text = wb::to_json_value(p).dump(2) + "\n";
  else if (format == "dot") text = wb::export_dot(p);
  else text = "# generated by: gen " + spec + "\n" + wb::to_text(p);
  if (out_path.empty() || out_path == "-") std::cout << text;
  else write_file(out_path, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abstract convexity on finite posets and semilattices"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Common common;
  app.add_option("--cap-subsets", common.cap_subsets, "Largest n for exhaustive 2^n subset scans");
  app.add_option("--cap-convex-sets", common.cap_convex_sets, "Largest enumerated family of convex sets");
  app.add_option("--seed", common.seed, "Base seed for random sweeps");

  std::string input, json_path, dot_path, kind, sweep, out_path, format = "text";
  std::vector<std::string> kinds;
  bool no_theorems = false, timings = false, json_flag = false, verbose = false;
  std::size_t seeds = 10, jobs = 0;

  auto* analyze = app.add_subcommand("analyze", "Run every analysis on one structure");
  analyze->add_option("input", input, "Poset file (text or JSON) or gen:<spec>")->required();
  analyze->add_option("--kinds", kinds, "Comma-separated convexity kinds (default: all applicable)");
  analyze->add_option("--json", json_path, "Write the JSON report to this file");
  analyze->add_option("--dot", dot_path, "Write the Hasse diagram (DOT) to this file");
  analyze->add_flag("--no-theorems", no_theorems, "Skip the theorem checkers");
  analyze->add_flag("--timings", timings, "Record elapsed times in the report");

  std::vector<std::pair<CLI::App*, Section>> sections;
  for (auto [name, section, help] : {std::tuple{"invariants", Section::Invariants, "Convexity invariants and arity"},
                                     std::tuple{"geometry", Section::Geometry, "Convex geometry verdict and extreme points"},
                                     std::tuple{"separation", Section::Separation, "Separation axioms S0-S4"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "Poset file or gen:<spec>")->required();
    sub->add_option("--kind", kind, "Convexity kind")->required();
    sub->add_flag("--json", json_flag, "Print JSON instead of text");
    sections.emplace_back(sub, section);
  }

  auto* theorems = app.add_subcommand("theorems", "Check the theorems on one structure or a random sweep");
  theorems->add_option("input", input, "Poset file or gen:<spec>");
  theorems->add_option("--sweep", sweep, "Random sweep over sizes 1..max, as n=<max>");
  theorems->add_option("--seeds", seeds, "Number of seeds in the sweep");
  theorems->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
  theorems->add_option("--json", json_path, "Write all theorem reports to this file");
  theorems->add_flag("--verbose", verbose, "Print every report, not only failures");

  auto* gen = app.add_subcommand("gen", "Generate a structure");
  gen->add_option("spec", input, "Generator spec, e.g. chain:4 or boolean:3")->required();
  gen->add_option("-o,--output", out_path, "Output file (default: stdout)");
  gen->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed()) return run_analyze(common, input, kinds, json_path, dot_path, no_theorems, timings);
    for (auto [sub, section] : sections)
      if (sub->parsed()) return run_section(common, section, input, kind, json_flag);
    if (theorems->parsed()) return run_theorems(common, input, sweep, seeds, jobs, json_path, verbose);
    if (gen->parsed()) return run_gen(common, input, out_path, format);
  } catch (const oc::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const oc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
