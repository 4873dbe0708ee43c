#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orderconvex/element_set.hpp"

namespace orderconvex {

/// Structured counterexample: named sets and points, rendered by name in reports.
struct Witness {
  std::string note;
  std::vector<std::pair<std::string, ElementSet>> sets;
  std::vector<std::pair<std::string, Element>> points;

  Witness& set(std::string label, ElementSet s) {
    sets.emplace_back(std::move(label), s);
    return *this;
  }
  Witness& point(std::string label, Element x) {
    points.emplace_back(std::move(label), x);
    return *this;
  }
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one checker on one instance. When hypotheses are not met the
/// result is vacuous and `holds` stays true.
struct TheoremReport {
  std::string theorem_id;
  std::string instance_id;
  bool hypotheses_met = true;
  bool holds = true;
  std::optional<Witness> witness;
  std::chrono::microseconds elapsed{0};
  /// Free-form quantities a checker wants surfaced (witness sizes, counts).
  std::vector<std::pair<std::string, long long>> metrics;

  bool failed() const { return hypotheses_met && !holds; }

  void fail(Witness w) {
    holds = false;
    if (!witness) witness = std::move(w);
  }
  void metric(std::string key, long long value) { metrics.emplace_back(std::move(key), value); }

  static TheoremReport vacuous(std::string theorem, std::string note) {
    TheoremReport r;
    r.theorem_id = std::move(theorem);
    r.hypotheses_met = false;
    r.witness = Witness{std::move(note), {}, {}};
    return r;
  }
};

/// Measures wall time of a checker body into report.elapsed.
class ReportTimer {
 public:
  explicit ReportTimer(TheoremReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_);
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  TheoremReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace orderconvex
