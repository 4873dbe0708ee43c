#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orderconvex {

enum class ErrorCode {
  CycleDetected,
  DuplicateElement,
  UnknownElement,
  InvalidRelation,
  ParseError,
  NotASemilattice,
  NotALattice,
  KindNotApplicable,
  CapExceeded,
  EmptyJoin,
  NoBottom,
  NotDistributive,
  NotConvex,
  NotUpperSet,
  PointInA,
  NotInUpSet,
  NotConvexMap,
  NotQuasiconcave,
  ConstantTop,
  HypothesisUnmet,
  NotASubset,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::InvalidRelation: return "InvalidRelation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotASemilattice: return "NotASemilattice";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::KindNotApplicable: return "KindNotApplicable";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EmptyJoin: return "EmptyJoin";
    case ErrorCode::NoBottom: return "NoBottom";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotUpperSet: return "NotUpperSet";
    case ErrorCode::PointInA: return "PointInA";
    case ErrorCode::NotInUpSet: return "NotInUpSet";
    case ErrorCode::NotConvexMap: return "NotConvexMap";
    case ErrorCode::NotQuasiconcave: return "NotQuasiconcave";
    case ErrorCode::ConstantTop: return "ConstantTop";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::NotASubset: return "NotASubset";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised instead of running an exhaustive search past its configured bound.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial_count)
      : Error(ErrorCode::CapExceeded, what + " (partial count " + std::to_string(partial_count) + ")"),
        partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// Bounds on exhaustive searches. Every search either finishes exactly or throws CapExceeded.
struct Caps {
  std::size_t max_elements = 24;       // carrier size accepted by build_poset
  std::size_t subset_bits = 20;        // largest n for which 2^n subsets are scanned
  std::size_t convex_sets = 1u << 18;  // largest enumerated convex family
  std::size_t family_pairs = 1u << 24; // pair checks over convex families (separation, axioms)

  static const Caps& defaults() {
    static const Caps c{};
    return c;
  }
};

inline void require_subset_scan(std::size_t bits, const Caps& caps, const char* what) {
  if (bits > caps.subset_bits) throw CapExceeded(std::string(what) + ": subset scan over 2^" + std::to_string(bits), 0);
}

}  // namespace orderconvex
