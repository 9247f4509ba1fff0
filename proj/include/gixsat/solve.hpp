// Results and options shared by every solver route.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gixsat/errors.hpp"
#include "gixsat/formula.hpp"
#include "gixsat/simplify.hpp"

namespace gixsat {

enum class Status { Sat, Unsat };

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  int max_depth = 0;
  std::map<std::string, std::uint64_t> rule_fires;  // keyed "g2.L9.overlap2" etc.
  double measure_at_root = 0;

  // Measure instrumentation (only filled when SolveOptions::check_measure).
  std::uint64_t measure_checks = 0;
  std::uint64_t measure_violations = 0;
  std::uint64_t debt_deferrals = 0;  // non-decrease across a debt-taking branch
  std::map<std::string, std::uint64_t> violations_by_rule;

  // Times no listed subcase matched and the lowest variable was branched.
  std::uint64_t fallbacks = 0;
  SimplifyCounters simplify;
  // Route-specific figures, e.g. cover size for meet-in-the-middle.
  std::map<std::string, double> info;
};

struct SolveOptions {
  bool want_model = true;
  bool check_measure = false;
  Deadline deadline;
};

struct SolveResult {
  Status status = Status::Unsat;
  std::optional<Assignment> model;
  SearchStats stats;
};

inline const char* to_string(Status s) { return s == Status::Sat ? "SATISFIABLE" : "UNSATISFIABLE"; }

}  // namespace gixsat
