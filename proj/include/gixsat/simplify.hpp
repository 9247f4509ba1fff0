// Polynomial-time simplification shared by all three search algorithms.

#pragma once

#include <array>
#include <cstdint>

#include "gixsat/formula.hpp"

namespace gixsat {

enum class SimplifyStatus { Simplified, Unsatisfiable };

// Rule letters in priority order:
//   a unsatisfiable clause   b x/~x cancellation   c over-occurrence
//   d uniform multiplicity   e 2-literal C^1 link  f C^0 / saturated clause
//   g negation downgrade     h drop empty satisfied clauses
enum class SimplifyRule : int { A = 0, B, C, D, E, F, G, H };
inline constexpr int kSimplifyRules = 8;

struct SimplifyCounters {
  std::array<std::uint64_t, kSimplifyRules> fired{};
  std::uint64_t total() const;
};

// Applies rules a..h until none fires.  The formula and trail are updated in
// place; on Unsatisfiable their contents are unspecified.
SimplifyStatus simplify_to_fixpoint(Formula& f, Trail& t, SimplifyCounters* counters = nullptr);

// Single step: applies the highest-priority applicable rule.  Returns the rule
// that fired, or nullopt at a fixpoint.  `unsat` is set when rule a fires or a
// rule produced a conflict.
std::optional<SimplifyRule> simplify_step(Formula& f, Trail& t, bool& unsat);

// Basic structural feasibility of one clause (rule a).
bool clause_obviously_unsat(const Clause& c);

// Resolution needs C^1 clauses (alpha | x) and (beta | ~x), x occurring once in each.
bool can_resolve(const Formula& f, Var x);
// Replaces x by beta and ~x by alpha everywhere.  Throws std::logic_error if
// can_resolve(f, x) is false.
[[nodiscard]] Outcome resolve(Formula& f, Trail& t, Var x);

}  // namespace gixsat
