// Brute-force reference solver.  No pruning: every assignment is evaluated.

#pragma once

#include <cstdint>
#include <optional>

#include "gixsat/errors.hpp"
#include "gixsat/formula.hpp"

namespace gixsat {

struct OracleReport {
  bool sat = false;
  std::uint64_t model_count = 0;
  std::optional<Assignment> first_model;  // lowest index; variable 1 is bit 0
};

inline constexpr unsigned kDefaultOracleLimit = 24;
inline constexpr unsigned kHardOracleLimit = 40;

// kDefaultOracleLimit unless GIXSAT_ORACLE_LIMIT holds a valid override.
unsigned oracle_limit();

// Throws ResourceError when num_vars exceeds `limit`.
OracleReport brute_solve(const Formula& f, unsigned limit = oracle_limit(),
                         const Deadline& deadline = {});
// Single-threaded reference for the OpenMP sweep above.
OracleReport brute_solve_serial(const Formula& f, unsigned limit = oracle_limit(),
                                const Deadline& deadline = {});

// Exact solutions of a single clause over its own variables.
std::uint64_t count_clause_solutions(const Clause& c);

}  // namespace gixsat
