// Exponential-space meet-in-the-middle solver.
//
// The covered side is a set of whole clauses S (plus at most one boundary
// clause cut into an inside and an outside part).  Its partial solutions are
// enumerated clause by clause and indexed by how many literals they make true
// in every remaining clause; the complement is then swept exhaustively.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gixsat/solve.hpp"

namespace gixsat {

struct BoundaryClause {
  std::size_t clause = 0;
  std::vector<std::size_t> inside;   // literal positions on the covered side
  std::vector<std::size_t> outside;  // literal positions on the complement side
};

struct SplitPlan {
  double alpha = 0.5;
  std::vector<std::size_t> cover;  // S, in enumeration order
  std::optional<BoundaryClause> boundary;
  std::vector<Var> covered_vars;
  std::vector<Var> complement_vars;
  std::vector<Var> free_vars;      // occur in no clause
  std::vector<std::size_t> shared;  // S': every clause not in S, ascending
};

// Per S' clause, literals made true by the covered side.
using ContributionVector = std::vector<std::uint8_t>;

double default_alpha(int max_target);  // 0.600823 / 0.57712 / 0.5633

SplitPlan choose_cover(const Formula& f, double alpha);

// Values aligned with plan.covered_vars.
using CoverEmit = std::function<void(const std::vector<std::uint8_t>&, const ContributionVector&)>;
void enumerate_cover_side(const Formula& f, const SplitPlan& plan, const CoverEmit& emit);
std::uint64_t count_cover_side(const Formula& f, const SplitPlan& plan);

enum class Sweep { Parallel, Serial };

// Targets must not exceed 4 (std::invalid_argument).  Memory exhaustion is
// reported as ResourceError.
SolveResult solve_mitm(const Formula& f, std::optional<double> alpha = std::nullopt,
                       const SolveOptions& opt = {}, Sweep sweep = Sweep::Parallel);

}  // namespace gixsat
