// Polynomial-space branch-and-reduce solvers for G2XSAT, G3XSAT and G4XSAT.

#pragma once

#include "gixsat/solve.hpp"

namespace gixsat {

// Targets must not exceed 2 / 3 / 4 respectively (std::invalid_argument).
SolveResult solve_g2(const Formula& f, const SolveOptions& opt = {});
SolveResult solve_g3(const Formula& f, const SolveOptions& opt = {});
SolveResult solve_g4(const Formula& f, const SolveOptions& opt = {});
// Picks the solver by the largest target.
SolveResult solve_auto(const Formula& f, const SolveOptions& opt = {});

// Decides a formula in which every variable has degree at most 2, by
// dynamic programming over each connected component of the clause graph.
// Throws std::logic_error when a heavy variable is present.
SolveResult endgame_low_degree(const Formula& f);

}  // namespace gixsat
