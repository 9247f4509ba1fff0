// Internal: branch prescriptions and the generic search driver used by the
// three line-by-line deciders.

#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "gixsat/analysis.hpp"
#include "gixsat/solve.hpp"

namespace gixsat::detail {

struct SetLit {  // make `lit` take `value`
  Lit lit;
  bool value;
};
struct Equate {  // literal a := literal b
  Lit a, b;
};
struct AddClause {  // subclause constraint, appended
  Clause clause;
};
struct ReplaceClause {
  std::size_t index;
  Clause clause;
};
struct ResolveVar {  // simplify, then resolve if the precondition holds
  Var var;
};
using Action = std::variant<SetLit, Equate, AddClause, ReplaceClause, ResolveVar>;
using Branch = std::vector<Action>;

struct Decision {
  enum class Kind { Rewrite, Branching, Refute, Endgame };
  Kind kind = Kind::Branching;
  std::string line;  // e.g. "L9.overlap2"
  std::vector<Branch> branches;
  bool debt = false;  // measure decrease deferred to the follow-up branching
  bool fallback = false;
};

Decision rewrite(std::string line, Branch actions);
Decision branching(std::string line, std::vector<Branch> branches, bool debt = false);
Decision refute(std::string line);

using Decider = std::function<Decision(const Formula&)>;

SolveResult run_search(const Formula& input, Scheme scheme, const std::string& prefix,
                       const Decider& decide, const SolveOptions& opt);

// ---- shared helpers for the deciders ----

// The literal of v in c (first occurrence); c must contain v.
Lit lit_of(const Clause& c, Var v);
std::vector<Var> shared_vars(const Clause& a, const Clause& b);
std::vector<Var> only_in(const Clause& a, const Clause& b);  // Var(a) - Var(b)
// Exact linear combination a + sign*b of the two count equations, written
// back as a clause (complements folded into the target).
Clause combine(const Clause& a, int sign, const Clause& b);
int max_multiplicity(const Clause& c);
bool all_single(const Clause& c);

// Single-clause reasoning: enumerates the clause's own solutions and returns
// variables forced to a constant; failing that, the first pair of variables
// that is always equal or always opposite.  `infeasible` when no solution.
struct Inference {
  bool infeasible = false;
  Branch deductions;
};
Inference infer_clause(const Clause& c);

Branch set_all(const std::vector<Lit>& lits, bool value);
std::vector<Branch> split_on(Lit x);                  // x=1 | x=0
std::vector<Branch> split_link_or_zero(Lit x, Lit y);  // x=~y | x=y=0
std::vector<Branch> split_three_way(Lit x, Lit y);     // x=y=1 | x=~y | x=y=0
std::vector<Branch> split_four_c2(const std::vector<Lit>& xyzw);  // C^2 over x,y,z,w

// Lowest variable of the formula, branched 1/0; used where no subcase fits.
Decision fallback_lowest(const Formula& f, std::string line);

bool is_c1(const Clause& c);
bool is_c2(const Clause& c);

}  // namespace gixsat::detail
