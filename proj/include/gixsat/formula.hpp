// Core representation of GiXSAT formulas.
//
// A clause C^j is a multiset of literals that is satisfied iff exactly j of
// its literals (counted with multiplicity) are true.  Literals are stored as
// a sorted vector so that multiplicity is just a run length.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gixsat {

using Var = std::uint32_t;  // 1-based; 0 is never a valid variable

class Lit {
 public:
  constexpr Lit() = default;
  constexpr Lit(Var v, bool positive) : code_(2 * v + (positive ? 0u : 1u)) {}

  static Lit from_dimacs(long long x) {
    return x > 0 ? Lit(static_cast<Var>(x), true) : Lit(static_cast<Var>(-x), false);
  }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool positive() const { return (code_ & 1u) == 0; }
  constexpr Lit operator~() const { return from_code(code_ ^ 1u); }
  constexpr std::uint32_t code() const { return code_; }
  long long to_dimacs() const {
    return positive() ? static_cast<long long>(var()) : -static_cast<long long>(var());
  }
  // Truth of this literal when its variable takes value `v`.
  constexpr bool holds(bool v) const { return positive() ? v : !v; }

  constexpr auto operator<=>(const Lit&) const = default;

 private:
  static constexpr Lit from_code(std::uint32_t c) {
    Lit l;
    l.code_ = c;
    return l;
  }
  std::uint32_t code_ = 0;
};

struct Clause {
  int target = 0;
  std::vector<Lit> lits;  // sorted; repeats encode multiplicity

  Clause() = default;
  Clause(int t, std::vector<Lit> ls);

  std::size_t size() const { return lits.size(); }
  bool empty() const { return lits.empty(); }
  int multiplicity(Lit l) const;
  // Occurrences of the variable regardless of sign.
  int occurrences(Var v) const;
  bool contains_var(Var v) const { return occurrences(v) > 0; }
  // Distinct variables, ascending.
  std::vector<Var> vars() const;
  // Distinct literals paired with their multiplicities, in literal order.
  std::vector<std::pair<Lit, int>> runs() const;
  // Net signed multiplicity of v: (#v) - (#~v).
  int net(Var v) const;
  void normalize();  // sort literals

  bool operator==(const Clause&) const = default;
};

struct Formula {
  Var num_vars = 0;
  std::vector<Clause> clauses;

  Formula() = default;
  Formula(Var n, std::vector<Clause> cs) : num_vars(n), clauses(std::move(cs)) {}

  int max_target() const;
  bool empty() const { return clauses.empty(); }
  bool operator==(const Formula&) const = default;
};

// Total assignment indexed by variable; entry 0 is unused.
using Assignment = std::vector<std::uint8_t>;
using PartialAssignment = std::vector<std::optional<bool>>;

struct Unassigned {
  bool operator==(const Unassigned&) const = default;
};
struct Constant {
  bool value;
  bool operator==(const Constant&) const = default;
};
struct LinkedTo {
  Lit partner;
  bool operator==(const LinkedTo&) const = default;
};
// x was eliminated using C^1 clauses (alpha | x) and (beta | ~x);
// x equals the number of true literals of beta.
struct ResolvedBy {
  std::vector<Lit> alpha;
  std::vector<Lit> beta;
  bool operator==(const ResolvedBy&) const = default;
};
using VarState = std::variant<Unassigned, Constant, LinkedTo, ResolvedBy>;

class Trail {
 public:
  Trail() = default;
  explicit Trail(Var n) : state_(n + 1, Unassigned{}) {}

  Var num_vars() const { return state_.empty() ? 0 : static_cast<Var>(state_.size() - 1); }
  const VarState& state(Var v) const { return state_.at(v); }
  bool is_unassigned(Var v) const { return std::holds_alternative<Unassigned>(state_.at(v)); }
  // Elimination events in chronological order.
  const std::vector<Var>& order() const { return order_; }

  void set_constant(Var v, bool value);
  void set_link(Var v, Lit partner);
  void set_resolved(Var v, std::vector<Lit> alpha, std::vector<Lit> beta);

  // Fills eliminated variables from the values of the roots.  Throws
  // std::logic_error when an eliminated variable depends on an unvalued root.
  Assignment reconstruct(const PartialAssignment& roots) const;
  // Convenience: every unassigned root takes `fill`, except those in `roots`.
  Assignment reconstruct_with_default(const PartialAssignment& roots, bool fill = false) const;

 private:
  void check_fresh(Var v) const;
  std::vector<VarState> state_;
  std::vector<Var> order_;
};

enum class Outcome { Ok, Conflict };

// Removes v from every clause, folding its value into the targets.
[[nodiscard]] Outcome assign(Formula& f, Trail& t, Var v, bool value);
// Makes literal `l` true (value=true) or false.
[[nodiscard]] Outcome assign_lit(Formula& f, Trail& t, Lit l, bool value);
// Replaces v by `partner` (and ~v by ~partner), cancelling x/~x pairs.
[[nodiscard]] Outcome link(Formula& f, Trail& t, Var v, Lit partner);
// Forces literal a to equal literal b by eliminating var(a).
[[nodiscard]] Outcome equate(Formula& f, Trail& t, Lit a, Lit b);

// Removes complementary pairs, decrementing the target once per pair.
void cancel_complements(Clause& c);
// target < 0 or target > |C|.
bool cheap_conflict(const Clause& c);

bool evaluate(const Clause& c, const Assignment& a);
bool evaluate(const Formula& f, const Assignment& a);
int true_count(const Clause& c, const Assignment& a);

int degree(const Formula& f, Var v);
bool is_heavy(const Formula& f, Var v);

// Variables that occur in at least one clause, ascending.
std::vector<Var> constrained_vars(const Formula& f);

std::string to_string(Lit l);
std::string to_string(const Clause& c);

}  // namespace gixsat
