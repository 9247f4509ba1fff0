// G3XSAT and G4XSAT search.  Lines 1-5 are simplify_to_fixpoint.

#include <optional>
#include <stdexcept>

#include "gixsat/dpll.hpp"
#include "search.hpp"

namespace gixsat {

using namespace detail;

namespace {

std::vector<Lit> with_multiplicity(const Clause& c, int m) {
  std::vector<Lit> out;
  for (auto [l, k] : c.runs())
    if (k == m) out.push_back(l);
  return out;
}

// First literal of highest multiplicity.
Lit top_literal(const Clause& c) {
  Lit best = c.lits.front();
  int bm = 0;
  for (auto [l, k] : c.runs())
    if (k > bm) {
      best = l;
      bm = k;
    }
  return best;
}

std::string len_tag(const std::string& line, const Clause& c) {
  return line + ".len" + std::to_string(c.size());
}

// Inference on the clause alone, else 1/0 on its highest-multiplicity literal.
Decision infer_or_branch(const Clause& c, const std::string& line) {
  const auto inf = infer_clause(c);
  if (inf.infeasible) return refute(line + ".infeasible");
  if (!inf.deductions.empty()) return rewrite(line + ".deduce", inf.deductions);
  return branching(line + ".branch", split_on(top_literal(c)));
}

std::optional<Decision> c1_line(const Formula& f, const std::string& line) {
  for (const auto& c : f.clauses)
    if (c.target == 1) return branching(line, split_link_or_zero(c.lits[0], c.lits[1]));
  return std::nullopt;
}

// C^j with a repeated literal.  Returns nothing when all C^j are duplicate-free.
std::optional<Decision> repeated_line(const Formula& f, int j, const std::string& line) {
  for (const auto& c : f.clauses) {
    if (c.target != j || all_single(c)) continue;
    const int m = max_multiplicity(c);
    const Lit x = top_literal(c);
    if (j == 2) {
      if (c.size() == 4) return branching(line + ".len4", split_on(x));
      return infer_or_branch(c, line);
    }
    if (j == 3) {
      if (m == 3) {
        // 3x + delta = 3 with |delta| <= 2 forces x.
        if (c.size() - 3 <= 2) return rewrite(line + ".triple.short", {SetLit{x, true}});
        return branching(line + ".triple", split_on(x));
      }
      return infer_or_branch(c, line + ".double");
    }
    if (m == 4) return branching(line + ".quad", split_on(x));
    if (m == 3) return infer_or_branch(c, line + ".triple");
    const auto inf = infer_clause(c);
    if (inf.infeasible) return refute(line + ".double.infeasible");
    if (!inf.deductions.empty()) return rewrite(line + ".double.deduce", inf.deductions);
    const auto dbl = with_multiplicity(c, 2);
    if (dbl.size() >= 2 && c.size() >= 8 && c.vars().size() == 6)
      return branching(line + ".double.pair", split_three_way(dbl[0], dbl[1]));
    return branching(line + ".double.branch", split_on(x));
  }
  return std::nullopt;
}

// Duplicate-free C^j: shortest length branches the first literal, longer
// clauses split three ways on the first two.
std::optional<Decision> single_line(const Formula& f, int j, const std::string& line) {
  for (const auto& c : f.clauses) {
    if (c.target != j || !all_single(c)) continue;
    const std::size_t shortest = 2 * static_cast<std::size_t>(j);
    if (j == 2 && c.size() == 4) return branching(len_tag(line, c), split_four_c2(c.lits));
    if (j == 2 && c.size() == 5) return branching(len_tag(line, c), split_on(c.lits[0]));
    if (j >= 3 && c.size() == shortest) return branching(len_tag(line, c), split_on(c.lits[0]));
    if (c.size() < shortest) return fallback_lowest(f, len_tag(line, c) + ".short");
    return branching(line + ".long", split_three_way(c.lits[0], c.lits[1]));
  }
  return std::nullopt;
}

Decision decide_g3(const Formula& f) {
  if (auto d = c1_line(f, "L6")) return *d;
  if (auto d = repeated_line(f, 2, "L7")) return *d;
  if (auto d = single_line(f, 2, "L8")) return *d;
  if (auto d = repeated_line(f, 3, "L9")) return *d;
  if (auto d = single_line(f, 3, "L10")) return *d;
  return fallback_lowest(f, "uncovered");
}

Decision decide_g4(const Formula& f) {
  if (auto d = c1_line(f, "L6")) return *d;
  for (const auto& c : f.clauses)
    if (c.target == 2 && !all_single(c)) return infer_or_branch(c, "L7");
  if (auto d = single_line(f, 2, "L8")) return *d;
  if (auto d = repeated_line(f, 3, "L9")) return *d;
  if (auto d = single_line(f, 3, "L10")) return *d;
  if (auto d = repeated_line(f, 4, "L11")) return *d;
  if (auto d = single_line(f, 4, "L12")) return *d;
  return fallback_lowest(f, "uncovered");
}

}  // namespace

SolveResult solve_g3(const Formula& f, const SolveOptions& opt) {
  if (f.max_target() > 3) throw std::invalid_argument("solve_g3 needs all targets <= 3");
  return run_search(f, Scheme::G3, "g3", decide_g3, opt);
}

SolveResult solve_g4(const Formula& f, const SolveOptions& opt) {
  if (f.max_target() > 4) throw std::invalid_argument("solve_g4 needs all targets <= 4");
  return run_search(f, Scheme::G4, "g4", decide_g4, opt);
}

SolveResult solve_auto(const Formula& f, const SolveOptions& opt) {
  const int t = f.max_target();
  if (t <= 2) return solve_g2(f, opt);
  if (t == 3) return solve_g3(f, opt);
  if (t == 4) return solve_g4(f, opt);
  throw std::invalid_argument("targets above 4 are not supported");
}

}  // namespace gixsat
