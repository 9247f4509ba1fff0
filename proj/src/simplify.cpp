#include "gixsat/simplify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gixsat {

std::uint64_t SimplifyCounters::total() const {
  return std::accumulate(fired.begin(), fired.end(), std::uint64_t{0});
}

bool clause_obviously_unsat(const Clause& c) {
  if (cheap_conflict(c)) return true;
  if (c.lits.empty()) return c.target != 0;
  if (c.lits.front().var() == c.lits.back().var()) {
    const Var v = c.lits.front().var();
    const int pos = c.multiplicity(Lit(v, true));
    const int neg = c.multiplicity(Lit(v, false));
    return c.target != pos && c.target != neg;
  }
  return false;
}

namespace {

bool has_complement_pair(const Clause& c) {
  for (std::size_t i = 1; i < c.lits.size(); ++i)
    if (c.lits[i] == ~c.lits[i - 1]) return true;
  return false;
}

bool all_distinct_vars(const Clause& c) {
  for (std::size_t i = 1; i < c.lits.size(); ++i)
    if (c.lits[i].var() == c.lits[i - 1].var()) return false;
  return true;
}

// Lowest literal whose multiplicity exceeds the target.
std::optional<Lit> over_occurring(const Clause& c) {
  for (auto [l, m] : c.runs())
    if (m > c.target) return l;
  return std::nullopt;
}

std::optional<int> uniform_multiplicity(const Clause& c) {
  auto runs = c.runs();
  if (runs.empty()) return std::nullopt;
  const int m = runs.front().second;
  for (auto [l, k] : runs)
    if (k != m) return std::nullopt;
  return m;
}

Outcome assign_all(Formula& f, Trail& t, std::vector<Lit> lits, bool value) {
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (Lit l : lits)
    if (t.is_unassigned(l.var()) && assign_lit(f, t, l, value) == Outcome::Conflict)
      return Outcome::Conflict;
  return Outcome::Ok;
}

}  // namespace

std::optional<SimplifyRule> simplify_step(Formula& f, Trail& t, bool& unsat) {
  unsat = false;
  auto& cs = f.clauses;
  auto done = [&](SimplifyRule r, Outcome o) {
    if (o == Outcome::Conflict) unsat = true;
    return std::optional<SimplifyRule>(r);
  };

  for (const auto& c : cs)
    if (clause_obviously_unsat(c)) {
      unsat = true;
      return SimplifyRule::A;
    }

  for (auto& c : cs)
    if (has_complement_pair(c)) {
      cancel_complements(c);
      return done(SimplifyRule::B, cheap_conflict(c) ? Outcome::Conflict : Outcome::Ok);
    }

  for (auto& c : cs)
    if (auto l = over_occurring(c)) return done(SimplifyRule::C, assign_lit(f, t, *l, false));

  for (auto& c : cs) {
    auto m = uniform_multiplicity(c);
    if (!m || *m < 2 || c.target % *m != 0) continue;
    std::vector<Lit> out;
    for (auto [l, k] : c.runs()) out.push_back(l);
    c.lits = std::move(out);
    c.target /= *m;
    return SimplifyRule::D;
  }

  for (auto& c : cs)
    if (c.target == 1 && c.size() == 2 && c.lits[0].var() != c.lits[1].var())
      return done(SimplifyRule::E, equate(f, t, c.lits[0], ~c.lits[1]));

  for (auto& c : cs) {
    if (c.empty()) continue;
    if (c.target == 0) return done(SimplifyRule::F, assign_all(f, t, c.lits, false));
    if (c.target == static_cast<int>(c.size()))
      return done(SimplifyRule::F, assign_all(f, t, c.lits, true));
  }

  for (auto& c : cs) {
    const int k = static_cast<int>(c.size());
    if (k == 0 || 2 * c.target <= k || !all_distinct_vars(c)) continue;
    for (Lit& l : c.lits) l = ~l;
    c.normalize();
    c.target = k - c.target;
    return SimplifyRule::G;
  }

  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].empty() && cs[i].target == 0) {
      cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
      return SimplifyRule::H;
    }

  return std::nullopt;
}

SimplifyStatus simplify_to_fixpoint(Formula& f, Trail& t, SimplifyCounters* counters) {
  for (;;) {
    bool unsat = false;
    auto r = simplify_step(f, t, unsat);
    if (r && counters) ++counters->fired[static_cast<int>(*r)];
    if (unsat) return SimplifyStatus::Unsatisfiable;
    if (!r) return SimplifyStatus::Simplified;
  }
}

namespace {

struct ResolutionPair {
  std::size_t pos_clause, neg_clause;
};

std::optional<ResolutionPair> find_resolution_pair(const Formula& f, Var x) {
  std::optional<std::size_t> p, q;
  const Lit px(x, true), nx(x, false);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    if (c.target != 1) continue;
    const int a = c.multiplicity(px), b = c.multiplicity(nx);
    if (!p && a == 1 && b == 0) p = i;
    else if (!q && a == 0 && b == 1) q = i;
  }
  if (!p || !q) return std::nullopt;
  return ResolutionPair{*p, *q};
}

std::vector<Lit> without(const std::vector<Lit>& lits, Lit drop) {
  std::vector<Lit> out;
  for (Lit l : lits)
    if (l != drop) out.push_back(l);
  return out;
}

}  // namespace

bool can_resolve(const Formula& f, Var x) { return find_resolution_pair(f, x).has_value(); }

Outcome resolve(Formula& f, Trail& t, Var x) {
  auto pr = find_resolution_pair(f, x);
  if (!pr) throw std::logic_error("resolution precondition violated");
  const Lit px(x, true), nx(x, false);
  const std::vector<Lit> alpha = without(f.clauses[pr->pos_clause].lits, px);
  const std::vector<Lit> beta = without(f.clauses[pr->neg_clause].lits, nx);
  t.set_resolved(x, alpha, beta);

  bool conflict = false;
  for (auto& c : f.clauses) {
    if (!c.contains_var(x)) continue;
    std::vector<Lit> out;
    for (Lit l : c.lits) {
      if (l == px) out.insert(out.end(), beta.begin(), beta.end());
      else if (l == nx) out.insert(out.end(), alpha.begin(), alpha.end());
      else out.push_back(l);
    }
    c.lits = std::move(out);
    c.normalize();
    cancel_complements(c);
    if (cheap_conflict(c)) conflict = true;
  }
  return conflict ? Outcome::Conflict : Outcome::Ok;
}

}  // namespace gixsat
