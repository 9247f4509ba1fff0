#include "gixsat/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace gixsat {

Clause::Clause(int t, std::vector<Lit> ls) : target(t), lits(std::move(ls)) { normalize(); }

void Clause::normalize() { std::sort(lits.begin(), lits.end()); }

int Clause::multiplicity(Lit l) const {
  auto [lo, hi] = std::equal_range(lits.begin(), lits.end(), l);
  return static_cast<int>(hi - lo);
}

int Clause::occurrences(Var v) const {
  return multiplicity(Lit(v, true)) + multiplicity(Lit(v, false));
}

int Clause::net(Var v) const { return multiplicity(Lit(v, true)) - multiplicity(Lit(v, false)); }

std::vector<Var> Clause::vars() const {
  std::vector<Var> out;
  for (Lit l : lits)
    if (out.empty() || out.back() != l.var()) out.push_back(l.var());
  return out;
}

std::vector<std::pair<Lit, int>> Clause::runs() const {
  std::vector<std::pair<Lit, int>> out;
  for (Lit l : lits) {
    if (!out.empty() && out.back().first == l)
      ++out.back().second;
    else
      out.emplace_back(l, 1);
  }
  return out;
}

int Formula::max_target() const {
  int m = 0;
  for (const auto& c : clauses) m = std::max(m, c.target);
  return m;
}

void Trail::check_fresh(Var v) const {
  if (v == 0 || v >= state_.size()) throw std::out_of_range("variable out of range");
  if (!is_unassigned(v)) throw std::logic_error("variable already eliminated");
}

void Trail::set_constant(Var v, bool value) {
  check_fresh(v);
  state_[v] = Constant{value};
  order_.push_back(v);
}

void Trail::set_link(Var v, Lit partner) {
  check_fresh(v);
  if (partner.var() == v) throw std::logic_error("cannot link a variable to itself");
  state_[v] = LinkedTo{partner};
  order_.push_back(v);
}

void Trail::set_resolved(Var v, std::vector<Lit> alpha, std::vector<Lit> beta) {
  check_fresh(v);
  state_[v] = ResolvedBy{std::move(alpha), std::move(beta)};
  order_.push_back(v);
}

Assignment Trail::reconstruct(const PartialAssignment& roots) const {
  const Var n = num_vars();
  std::vector<std::optional<bool>> val(n + 1);
  for (Var v = 1; v <= n; ++v)
    if (is_unassigned(v) && v < roots.size()) val[v] = roots[v];

  auto lit_value = [&](Lit l) {
    const auto& x = val.at(l.var());
    if (!x) throw std::logic_error("reconstruction reached an unvalued root");
    return l.holds(*x);
  };

  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const Var v = *it;
    const VarState& s = state_[v];
    if (const auto* c = std::get_if<Constant>(&s)) {
      val[v] = c->value;
    } else if (const auto* l = std::get_if<LinkedTo>(&s)) {
      val[v] = lit_value(l->partner);
    } else if (const auto* r = std::get_if<ResolvedBy>(&s)) {
      int cnt = 0;
      for (Lit b : r->beta) cnt += lit_value(b) ? 1 : 0;
      val[v] = (cnt == 1);
    }
  }

  Assignment out(n + 1, 0);
  for (Var v = 1; v <= n; ++v) {
    if (!val[v]) throw std::logic_error("reconstruction left a variable unvalued");
    out[v] = *val[v] ? 1 : 0;
  }
  return out;
}

Assignment Trail::reconstruct_with_default(const PartialAssignment& roots, bool fill) const {
  PartialAssignment r(num_vars() + 1);
  for (Var v = 1; v <= num_vars(); ++v) {
    if (!is_unassigned(v)) continue;
    r[v] = (v < roots.size() && roots[v]) ? roots[v] : std::optional<bool>(fill);
  }
  return reconstruct(r);
}

void cancel_complements(Clause& c) {
  // lits are sorted, so (v,+) immediately precedes (v,-) runs.
  std::vector<Lit> out;
  out.reserve(c.lits.size());
  std::size_t i = 0;
  while (i < c.lits.size()) {
    const Var v = c.lits[i].var();
    int pos = 0, neg = 0;
    while (i < c.lits.size() && c.lits[i].var() == v) {
      (c.lits[i].positive() ? pos : neg)++;
      ++i;
    }
    const int pairs = std::min(pos, neg);
    c.target -= pairs;
    for (int k = 0; k < pos - pairs; ++k) out.emplace_back(v, true);
    for (int k = 0; k < neg - pairs; ++k) out.emplace_back(v, false);
  }
  c.lits = std::move(out);
}

bool cheap_conflict(const Clause& c) {
  return c.target < 0 || c.target > static_cast<int>(c.lits.size());
}

Outcome assign(Formula& f, Trail& t, Var v, bool value) {
  t.set_constant(v, value);
  bool conflict = false;
  for (auto& c : f.clauses) {
    int sat = 0;
    bool touched = false;
    std::erase_if(c.lits, [&](Lit l) {
      if (l.var() != v) return false;
      touched = true;
      if (l.holds(value)) ++sat;
      return true;
    });
    if (!touched) continue;
    c.target -= sat;
    if (cheap_conflict(c)) conflict = true;
  }
  return conflict ? Outcome::Conflict : Outcome::Ok;
}

Outcome assign_lit(Formula& f, Trail& t, Lit l, bool value) {
  return assign(f, t, l.var(), l.positive() ? value : !value);
}

Outcome link(Formula& f, Trail& t, Var v, Lit partner) {
  t.set_link(v, partner);
  bool conflict = false;
  for (auto& c : f.clauses) {
    bool touched = false;
    for (Lit& l : c.lits) {
      if (l.var() != v) continue;
      touched = true;
      l = l.positive() ? partner : ~partner;
    }
    if (!touched) continue;
    c.normalize();
    cancel_complements(c);
    if (cheap_conflict(c)) conflict = true;
  }
  return conflict ? Outcome::Conflict : Outcome::Ok;
}

Outcome equate(Formula& f, Trail& t, Lit a, Lit b) {
  return link(f, t, a.var(), a.positive() ? b : ~b);
}

int true_count(const Clause& c, const Assignment& a) {
  int cnt = 0;
  for (Lit l : c.lits) cnt += l.holds(a.at(l.var()) != 0) ? 1 : 0;
  return cnt;
}

bool evaluate(const Clause& c, const Assignment& a) { return true_count(c, a) == c.target; }

bool evaluate(const Formula& f, const Assignment& a) {
  if (a.size() < static_cast<std::size_t>(f.num_vars) + 1)
    throw std::invalid_argument("assignment does not cover every variable");
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return evaluate(c, a); });
}

int degree(const Formula& f, Var v) {
  int d = 0;
  for (const auto& c : f.clauses) d += c.occurrences(v);
  return d;
}

bool is_heavy(const Formula& f, Var v) { return degree(f, v) >= 3; }

std::vector<Var> constrained_vars(const Formula& f) {
  std::vector<char> seen(f.num_vars + 1, 0);
  for (const auto& c : f.clauses)
    for (Lit l : c.lits) seen.at(l.var()) = 1;
  std::vector<Var> out;
  for (Var v = 1; v <= f.num_vars; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::string to_string(Lit l) { return std::to_string(l.to_dimacs()); }

std::string to_string(const Clause& c) {
  std::string s = "C^" + std::to_string(c.target) + "(";
  for (std::size_t i = 0; i < c.lits.size(); ++i) {
    if (i) s += ' ';
    s += to_string(c.lits[i]);
  }
  return s + ")";
}

}  // namespace gixsat
