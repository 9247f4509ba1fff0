#include "search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gixsat/dpll.hpp"

namespace gixsat::detail {

Decision rewrite(std::string line, Branch actions) {
  Decision d;
  d.kind = Decision::Kind::Rewrite;
  d.line = std::move(line);
  d.branches.push_back(std::move(actions));
  return d;
}

Decision branching(std::string line, std::vector<Branch> branches, bool debt) {
  Decision d;
  d.kind = Decision::Kind::Branching;
  d.line = std::move(line);
  d.branches = std::move(branches);
  d.debt = debt;
  return d;
}

Decision refute(std::string line) {
  Decision d;
  d.kind = Decision::Kind::Refute;
  d.line = std::move(line);
  return d;
}

namespace {

// Current meaning of a decision-time literal: a constant or a live literal.
std::variant<bool, Lit> current(const Trail& t, Lit l) {
  for (;;) {
    const VarState& s = t.state(l.var());
    if (std::holds_alternative<Unassigned>(s)) return l;
    if (const auto* c = std::get_if<Constant>(&s)) return l.holds(c->value);
    if (const auto* k = std::get_if<LinkedTo>(&s)) {
      l = l.positive() ? k->partner : ~k->partner;
      continue;
    }
    throw std::logic_error("branch refers to a resolved variable");
  }
}

Clause materialize(const Trail& t, const Clause& c) {
  Clause out;
  out.target = c.target;
  for (Lit l : c.lits) {
    auto cur = current(t, l);
    if (const bool* b = std::get_if<bool>(&cur)) {
      if (*b) --out.target;
    } else {
      out.lits.push_back(std::get<Lit>(cur));
    }
  }
  out.normalize();
  cancel_complements(out);
  return out;
}

Outcome apply(Formula& f, Trail& t, const Action& a, SimplifyCounters& sc) {
  if (const auto* s = std::get_if<SetLit>(&a)) {
    auto cur = current(t, s->lit);
    if (const bool* b = std::get_if<bool>(&cur)) return *b == s->value ? Outcome::Ok : Outcome::Conflict;
    return assign_lit(f, t, std::get<Lit>(cur), s->value);
  }
  if (const auto* e = std::get_if<Equate>(&a)) {
    auto ca = current(t, e->a), cb = current(t, e->b);
    const bool* ba = std::get_if<bool>(&ca);
    const bool* bb = std::get_if<bool>(&cb);
    if (ba && bb) return *ba == *bb ? Outcome::Ok : Outcome::Conflict;
    if (ba) return assign_lit(f, t, std::get<Lit>(cb), *ba);
    if (bb) return assign_lit(f, t, std::get<Lit>(ca), *bb);
    const Lit la = std::get<Lit>(ca), lb = std::get<Lit>(cb);
    if (la.var() == lb.var()) return la == lb ? Outcome::Ok : Outcome::Conflict;
    return equate(f, t, la, lb);
  }
  if (const auto* ac = std::get_if<AddClause>(&a)) {
    Clause c = materialize(t, ac->clause);
    const bool bad = cheap_conflict(c);
    f.clauses.push_back(std::move(c));
    return bad ? Outcome::Conflict : Outcome::Ok;
  }
  if (const auto* rc = std::get_if<ReplaceClause>(&a)) {
    Clause c = materialize(t, rc->clause);
    const bool bad = cheap_conflict(c);
    f.clauses.at(rc->index) = std::move(c);
    return bad ? Outcome::Conflict : Outcome::Ok;
  }
  const auto& rv = std::get<ResolveVar>(a);
  if (simplify_to_fixpoint(f, t, &sc) == SimplifyStatus::Unsatisfiable) return Outcome::Conflict;
  if (t.is_unassigned(rv.var) && can_resolve(f, rv.var)) return resolve(f, t, rv.var);
  return Outcome::Ok;
}

class Searcher {
 public:
  Searcher(Scheme scheme, std::string prefix, const Decider& decide, const SolveOptions& opt)
      : scheme_(scheme), prefix_(std::move(prefix)), decide_(decide), opt_(opt) {}

  SolveResult run(const Formula& input) {
    SolveResult res;
    stats_.measure_at_root = measure(input, scheme_);
    Formula f = input;
    Trail t(input.num_vars);
    const bool sat = search(std::move(f), std::move(t), 0, nullptr, false);
    res.status = sat ? Status::Sat : Status::Unsat;
    if (sat && opt_.want_model) res.model = std::move(model_);
    res.stats = std::move(stats_);
    return res;
  }

 private:
  void count(const Decision& d) {
    ++stats_.rule_fires[prefix_ + "." + d.line];
    if (d.fallback) ++stats_.fallbacks;
  }

  void check_measure(const Formula& f, const double* parent_mu, bool parent_debt,
                     const std::string& parent_line) {
    if (!opt_.check_measure || !parent_mu) return;
    ++stats_.measure_checks;
    if (measure(f, scheme_) < *parent_mu - 1e-9) return;
    if (parent_debt) {
      ++stats_.debt_deferrals;
      return;
    }
    ++stats_.measure_violations;
    ++stats_.violations_by_rule[prefix_ + "." + parent_line];
  }

  bool search(Formula f, Trail t, int depth, const double* parent_mu, bool parent_debt,
              const std::string& parent_line = {}) {
    opt_.deadline.check();
    ++stats_.nodes_expanded;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    bool checked = false;

    for (int rewrites = 0;; ++rewrites) {
      if (rewrites > 1'000'000) throw std::logic_error("rewrite loop without progress");
      if (simplify_to_fixpoint(f, t, &stats_.simplify) == SimplifyStatus::Unsatisfiable) return false;
      if (!checked) {
        check_measure(f, parent_mu, parent_debt, parent_line);
        checked = true;
      }
      if (f.empty()) {
        if (opt_.want_model) model_ = t.reconstruct_with_default({}, false);
        return true;
      }

      Decision d = decide_(f);
      count(d);
      switch (d.kind) {
        case Decision::Kind::Refute:
          return false;
        case Decision::Kind::Endgame: {
          SolveResult r = endgame_low_degree(f);
          if (r.status == Status::Unsat) return false;
          if (opt_.want_model) {
            PartialAssignment roots(f.num_vars + 1);
            for (Var v : constrained_vars(f)) roots[v] = (*r.model)[v] != 0;
            model_ = t.reconstruct_with_default(roots, false);
          }
          return true;
        }
        case Decision::Kind::Rewrite: {
          for (const auto& a : d.branches.front())
            if (apply(f, t, a, stats_.simplify) == Outcome::Conflict) return false;
          continue;
        }
        case Decision::Kind::Branching:
          break;
      }

      if (d.branches.size() < 2) throw std::logic_error("branching rule with fewer than two branches");
      const double mu = opt_.check_measure ? measure(f, scheme_) : 0.0;
      for (const auto& br : d.branches) {
        Formula cf = f;
        Trail ct = t;
        bool ok = true;
        for (const auto& a : br)
          if (apply(cf, ct, a, stats_.simplify) == Outcome::Conflict) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (search(std::move(cf), std::move(ct), depth + 1, opt_.check_measure ? &mu : nullptr,
                   d.debt, d.line))
          return true;
      }
      return false;
    }
  }

  Scheme scheme_;
  std::string prefix_;
  const Decider& decide_;
  const SolveOptions& opt_;
  SearchStats stats_;
  Assignment model_;
};

}  // namespace

SolveResult run_search(const Formula& input, Scheme scheme, const std::string& prefix,
                       const Decider& decide, const SolveOptions& opt) {
  Searcher s(scheme, prefix, decide, opt);
  return s.run(input);
}

// ---- helpers ----

Lit lit_of(const Clause& c, Var v) {
  for (Lit l : c.lits)
    if (l.var() == v) return l;
  throw std::logic_error("variable not in clause");
}

std::vector<Var> shared_vars(const Clause& a, const Clause& b) {
  auto va = a.vars(), vb = b.vars();
  std::vector<Var> out;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
  return out;
}

std::vector<Var> only_in(const Clause& a, const Clause& b) {
  auto va = a.vars(), vb = b.vars();
  std::vector<Var> out;
  std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
  return out;
}

Clause combine(const Clause& a, int sign, const Clause& b) {
  // sum_lits [l] = t  with [~v] = 1 - v  becomes  sum coef_v * v = t - #neg.
  std::map<Var, int> coef;
  int rhs = a.target + sign * b.target;
  auto add = [&](const Clause& c, int s) {
    for (Lit l : c.lits) {
      if (l.positive()) {
        coef[l.var()] += s;
      } else {
        coef[l.var()] -= s;
        rhs -= s;
      }
    }
  };
  add(a, 1);
  add(b, sign);
  Clause out;
  for (auto [v, k] : coef) {
    for (int i = 0; i < k; ++i) out.lits.emplace_back(v, true);
    for (int i = 0; i < -k; ++i) out.lits.emplace_back(v, false);
    if (k < 0) rhs -= k;
  }
  out.target = rhs;
  out.normalize();
  return out;
}

int max_multiplicity(const Clause& c) {
  int m = 0;
  for (auto [l, k] : c.runs()) m = std::max(m, k);
  return m;
}

bool all_single(const Clause& c) { return max_multiplicity(c) <= 1; }

Inference infer_clause(const Clause& c) {
  Inference inf;
  const auto vars = c.vars();
  const int k = static_cast<int>(vars.size());
  if (k > 16) return inf;
  std::vector<int> p(k), q(k);
  for (int i = 0; i < k; ++i) {
    p[i] = c.multiplicity(Lit(vars[i], true));
    q[i] = c.multiplicity(Lit(vars[i], false));
  }
  std::vector<std::uint32_t> sols;
  for (std::uint32_t m = 0; m < (1u << k); ++m) {
    int s = 0;
    for (int i = 0; i < k; ++i) s += ((m >> i) & 1u) ? p[i] : q[i];
    if (s == c.target) sols.push_back(m);
  }
  if (sols.empty()) {
    inf.infeasible = true;
    return inf;
  }
  std::uint32_t all_and = ~0u, all_or = 0;
  for (auto m : sols) {
    all_and &= m;
    all_or |= m;
  }
  for (int i = 0; i < k; ++i) {
    if ((all_and >> i) & 1u) inf.deductions.push_back(SetLit{Lit(vars[i], true), true});
    else if (!((all_or >> i) & 1u)) inf.deductions.push_back(SetLit{Lit(vars[i], true), false});
  }
  if (!inf.deductions.empty()) return inf;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool same = true, opposite = true;
      for (auto m : sols) {
        const bool a = (m >> i) & 1u, b = (m >> j) & 1u;
        if (a != b) same = false;
        else opposite = false;
      }
      if (same || opposite) {
        inf.deductions.push_back(Equate{Lit(vars[i], true), Lit(vars[j], same)});
        return inf;
      }
    }
  return inf;
}

Branch set_all(const std::vector<Lit>& lits, bool value) {
  Branch b;
  for (Lit l : lits) b.push_back(SetLit{l, value});
  return b;
}

std::vector<Branch> split_on(Lit x) { return {{SetLit{x, true}}, {SetLit{x, false}}}; }

std::vector<Branch> split_link_or_zero(Lit x, Lit y) {
  return {{Equate{x, ~y}}, {SetLit{x, false}, SetLit{y, false}}};
}

std::vector<Branch> split_three_way(Lit x, Lit y) {
  return {{SetLit{x, true}, SetLit{y, true}}, {Equate{x, ~y}}, {SetLit{x, false}, SetLit{y, false}}};
}

std::vector<Branch> split_four_c2(const std::vector<Lit>& l) {
  return {{Equate{l[0], ~l[1]}, Equate{l[2], ~l[3]}},
          {Equate{l[0], l[1]}, Equate{l[2], l[3]}, Equate{l[1], ~l[3]}}};
}

Decision fallback_lowest(const Formula& f, std::string line) {
  const auto vs = constrained_vars(f);
  if (vs.empty()) throw std::logic_error("fallback on an empty formula");
  Decision d = branching(std::move(line), split_on(Lit(vs.front(), true)));
  d.fallback = true;
  return d;
}

bool is_c1(const Clause& c) { return c.target == 1; }
bool is_c2(const Clause& c) { return c.target == 2; }

}  // namespace gixsat::detail
