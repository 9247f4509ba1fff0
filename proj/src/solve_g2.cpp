// G2XSAT search, lines 8-18.  Lines 1-7 are simplify_to_fixpoint.

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "gixsat/dpll.hpp"
#include "search.hpp"

namespace gixsat {

using namespace detail;

namespace {

struct Ctx {
  const Formula& f;
  std::vector<char> in_c1;  // variable occurs in some C^1 clause

  explicit Ctx(const Formula& ff) : f(ff), in_c1(ff.num_vars + 1, 0) {
    for (const auto& c : f.clauses)
      if (is_c1(c))
        for (Lit l : c.lits) in_c1[l.var()] = 1;
  }
  const Clause& at(std::size_t i) const { return f.clauses[i]; }
  std::size_t size() const { return f.clauses.size(); }
};

std::vector<Lit> doubled(const Clause& c) {
  std::vector<Lit> out;
  for (auto [l, m] : c.runs())
    if (m == 2) out.push_back(l);
  return out;
}

std::vector<Lit> singles(const Clause& c) {
  std::vector<Lit> out;
  for (auto [l, m] : c.runs())
    if (m == 1) out.push_back(l);
  return out;
}

bool contains(const std::vector<Lit>& v, Lit l) { return std::find(v.begin(), v.end(), l) != v.end(); }

Decision from_inference(const Inference& inf, const std::string& line) {
  if (inf.infeasible) return refute(line + ".infeasible");
  return rewrite(line + ".deduce", inf.deductions);
}

std::optional<Decision> line8(const Ctx& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& c = x.at(i);
    if (is_c1(c) && c.size() >= 4)
      return branching(c.size() == 4 ? "L8.len4" : "L8.len5+", split_link_or_zero(c.lits[0], c.lits[1]));
  }
  return std::nullopt;
}

std::optional<Decision> line9(const Ctx& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& c = x.at(i);
    if (!is_c1(c) || c.size() != 3) continue;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const auto& d = x.at(j);
      if (!is_c1(d) || d.size() != 3) continue;
      const auto s = shared_vars(c, d);
      if (s.empty()) continue;
      if (s.size() == 1) return branching("L9.overlap1", split_on(lit_of(c, s[0])));

      std::vector<Lit> agree, differ;  // literals as they appear in c
      for (Var v : s) (lit_of(c, v) == lit_of(d, v) ? agree : differ).push_back(lit_of(c, v));

      if (s.size() == 2) {
        const Lit z = lit_of(c, only_in(c, d).front());
        const Lit w = lit_of(d, only_in(d, c).front());
        if (agree.size() == 2) return rewrite("L9.overlap2.same", {Equate{z, w}});
        if (agree.size() == 1) return rewrite("L9.overlap2.mixed", {SetLit{agree[0], false}});
        return rewrite("L9.overlap2.opposite",
                       {Equate{differ[0], ~differ[1]}, SetLit{z, false}, SetLit{w, false}});
      }
      // Three shared variables: subtracting gives sum(differ) = |differ| / 2.
      if (differ.size() % 2 == 1) return refute("L9.overlap3.odd");
      if (differ.empty()) return rewrite("L9.overlap3.duplicate", {ReplaceClause{j, Clause(0, {})}});
      return rewrite("L9.overlap3.two", {Equate{differ[0], ~differ[1]}, SetLit{agree[0], false}});
    }
  }
  return std::nullopt;
}

std::optional<Decision> line10(const Ctx& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& c = x.at(i);
    if (!is_c2(c)) continue;
    const auto dbl = doubled(c);
    if (dbl.size() < 2) continue;
    const auto inf = infer_clause(c);
    if (inf.infeasible || !inf.deductions.empty()) return from_inference(inf, "L10");
    return branching("L10.branch", split_link_or_zero(dbl[0], dbl[1]));
  }
  return std::nullopt;
}

// C = (x x y z w): the neighbourhood analysis among C^1 3-literal clauses.
Decision line11_len5(const Ctx& ctx, std::size_t ci) {
  const auto& c = ctx.at(ci);
  const Lit x = doubled(c).front();
  const auto s = singles(c);

  bool any_c1 = false;
  for (Var v : c.vars()) any_c1 = any_c1 || ctx.in_c1[v];
  if (!any_c1) return branching("L11.len5.weight1", split_on(x));
  for (std::size_t k = 0; k < ctx.size(); ++k)
    if (is_c1(ctx.at(k)) && ctx.at(k).multiplicity(~x) > 0) return branching("L11.len5.negx", split_on(x));

  for (std::size_t k = 0; k < ctx.size(); ++k) {
    const auto& d = ctx.at(k);
    if (!is_c1(d) || shared_vars(c, d).size() < 2) continue;
    std::vector<Lit> pos, neg;  // literals of s appearing in d as is / negated
    for (Lit l : s) {
      if (d.multiplicity(l) > 0) pos.push_back(l);
      if (d.multiplicity(~l) > 0) neg.push_back(l);
    }
    const bool has_x = d.multiplicity(x) > 0;
    // x = 1 falsifies every single, making two literals of d true.
    if (neg.size() >= 2) return rewrite("L11.len5.twoneg", {SetLit{x, false}});
    if (neg.size() == 1 && !pos.empty())
      return rewrite("L11.len5.sum", {ReplaceClause{ci, combine(c, 1, d)}});
    if (neg.size() == 1 && has_x) return rewrite("L11.len5.xneg", {SetLit{x, false}});
    if (pos.size() == 3) return refute("L11.len5.parity");
    if (pos.size() == 2) {
      Lit w = s.front();
      for (Lit l : s)
        if (!contains(pos, l)) w = l;
      return rewrite("L11.len5.twopos", {Equate{x, ~w}});
    }
    if (pos.size() == 1 && has_x) {
      for (Lit l : d.lits)
        if (!c.contains_var(l.var())) return branching("L11.len5.outer", split_on(l));
    }
  }
  return branching("L11.len5.single", split_on(x));
}

std::optional<Decision> line11(const Ctx& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& c = x.at(i);
    if (!is_c2(c) || doubled(c).size() != 1) continue;
    if (c.size() <= 4) {
      const auto inf = infer_clause(c);
      if (inf.infeasible || !inf.deductions.empty()) return from_inference(inf, "L11.short");
      return fallback_lowest(x.f, "L11.short.silent");
    }
    if (c.size() == 5) return line11_len5(x, i);
    return branching("L11.len6+", split_on(doubled(c).front()));
  }
  return std::nullopt;
}

std::optional<Decision> line12(const Ctx& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& c = x.at(i);
    if (!is_c1(c)) continue;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const auto& d = x.at(j);
      if (!is_c2(d)) continue;
      const auto s = shared_vars(c, d);
      if (s.size() < 2) continue;
      bool all_agree = true;
      for (Var v : s) all_agree = all_agree && lit_of(c, v) == lit_of(d, v);
      // Replacing C' by C' -/+ C keeps the system equivalent.
      Clause r = combine(d, all_agree ? -1 : 1, c);
      const std::string tag = std::string("L12.overlap") + std::to_string(s.size()) +
                              (all_agree ? ".difference" : ".sum");
      if (r.target > 2) throw std::logic_error("line 12 combination left the G2 class");
      return rewrite(tag, {ReplaceClause{j, std::move(r)}});
    }
  }
  return std::nullopt;
}

std::optional<Decision> line13(const Ctx& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& c = x.at(i);
    if (!is_c2(c) || c.size() != 4) continue;
    std::vector<Lit> heavy_side, rest;
    for (Lit l : c.lits) (x.in_c1[l.var()] ? heavy_side : rest).push_back(l);
    if (heavy_side.size() >= 2) return branching("L13.c1neighbours", split_three_way(heavy_side[0], heavy_side[1]));
    // Keep a lower-weight variable as the surviving one (last position).
    std::vector<Lit> order = rest;
    order.insert(order.end(), heavy_side.begin(), heavy_side.end());
    return branching(heavy_side.empty() ? "L13.weight1" : "L13.onec1", split_four_c2(order));
  }
  return std::nullopt;
}

std::optional<Decision> line14(const Ctx& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& d = x.at(j);
    if (!is_c2(d)) continue;
    struct Nb {
      Lit lit;
      bool same;
    };
    std::vector<Nb> nb;
    for (Lit l : d.lits) {
      if (!x.in_c1[l.var()]) continue;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (is_c1(x.at(k)) && x.at(k).contains_var(l.var())) {
          nb.push_back({l, lit_of(x.at(k), l.var()) == l});
          break;
        }
    }
    if (nb.empty()) continue;
    if (nb.size() >= 3) {
      int a = 0, b = 1, o = 2;  // (a,b) share a relation; o is the branching literal
      if (nb[0].same == nb[1].same) { a = 0; b = 1; o = 2; }
      else if (nb[0].same == nb[2].same) { a = 0; b = 2; o = 1; }
      else { a = 1; b = 2; o = 0; }
      const Lit xo = nb[o].lit, y = nb[a].lit, z = nb[b].lit;
      return branching("L14.three",
                       {{SetLit{xo, true}, Equate{y, ~z}, ResolveVar{z.var()}},
                        {SetLit{xo, true}, SetLit{y, false}, SetLit{z, false}},
                        {SetLit{xo, false}}},
                       true);
    }
    if (nb.size() == 2) {
      const Lit a = nb[0].lit, b = nb[1].lit;
      return branching("L14.two",
                       {{SetLit{a, true}, SetLit{b, true}},
                        {SetLit{a, true}, SetLit{b, false}},
                        {SetLit{a, false}}},
                       true);
    }
    return branching("L14.one", split_on(nb[0].lit), true);
  }
  return std::nullopt;
}

// Two C^2 clauses with at least two shared variables; all literals single.
std::optional<Decision> line15(const Ctx& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_c2(x.at(i))) continue;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (!is_c2(x.at(j))) continue;
      const auto s = shared_vars(x.at(i), x.at(j));
      if (s.size() < 2) continue;
      std::size_t ia = i, ib = j;
      // `small` is the clause with fewer private variables.
      if (only_in(x.at(j), x.at(i)).size() < only_in(x.at(i), x.at(j)).size()) std::swap(ia, ib);
      const Clause& c = x.at(ia);
      const Clause& d = x.at(ib);
      std::vector<Lit> agree, differ;
      for (Var v : s) (lit_of(c, v) == lit_of(d, v) ? agree : differ).push_back(lit_of(c, v));
      const auto only_c = only_in(c, d);

      if (differ.empty() && only_c.size() <= 1) {
        // Subset (difference has target 0) or one private literal (C^1 result).
        return rewrite(only_c.empty() ? "L15.subset" : "L15.almostsubset",
                       {ReplaceClause{ib, combine(d, -1, c)}});
      }
      if (!differ.empty() && only_c.empty()) {
        Clause sum = combine(d, 1, c), diff = combine(d, -1, c);
        const bool sum_ok = sum.target >= 0 && sum.target <= 2;
        const bool diff_ok = diff.target >= 0 && diff.target <= 2;
        if (sum_ok || diff_ok) {
          const bool use_diff = diff_ok && (!sum_ok || diff.target <= sum.target);
          return rewrite(use_diff ? "L15.negsubset.difference" : "L15.negsubset.sum",
                         {ReplaceClause{ib, use_diff ? diff : sum}});
        }
      }
      if (!differ.empty() && only_c.size() == 1) {
        const Lit xl = lit_of(c, only_c[0]);
        if (differ.size() >= 3)
          return rewrite("L15.onepriv.sum", {ReplaceClause{ib, combine(d, 1, c)}});
        std::vector<Lit> sub = agree;
        if (differ.size() == 2) sub.push_back(xl);
        if (!sub.empty()) {
          Clause sc(1, sub);
          return branching(differ.size() == 1 ? "L15.onepriv.d1" : "L15.onepriv.d2",
                           {{AddClause{sc}}, set_all(sub, false)}, true);
        }
      }
      if (s.size() == 2) {
        const Lit a = lit_of(c, s[0]), b = lit_of(c, s[1]);
        if (agree.size() == 1) {
          const Lit xa = agree[0], yd = differ[0];
          return branching("L15.overlap2.mixed",
                           {{SetLit{xa, true}, SetLit{yd, true}},
                            {SetLit{xa, true}, SetLit{yd, false}},
                            {SetLit{xa, false}}},
                           true);
        }
        return branching(agree.size() == 2 ? "L15.overlap2.same" : "L15.overlap2.opposite",
                         split_three_way(a, b), true);
      }
      if (agree.size() >= 2 && !differ.empty())
        return branching("L15.overlap3.mixed", split_link_or_zero(agree[0], agree[1]), true);
      if (agree.size() >= 3 && differ.empty()) {
        return branching("L15.overlap3.same",
                         {{AddClause{Clause(2, agree)}}, {AddClause{Clause(1, agree)}}, set_all(agree, false)},
                         true);
      }
      return fallback_lowest(x.f, "L15.overlap3.silent");
    }
  }
  return std::nullopt;
}

struct Occ {
  std::size_t clause;
  Lit lit;
};

std::vector<Occ> occurrences(const Formula& f, Var v) {
  std::vector<Occ> out;
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    for (Lit l : f.clauses[i].lits)
      if (l.var() == v) out.push_back({i, l});
  return out;
}

bool three_six_literal(const Formula& f, const std::vector<Occ>& occ) {
  if (occ.size() != 3) return false;
  for (const auto& o : occ)
    if (f.clauses[o.clause].size() != 6) return false;
  return true;
}

std::optional<Decision> line16_17(const Ctx& x) {
  std::vector<Var> heavy;
  for (Var v : constrained_vars(x.f))
    if (is_heavy(x.f, v)) heavy.push_back(v);
  if (heavy.empty()) return std::nullopt;

  for (Var v : heavy) {
    const auto occ = occurrences(x.f, v);
    int pos = 0, neg = 0;
    for (const auto& o : occ) (o.lit.positive() ? pos : neg)++;
    if (pos > 0 && neg > 0) return branching("L16.mixedsign", split_on(Lit(v, pos >= neg)));
    if (!three_six_literal(x.f, occ)) return branching("L16.samesign", split_on(Lit(v, pos > 0)), true);
  }
  for (std::size_t a = 0; a < heavy.size(); ++a)
    for (std::size_t b = a + 1; b < heavy.size(); ++b)
      for (const auto& c : x.f.clauses)
        if (c.contains_var(heavy[a]) && c.contains_var(heavy[b])) {
          const Lit p = lit_of(c, heavy[a]), q = lit_of(c, heavy[b]);
          return branching("L16.heavypair",
                           {{SetLit{p, true}, SetLit{q, true}},
                            {SetLit{p, true}, SetLit{q, false}},
                            {SetLit{p, false}, SetLit{q, true}},
                            {SetLit{p, false}, SetLit{q, false}}},
                           true);
        }
  return branching("L17.bruteheavy", split_on(Lit(heavy.front(), true)));
}

Decision decide_g2(const Formula& f) {
  const Ctx x(f);
  for (auto* line : {line8, line9, line10, line11, line12, line13, line14, line15, line16_17})
    if (auto d = line(x)) return *d;
  Decision d;
  d.kind = Decision::Kind::Endgame;
  d.line = "L18.endgame";
  return d;
}

}  // namespace

SolveResult solve_g2(const Formula& f, const SolveOptions& opt) {
  if (f.max_target() > 2) throw std::invalid_argument("solve_g2 needs all targets <= 2");
  return run_search(f, Scheme::G2, "g2", decide_g2, opt);
}

}  // namespace gixsat
