// Line 18: formulas without heavy variables, by frontier DP per component.

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gixsat/dpll.hpp"

namespace gixsat {

namespace {

struct Entry {
  std::size_t parent;
  std::vector<std::uint8_t> fresh;  // values of the clause's new variables
};

struct Layer {
  std::vector<Var> frontier;
  std::map<std::vector<std::uint8_t>, std::size_t> index;  // frontier values -> entry
  std::vector<Entry> entries;
};

// Enumerates values of `pos`/`neg` weighted variables summing to `need`.
template <class Fn>
void exact_sum(const std::vector<int>& pos, const std::vector<int>& neg, int need, Fn&& emit) {
  const std::size_t k = pos.size();
  std::vector<int> lo(k + 1, 0), hi(k + 1, 0);  // bounds of the suffix contribution
  for (std::size_t i = k; i-- > 0;) {
    lo[i] = lo[i + 1] + std::min(pos[i], neg[i]);
    hi[i] = hi[i + 1] + std::max(pos[i], neg[i]);
  }
  std::vector<std::uint8_t> val(k, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (left < lo[i] || left > hi[i]) return;
    if (i == k) {
      emit(val);
      return;
    }
    for (std::uint8_t b : {std::uint8_t{0}, std::uint8_t{1}}) {
      val[i] = b;
      self(self, i + 1, left - (b ? pos[i] : neg[i]));
    }
  };
  rec(rec, 0, need);
}

// Solves one component; `order` lists its clauses.  Writes values into `model`.
bool solve_component(const Formula& f, const std::vector<std::size_t>& order, Assignment& model) {
  std::map<Var, std::size_t> last;  // variable -> last position in order
  for (std::size_t p = 0; p < order.size(); ++p)
    for (Lit l : f.clauses[order[p]].lits) last[l.var()] = p;

  std::vector<Layer> layers(1);
  layers[0].index[{}] = 0;
  layers[0].entries.push_back({0, {}});
  std::vector<std::vector<Var>> fresh_vars(order.size());

  for (std::size_t p = 0; p < order.size(); ++p) {
    const Clause& c = f.clauses[order[p]];
    const Layer& prev = layers.back();
    std::map<Var, std::size_t> at;  // frontier position
    for (std::size_t i = 0; i < prev.frontier.size(); ++i) at[prev.frontier[i]] = i;

    std::vector<Var> known, fresh;
    for (Var v : c.vars()) (at.count(v) ? known : fresh).push_back(v);
    fresh_vars[p] = fresh;
    std::vector<int> fp, fn;
    for (Var v : fresh) {
      fp.push_back(c.multiplicity(Lit(v, true)));
      fn.push_back(c.multiplicity(Lit(v, false)));
    }

    Layer next;
    for (Var v : prev.frontier)
      if (last[v] > p) next.frontier.push_back(v);
    for (Var v : fresh)
      if (last[v] > p) next.frontier.push_back(v);

    for (const auto& [key, idx] : prev.index) {
      int need = c.target;
      for (Var v : known) {
        const bool b = key[at[v]] != 0;
        need -= b ? c.multiplicity(Lit(v, true)) : c.multiplicity(Lit(v, false));
      }
      exact_sum(fp, fn, need, [&](const std::vector<std::uint8_t>& val) {
        std::vector<std::uint8_t> nk;
        nk.reserve(next.frontier.size());
        for (Var v : next.frontier) {
          auto it = at.find(v);
          if (it != at.end()) {
            nk.push_back(key[it->second]);
          } else {
            for (std::size_t i = 0; i < fresh.size(); ++i)
              if (fresh[i] == v) nk.push_back(val[i]);
          }
        }
        if (next.index.emplace(nk, next.entries.size()).second) next.entries.push_back({idx, val});
      });
    }
    if (next.entries.empty()) return false;
    layers.push_back(std::move(next));
  }

  std::size_t e = 0;
  for (std::size_t p = order.size(); p > 0; --p) {
    const Entry& en = layers[p].entries[e];
    for (std::size_t i = 0; i < fresh_vars[p - 1].size(); ++i) model[fresh_vars[p - 1][i]] = en.fresh[i];
    e = en.parent;
  }
  return true;
}

}  // namespace

SolveResult endgame_low_degree(const Formula& f) {
  for (Var v : constrained_vars(f))
    if (is_heavy(f, v)) throw std::logic_error("endgame_low_degree: heavy variable " + std::to_string(v));

  SolveResult res;
  Assignment model(f.num_vars + 1, 0);
  std::vector<std::vector<std::size_t>> by_var(f.num_vars + 1);
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    for (Var v : f.clauses[i].vars()) by_var[v].push_back(i);

  std::vector<char> visited(f.clauses.size(), 0);
  for (std::size_t s = 0; s < f.clauses.size(); ++s) {
    if (visited[s]) continue;
    std::vector<std::size_t> order{s};
    visited[s] = 1;
    for (std::size_t q = 0; q < order.size(); ++q)
      for (Var v : f.clauses[order[q]].vars())
        for (std::size_t j : by_var[v])
          if (!visited[j]) {
            visited[j] = 1;
            order.push_back(j);
          }
    if (!solve_component(f, order, model)) {
      res.status = Status::Unsat;
      return res;
    }
  }
  res.status = Status::Sat;
  res.model = std::move(model);
  return res;
}

}  // namespace gixsat
