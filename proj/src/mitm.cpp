#include "gixsat/mitm.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <new>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gixsat {

double default_alpha(int max_target) {
  if (max_target <= 2) return 0.600823;
  if (max_target == 3) return 0.57712;
  return 0.5633;
}

SplitPlan choose_cover(const Formula& f, double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie in (0,1)");
  SplitPlan plan;
  plan.alpha = alpha;
  const auto constrained = constrained_vars(f);
  const std::size_t goal = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(constrained.size())));

  std::vector<char> covered(f.num_vars + 1, 0), in_s(f.clauses.size(), 0);
  std::size_t n_cov = 0;
  auto fresh_of = [&](std::size_t i) {
    std::vector<Var> out;
    for (Var v : f.clauses[i].vars())
      if (!covered[v]) out.push_back(v);
    return out;
  };

  while (n_cov < goal) {
    std::size_t best = f.clauses.size(), best_new = 0;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      if (in_s[i]) continue;
      const std::size_t k = fresh_of(i).size();
      if (k > best_new) {
        best = i;
        best_new = k;
      }
    }
    if (best == f.clauses.size()) break;
    const auto fresh = fresh_of(best);
    if (n_cov + fresh.size() <= goal) {
      in_s[best] = 1;
      plan.cover.push_back(best);
      for (Var v : fresh) covered[v] = 1;
      n_cov += fresh.size();
      continue;
    }
    // Land nearest to the goal; ties toward more inside variables.
    std::size_t h = 0;
    for (std::size_t c = 0; c <= fresh.size(); ++c) {
      const auto dist = [&](std::size_t x) {
        const double d = static_cast<double>(n_cov + x) - static_cast<double>(goal);
        return std::abs(d);
      };
      if (dist(c) <= dist(h)) h = c;
    }
    if (h == fresh.size()) {
      in_s[best] = 1;
      plan.cover.push_back(best);
      for (Var v : fresh) covered[v] = 1;
      n_cov += fresh.size();
    } else if (h > 0) {
      for (std::size_t c = 0; c < h; ++c) covered[fresh[c]] = 1;
      n_cov += h;
      BoundaryClause b;
      b.clause = best;
      const auto& lits = f.clauses[best].lits;
      for (std::size_t p = 0; p < lits.size(); ++p) (covered[lits[p].var()] ? b.inside : b.outside).push_back(p);
      plan.boundary = b;
    }
    break;
  }

  // Clauses that fell entirely inside the covered side join S.
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (in_s[i] || (plan.boundary && plan.boundary->clause == i)) continue;
    if (fresh_of(i).empty() && !f.clauses[i].empty()) {
      in_s[i] = 1;
      plan.cover.push_back(i);
    }
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    if (!in_s[i]) plan.shared.push_back(i);

  std::vector<char> constrained_mask(f.num_vars + 1, 0);
  for (Var v : constrained) constrained_mask[v] = 1;
  for (Var v = 1; v <= f.num_vars; ++v) {
    if (!constrained_mask[v]) plan.free_vars.push_back(v);
    else if (covered[v]) plan.covered_vars.push_back(v);
    else plan.complement_vars.push_back(v);
  }
  return plan;
}

namespace {

class CoverEnumerator {
 public:
  CoverEnumerator(const Formula& f, const SplitPlan& plan, const CoverEmit& emit)
      : f_(f), plan_(plan), emit_(emit), value_(f.num_vars + 1, -1) {
    if (plan.boundary) {
      const auto& c = f.clauses[plan.boundary->clause];
      for (std::size_t p : plan.boundary->inside) inside_vars_.push_back(c.lits[p].var());
      inside_vars_.erase(std::unique(inside_vars_.begin(), inside_vars_.end()), inside_vars_.end());
    }
  }

  void run() { clause_step(0); }

 private:
  int contribution(const Clause& c) const {
    int s = 0;
    for (Lit l : c.lits)
      if (value_[l.var()] >= 0 && l.holds(value_[l.var()] != 0)) ++s;
    return s;
  }

  void clause_step(std::size_t k) {
    if (k == plan_.cover.size()) {
      inside_step(0);
      return;
    }
    const Clause& c = f_.clauses[plan_.cover[k]];
    std::vector<Var> open;
    for (Var v : c.vars())
      if (value_[v] < 0) open.push_back(v);
    assign_exact(c, open, 0, c.target - contribution(c), k);
  }

  // Assigns open[i..] so that the clause gains exactly `need` more true literals.
  void assign_exact(const Clause& c, const std::vector<Var>& open, std::size_t i, int need, std::size_t k) {
    if (i == open.size()) {
      if (need == 0) clause_step(k + 1);
      return;
    }
    int lo = 0, hi = 0;
    for (std::size_t r = i; r < open.size(); ++r) {
      const int p = c.multiplicity(Lit(open[r], true)), q = c.multiplicity(Lit(open[r], false));
      lo += std::min(p, q);
      hi += std::max(p, q);
    }
    if (need < lo || need > hi) return;
    const Var v = open[i];
    for (int b = 0; b <= 1; ++b) {
      value_[v] = static_cast<std::int8_t>(b);
      assign_exact(c, open, i + 1, need - c.multiplicity(Lit(v, b == 1)), k);
    }
    value_[v] = -1;
  }

  // Boundary inside variables not fixed by S: every case j' <= j.
  void inside_step(std::size_t i) {
    if (plan_.boundary && contribution(f_.clauses[plan_.boundary->clause]) > f_.clauses[plan_.boundary->clause].target)
      return;
    while (i < inside_vars_.size() && value_[inside_vars_[i]] >= 0) ++i;
    if (i == inside_vars_.size()) {
      finish();
      return;
    }
    const Var v = inside_vars_[i];
    for (int b = 0; b <= 1; ++b) {
      value_[v] = static_cast<std::int8_t>(b);
      inside_step(i + 1);
    }
    value_[v] = -1;
  }

  void finish() {
    ContributionVector vec(plan_.shared.size());
    for (std::size_t s = 0; s < plan_.shared.size(); ++s) {
      const Clause& c = f_.clauses[plan_.shared[s]];
      const int x = contribution(c);
      if (x > c.target) return;  // satisfies too many
      vec[s] = static_cast<std::uint8_t>(x);
    }
    std::vector<std::uint8_t> vals(plan_.covered_vars.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = static_cast<std::uint8_t>(value_[plan_.covered_vars[i]] > 0);
    emit_(vals, vec);
  }

  const Formula& f_;
  const SplitPlan& plan_;
  const CoverEmit& emit_;
  std::vector<std::int8_t> value_;
  std::vector<Var> inside_vars_;
};

std::string key_of(const ContributionVector& v) { return std::string(v.begin(), v.end()); }

struct ComplementClause {
  int target;
  std::vector<std::uint64_t> weight, pos, neg;  // masks over complement indices
};

}  // namespace

void enumerate_cover_side(const Formula& f, const SplitPlan& plan, const CoverEmit& emit) {
  CoverEnumerator(f, plan, emit).run();
}

std::uint64_t count_cover_side(const Formula& f, const SplitPlan& plan) {
  std::uint64_t n = 0;
  enumerate_cover_side(f, plan, [&](const auto&, const auto&) { ++n; });
  return n;
}

SolveResult solve_mitm(const Formula& f, std::optional<double> alpha, const SolveOptions& opt, Sweep sweep) {
  if (f.max_target() > 4) throw std::invalid_argument("solve_mitm needs all targets <= 4");
  const SplitPlan plan = choose_cover(f, alpha.value_or(default_alpha(f.max_target())));
  if (plan.complement_vars.size() > 40) throw ResourceError("complement side too large to sweep");

  SolveResult res;
  std::unordered_map<std::string, std::vector<std::uint8_t>> index;
  std::uint64_t emitted = 0;
  try {
    enumerate_cover_side(f, plan, [&](const std::vector<std::uint8_t>& vals, const ContributionVector& vec) {
      if ((++emitted & 0x3FFu) == 0) opt.deadline.check();
      index.try_emplace(key_of(vec), vals);
    });
  } catch (const std::bad_alloc&) {
    throw ResourceError("meet-in-the-middle index exhausted memory");
  }
  res.stats.info["cover_clauses"] = static_cast<double>(plan.cover.size());
  res.stats.info["covered_vars"] = static_cast<double>(plan.covered_vars.size());
  res.stats.info["complement_vars"] = static_cast<double>(plan.complement_vars.size());
  res.stats.info["emitted"] = static_cast<double>(emitted);
  res.stats.info["index_size"] = static_cast<double>(index.size());
  res.stats.info["alpha"] = plan.alpha;
  res.stats.info["boundary"] = plan.boundary ? 1.0 : 0.0;
  if (index.empty()) return res;

  std::vector<std::size_t> pos_of(f.num_vars + 1, 0);
  for (std::size_t i = 0; i < plan.complement_vars.size(); ++i) pos_of[plan.complement_vars[i]] = i;
  std::vector<ComplementClause> cc;
  for (std::size_t s : plan.shared) {
    const Clause& c = f.clauses[s];
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> by_weight;
    for (auto [l, k] : c.runs()) {
      if (std::binary_search(plan.covered_vars.begin(), plan.covered_vars.end(), l.var())) continue;
      auto& slot = by_weight[k];
      (l.positive() ? slot.first : slot.second) |= std::uint64_t{1} << pos_of[l.var()];
    }
    ComplementClause m{c.target, {}, {}, {}};
    for (auto& [w, masks] : by_weight) {
      m.weight.push_back(static_cast<std::uint64_t>(w));
      m.pos.push_back(masks.first);
      m.neg.push_back(masks.second);
    }
    cc.push_back(std::move(m));
  }

  auto probe = [&](std::uint64_t a, std::string& key) -> bool {
    for (std::size_t s = 0; s < cc.size(); ++s) {
      const auto& m = cc[s];
      std::int64_t cnt = 0;
      for (std::size_t k = 0; k < m.weight.size(); ++k)
        cnt += static_cast<std::int64_t>(m.weight[k]) * (std::popcount(a & m.pos[k]) + std::popcount(~a & m.neg[k]));
      const std::int64_t need = m.target - cnt;
      if (need < 0) return false;
      key[s] = static_cast<char>(need);
    }
    return index.count(key) > 0;
  };

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t total = std::uint64_t{1} << plan.complement_vars.size();
  std::uint64_t hit = kNone;
  if (sweep == Sweep::Serial) {
    std::string key(cc.size(), '\0');
    for (std::uint64_t a = 0; a < total && hit == kNone; ++a) {
      if ((a & 0xFFFFu) == 0) opt.deadline.check();
      if (probe(a, key)) hit = a;
    }
  } else {
    constexpr std::uint64_t kBlock = 1u << 12;
    const std::int64_t blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
    std::atomic<bool> stop{false}, timed_out{false};
#pragma omp parallel for schedule(dynamic, 1) reduction(min : hit)
    for (std::int64_t b = 0; b < blocks; ++b) {
      if (stop.load(std::memory_order_relaxed)) continue;
      if (opt.deadline.expired()) {
        timed_out = true;
        stop = true;
        continue;
      }
      std::string key(cc.size(), '\0');
      const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
      const std::uint64_t hi = std::min(total, lo + kBlock);
      for (std::uint64_t a = lo; a < hi; ++a)
        if (probe(a, key)) {
          hit = std::min(hit, a);
          stop = true;
          break;
        }
    }
    if (timed_out && hit == kNone) throw TimeoutError();
  }
  if (hit == kNone) return res;

  res.status = Status::Sat;
  if (opt.want_model) {
    std::string key(cc.size(), '\0');
    probe(hit, key);
    const auto& vals = index.at(key);
    Assignment model(f.num_vars + 1, 0);
    for (std::size_t i = 0; i < plan.covered_vars.size(); ++i) model[plan.covered_vars[i]] = vals[i];
    for (std::size_t i = 0; i < plan.complement_vars.size(); ++i)
      model[plan.complement_vars[i]] = static_cast<std::uint8_t>((hit >> i) & 1u);
    res.model = std::move(model);
  }
  return res;
}

}  // namespace gixsat
