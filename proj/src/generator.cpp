#include "gixsat/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gixsat {

void validate(const GenSpec& s) {
  if (s.n < 1) throw std::invalid_argument("n must be positive");
  if (s.k_min < 1) throw std::invalid_argument("k_min must be at least 1");
  if (s.k_max < s.k_min) throw std::invalid_argument("k_max must be at least k_min");
  if (s.max_target < 1 || s.max_target > 4) throw std::invalid_argument("max target must be in 1..4");
  if (s.max_repeat < 1) throw std::invalid_argument("multiplicity allowance must be at least 1");
  if (!(s.neg_prob >= 0 && s.neg_prob <= 1)) throw std::invalid_argument("negation probability must be in [0,1]");
  if (static_cast<long long>(s.k_max) > static_cast<long long>(s.n) * s.max_repeat)
    throw std::invalid_argument("k_max exceeds n times the multiplicity allowance");
}

namespace {

using Rng = std::mt19937_64;

std::vector<Lit> sample_literals(const GenSpec& s, Rng& rng) {
  std::uniform_int_distribution<int> len(s.k_min, s.k_max);
  std::uniform_int_distribution<Var> pick(1, s.n);
  std::bernoulli_distribution negate(s.neg_prob);
  const int k = len(rng);
  std::vector<int> used(s.n + 1, 0);
  std::vector<Lit> lits;
  while (static_cast<int>(lits.size()) < k) {
    const Var v = pick(rng);
    if (used[v] >= s.max_repeat) continue;
    ++used[v];
    lits.emplace_back(v, !negate(rng));
  }
  std::sort(lits.begin(), lits.end());
  return lits;
}

int count_true(const std::vector<Lit>& lits, const Assignment& a) {
  int c = 0;
  for (Lit l : lits) c += l.holds(a[l.var()] != 0) ? 1 : 0;
  return c;
}

}  // namespace

Generated generate(const GenSpec& s) {
  validate(s);
  Rng rng(s.seed);
  Generated out;
  out.formula.num_vars = s.n;

  if (!s.planted) {
    for (std::size_t i = 0; i < s.m; ++i) {
      auto lits = sample_literals(s, rng);
      const int hi = std::min<int>(s.max_target, static_cast<int>(lits.size()));
      std::uniform_int_distribution<int> tgt(1, hi);
      out.formula.clauses.emplace_back(tgt(rng), std::move(lits));
    }
    return out;
  }

  Assignment model(s.n + 1, 0);
  std::bernoulli_distribution coin(0.5);
  for (Var v = 1; v <= s.n; ++v) model[v] = coin(rng) ? 1 : 0;

  constexpr int kTries = 64;
  for (std::size_t i = 0; i < s.m; ++i) {
    std::vector<Lit> lits;
    int cnt = 0;
    for (int t = 0; t < kTries; ++t) {
      lits = sample_literals(s, rng);
      cnt = count_true(lits, model);
      if (cnt >= 1 && cnt <= s.max_target) break;
    }
    // Still out of range after resampling: flip individual occurrences.
    for (Lit& l : lits) {
      if (cnt >= 1) break;
      l = ~l;
      ++cnt;
    }
    for (Lit& l : lits) {
      if (cnt <= s.max_target) break;
      if (l.holds(model[l.var()] != 0)) {
        l = ~l;
        --cnt;
      }
    }
    out.formula.clauses.emplace_back(cnt, std::move(lits));
  }
  out.planted = std::move(model);
  return out;
}

}  // namespace gixsat
