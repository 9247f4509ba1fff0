#include "gixsat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

namespace gixsat {

unsigned oracle_limit() {
  if (const char* s = std::getenv("GIXSAT_ORACLE_LIMIT")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1 && v <= kHardOracleLimit)
      return static_cast<unsigned>(v);
  }
  return kDefaultOracleLimit;
}

namespace {

// Per clause, one (weight, positive mask, negative mask) triple per distinct
// multiplicity.  The count under assignment a is
//   sum_w w * (popcount(a & pos_w) + popcount(~a & neg_w)).
struct MaskedClause {
  int target;
  std::vector<std::uint64_t> weight, pos, neg;
};

std::vector<MaskedClause> compile(const Formula& f) {
  std::vector<MaskedClause> out;
  for (const auto& c : f.clauses) {
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> by_weight;
    for (auto [l, m] : c.runs()) {
      auto& slot = by_weight[m];
      const std::uint64_t bit = std::uint64_t{1} << (l.var() - 1);
      (l.positive() ? slot.first : slot.second) |= bit;
    }
    MaskedClause mc{c.target, {}, {}, {}};
    for (auto& [w, masks] : by_weight) {
      mc.weight.push_back(static_cast<std::uint64_t>(w));
      mc.pos.push_back(masks.first);
      mc.neg.push_back(masks.second);
    }
    out.push_back(std::move(mc));
  }
  return out;
}

inline bool satisfies(const std::vector<MaskedClause>& cs, std::uint64_t a) {
  for (const auto& c : cs) {
    std::uint64_t cnt = 0;
    for (std::size_t k = 0; k < c.weight.size(); ++k)
      cnt += c.weight[k] * static_cast<std::uint64_t>(std::popcount(a & c.pos[k]) +
                                                      std::popcount(~a & c.neg[k]));
    if (cnt != static_cast<std::uint64_t>(c.target)) return false;
  }
  return true;
}

Assignment unpack(std::uint64_t a, Var n) {
  Assignment out(n + 1, 0);
  for (Var v = 1; v <= n; ++v) out[v] = (a >> (v - 1)) & 1u;
  return out;
}

void check_limit(const Formula& f, unsigned limit) {
  if (f.num_vars > limit || f.num_vars > kHardOracleLimit)
    throw ResourceError("oracle refuses n=" + std::to_string(f.num_vars) + " (limit " +
                        std::to_string(std::min(limit, kHardOracleLimit)) + ")");
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

OracleReport finish(const Formula& f, std::uint64_t count, std::uint64_t first) {
  OracleReport r;
  r.model_count = count;
  r.sat = count > 0;
  if (first != kNone) r.first_model = unpack(first, f.num_vars);
  return r;
}

}  // namespace

OracleReport brute_solve_serial(const Formula& f, unsigned limit, const Deadline& deadline) {
  check_limit(f, limit);
  const auto cs = compile(f);
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  std::uint64_t count = 0, first = kNone;
  for (std::uint64_t a = 0; a < total; ++a) {
    if ((a & 0xFFFFu) == 0) deadline.check();
    if (satisfies(cs, a)) {
      if (first == kNone) first = a;
      ++count;
    }
  }
  return finish(f, count, first);
}

OracleReport brute_solve(const Formula& f, unsigned limit, const Deadline& deadline) {
  check_limit(f, limit);
  const auto cs = compile(f);
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  constexpr std::uint64_t kBlock = 1u << 14;
  const std::int64_t blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
  std::uint64_t count = 0, first = kNone;
  std::atomic<bool> timed_out{false};

#pragma omp parallel for schedule(dynamic, 4) reduction(+ : count) reduction(min : first)
  for (std::int64_t b = 0; b < blocks; ++b) {
    if (timed_out.load(std::memory_order_relaxed)) continue;
    if (deadline.expired()) {
      timed_out = true;
      continue;
    }
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t hi = std::min(total, lo + kBlock);
    for (std::uint64_t a = lo; a < hi; ++a) {
      if (satisfies(cs, a)) {
        if (a < first) first = a;
        ++count;
      }
    }
  }
  if (timed_out) throw TimeoutError();
  return finish(f, count, first);
}

std::uint64_t count_clause_solutions(const Clause& c) {
  const auto vars = c.vars();
  if (vars.size() > kHardOracleLimit) throw ResourceError("clause too wide to enumerate");
  Formula local(static_cast<Var>(vars.size()), {});
  Clause renamed;
  renamed.target = c.target;
  for (Lit l : c.lits) {
    const auto idx = std::lower_bound(vars.begin(), vars.end(), l.var()) - vars.begin();
    renamed.lits.emplace_back(static_cast<Var>(idx + 1), l.positive());
  }
  renamed.normalize();
  local.clauses.push_back(renamed);
  return brute_solve_serial(local, kHardOracleLimit).model_count;
}

}  // namespace gixsat
