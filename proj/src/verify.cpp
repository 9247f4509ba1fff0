#include "gixsat/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gixsat/dpll.hpp"
#include "gixsat/generator.hpp"
#include "gixsat/mitm.hpp"
#include "gixsat/oracle.hpp"
#include "gixsat/textio.hpp"

namespace gixsat {

Formula corpus_instance(const VerifyConfig& cfg, std::uint64_t index) {
  std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ull + index);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GenSpec g;
  g.n = static_cast<Var>(uniform(1, static_cast<int>(cfg.n_max)));
  g.m = static_cast<std::size_t>(uniform(1, 2 * static_cast<int>(g.n) + 1));
  g.max_repeat = uniform(0, 3) == 0 ? 2 : 1;
  g.k_min = uniform(1, 3);
  g.k_max = std::min(uniform(g.k_min, 9), static_cast<int>(g.n) * g.max_repeat);
  g.k_min = std::min(g.k_min, g.k_max);
  g.max_target = uniform(1, 4);
  g.neg_prob = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  g.planted = cfg.planted_only || uniform(0, 1) == 1;
  g.seed = rng();
  return generate(g).formula;
}

InstanceCheck check_instance(const Formula& f) {
  InstanceCheck out;
  const auto oracle = brute_solve_serial(f, kHardOracleLimit);
  out.sat = oracle.sat;
  if (oracle.first_model && !evaluate(f, *oracle.first_model)) out.problem = "oracle model fails";

  const int t = f.max_target();
  auto check = [&](const char* name, const SolveResult& r) {
    if (out.problem) return;
    if ((r.status == Status::Sat) != oracle.sat) {
      out.problem = std::string(name) + " says " + to_string(r.status);
      return;
    }
    if (r.status == Status::Sat) {
      ++out.witnesses_checked;
      if (!r.model || !evaluate(f, *r.model)) out.problem = std::string(name) + " witness fails";
    }
  };
  try {
    if (t <= 2) check("g2", solve_g2(f));
    if (t <= 3) check("g3", solve_g3(f));
    check("g4", solve_g4(f));
    check("auto", solve_auto(f));
    check("mitm", solve_mitm(f, std::nullopt, {}, Sweep::Serial));
  } catch (const std::exception& e) {
    out.problem = std::string("exception: ") + e.what();
  }
  return out;
}

VerifyReport run_verify_corpus(const VerifyConfig& cfg) {
  std::vector<InstanceCheck> results(cfg.count);
  const auto total = static_cast<std::int64_t>(cfg.count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < total; ++i) results[i] = check_instance(corpus_instance(cfg, static_cast<std::uint64_t>(i)));

  VerifyReport rep;
  rep.instances = cfg.count;
  for (std::uint64_t i = 0; i < cfg.count; ++i) {
    const auto& r = results[i];
    rep.sat += r.sat ? 1 : 0;
    rep.witnesses_checked += r.witnesses_checked;
    if (cfg.planted_only && !r.sat && !r.problem) {
      std::ostringstream os;
      os << "instance " << i << ": planted instance reported UNSAT\n" << serialize(corpus_instance(cfg, i));
      rep.mismatches.push_back(os.str());
    }
    if (r.problem) {
      std::ostringstream os;
      os << "instance " << i << ": " << *r.problem << "\n" << serialize(corpus_instance(cfg, i));
      rep.mismatches.push_back(os.str());
    }
  }
  return rep;
}

}  // namespace gixsat
