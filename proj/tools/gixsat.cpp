// gixsat: solve | gen | analyze | verify | bench

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gixsat/dpll.hpp"
#include "gixsat/generator.hpp"
#include "gixsat/mitm.hpp"
#include "gixsat/oracle.hpp"
#include "gixsat/regression.hpp"
#include "gixsat/textio.hpp"
#include "gixsat/verify.hpp"

namespace {

using namespace gixsat;

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;

struct SolveArgs {
  std::string file;
  std::string algo = "auto";
  double alpha = 0;
  bool witness = false;
  bool stats = false;
  bool check_measure = false;
  double timeout = 0;
};

void print_stats(const SolveResult& r) {
  const auto& s = r.stats;
  std::cout << "c nodes " << s.nodes_expanded << "\n"
            << "c depth " << s.max_depth << "\n"
            << "c measure_root " << s.measure_at_root << "\n"
            << "c fallbacks " << s.fallbacks << "\n"
            << "c simplify " << s.simplify.total() << "\n";
  if (s.measure_checks > 0)
    std::cout << "c measure_checks " << s.measure_checks << "\n"
              << "c measure_violations " << s.measure_violations << "\n"
              << "c debt_deferrals " << s.debt_deferrals << "\n";
  for (const auto& [k, v] : s.rule_fires) std::cout << "c rule " << k << " " << v << "\n";
  for (const auto& [k, v] : s.violations_by_rule) std::cout << "c violation " << k << " " << v << "\n";
  for (const auto& [k, v] : s.info) std::cout << "c info " << k << " " << v << "\n";
}

int run_solve(const SolveArgs& a) {
  Formula f;
  try {
    f = a.file == "-" ? parse(std::string(std::istreambuf_iterator<char>(std::cin), {})) : parse_file(a.file);
  } catch (const std::exception& e) {
    std::cerr << "gixsat: " << e.what() << "\n";
    return kExitInput;
  }
  SolveOptions opt;
  opt.check_measure = a.check_measure;
  if (a.timeout > 0) opt.deadline = Deadline::after(a.timeout);
  try {
    SolveResult r;
    if (a.algo == "auto") r = solve_auto(f, opt);
    else if (a.algo == "g2") r = solve_g2(f, opt);
    else if (a.algo == "g3") r = solve_g3(f, opt);
    else if (a.algo == "g4") r = solve_g4(f, opt);
    else if (a.algo == "mitm") r = solve_mitm(f, a.alpha > 0 ? std::optional<double>(a.alpha) : std::nullopt, opt);
    else {
      const auto o = brute_solve(f, oracle_limit(), opt.deadline);
      r.status = o.sat ? Status::Sat : Status::Unsat;
      r.model = o.first_model;
      r.stats.info["model_count"] = static_cast<double>(o.model_count);
    }
    std::cout << "s " << to_string(r.status) << "\n";
    if (r.status == Status::Sat && r.model && !evaluate(f, *r.model)) {
      std::cerr << "gixsat: internal error, witness fails the formula\n";
      return kExitInput;
    }
    if (a.witness && r.model) {
      std::cout << "v";
      for (Var v = 1; v <= f.num_vars; ++v) std::cout << ' ' << ((*r.model)[v] ? "" : "-") << v;
      std::cout << " 0\n";
    }
    if (a.stats) print_stats(r);
    return r.status == Status::Sat ? kExitSat : kExitUnsat;
  } catch (const ResourceError& e) {
    std::cout << "s UNKNOWN\n";
    std::cerr << "gixsat: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gixsat: " << e.what() << "\n";
    return kExitInput;
  }
}

int run_gen(const GenSpec& g, const std::string& out) {
  try {
    const auto gen = generate(g);
    std::ostringstream text;
    text << "c seed " << g.seed << (g.planted ? " planted" : "") << "\n";
    if (gen.planted) {
      text << "c model";
      for (Var v = 1; v <= g.n; ++v) text << ' ' << ((*gen.planted)[v] ? "" : "-") << v;
      text << " 0\n";
    }
    text << serialize(gen.formula);
    if (out.empty() || out == "-") {
      std::cout << text.str();
    } else {
      std::ofstream os(out);
      if (!os) throw std::runtime_error("cannot write " + out);
      os << text.str();
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "gixsat: " << e.what() << "\n";
    return kExitInput;
  }
}

void print_item(const RegressionItem& it) {
  std::printf("%s %-5s %s expected %.6g got %.6g\n", it.pass ? "PASS" : "FAIL", it.group.c_str(), it.name.c_str(),
              it.expected, it.got);
}

struct AnalyzeArgs {
  std::string tau;
  double alpha_for_c = 0;
  int tables = 0;
  bool regression = false;
  std::string fixture;
};

int run_analyze(const AnalyzeArgs& a) {
  try {
    if (!a.tau.empty()) {
      const auto cases = parse_tau_fixture(a.tau + " = 0");
      std::printf("tau %.4f\n", branching_factor(cases.front().terms));
    }
    if (a.alpha_for_c > 0) {
      const auto ab = alpha_for(a.alpha_for_c);
      std::printf("alpha %.6f\nbase %.4f\n", ab.alpha, ab.base);
    }
    if (a.tables > 0) {
      std::printf("%-8s", "l");
      for (int l = 1; l <= a.tables; ++l) std::printf(" %8d", l);
      std::printf("\n");
      for (int h = 1; h <= 4; ++h) {
        for (const bool is_f : {true, false}) {
          std::printf("%s(l,%d)  ", is_f ? "F" : "G", h);
          for (int l = 1; l <= a.tables; ++l)
            std::printf(" %8llu", static_cast<unsigned long long>(is_f ? F(l, h) : G(l, h)));
          std::printf("\n");
        }
      }
      for (int k = 2; k <= a.tables; ++k) {
        std::printf("binom k=%-3d", k);
        for (int h = 1; h <= std::min(4, k - 1); ++h) std::printf(" %.4f", binom_branching(k, h));
        std::printf("\n");
      }
      const auto rep = verify_F_le_G(a.tables);
      std::printf("F<=G %s (%llu profiles, %llu oracle checks)\n", rep.ok ? "holds" : "FAILS",
                  static_cast<unsigned long long>(rep.profiles_checked),
                  static_cast<unsigned long long>(rep.oracle_checked));
      if (!rep.ok) return 1;
    }
    if (a.regression) {
      std::vector<RegressionItem> all = tau_regression(load_tau_fixture(a.fixture.empty() ? default_fixture_path() : a.fixture));
      for (auto* g : {alpha_regression, binomial_table_regression, counting_table_regression})
        for (auto& it : g()) all.push_back(std::move(it));
      int fails = 0;
      for (const auto& it : all) {
        print_item(it);
        fails += it.pass ? 0 : 1;
      }
      std::printf("%s %zu entries, %d failed\n", fails ? "FAIL" : "PASS", all.size(), fails);
      return fails ? 1 : 0;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "gixsat: " << e.what() << "\n";
    return kExitInput;
  }
}

int run_verify(const VerifyConfig& cfg) {
  const auto report = run_verify_corpus(cfg);
  for (const auto& m : report.mismatches) std::cout << "MISMATCH " << m << "\n";
  std::cout << "instances " << report.instances << " sat " << report.sat << " mismatches "
            << report.mismatches.size() << "\n";
  return report.mismatches.empty() ? 0 : 1;
}

struct BenchArgs {
  Var n = 22;
  std::size_t m = 12;
  int count = 5;
  std::uint64_t seed = 1;
};

template <class Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_bench(const BenchArgs& b) {
  std::printf("%-6s %10s %10s %10s %10s %10s\n", "seed", "brute_ser", "brute_par", "mitm_ser", "mitm_par", "auto");
  for (int i = 0; i < b.count; ++i) {
    GenSpec g;
    g.n = b.n;
    g.m = b.m;
    g.k_min = 3;
    g.k_max = 7;
    g.max_target = 2;
    g.planted = true;
    g.seed = b.seed + static_cast<std::uint64_t>(i);
    const auto f = generate(g).formula;
    const double bs = seconds([&] { (void)brute_solve_serial(f, kHardOracleLimit); });
    const double bp = seconds([&] { (void)brute_solve(f, kHardOracleLimit); });
    const double ms = seconds([&] { (void)solve_mitm(f, std::nullopt, {}, Sweep::Serial); });
    const double mp = seconds([&] { (void)solve_mitm(f, std::nullopt, {}, Sweep::Parallel); });
    const double au = seconds([&] { (void)solve_auto(f); });
    std::printf("%-6llu %10.4f %10.4f %10.4f %10.4f %10.4f\n", static_cast<unsigned long long>(g.seed), bs, bp, ms, mp,
                au);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-count satisfiability solvers for GiXSAT (i <= 4)"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "decide a formula");
  solve->add_option("file", sa.file, "input file, '-' for stdin")->required();
  solve->add_option("--algo", sa.algo, "solver route")
      ->check(CLI::IsMember({"auto", "g2", "g3", "g4", "mitm", "brute"}));
  solve->add_option("--alpha", sa.alpha, "meet-in-the-middle split")->check(CLI::Range(0.0, 1.0));
  solve->add_flag("--witness", sa.witness, "print the model");
  solve->add_flag("--stats", sa.stats, "print search statistics");
  solve->add_flag("--check-measure", sa.check_measure, "instrument measure decrease");
  solve->add_option("--timeout", sa.timeout, "seconds");

  GenSpec gs;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--n", gs.n, "variables");
  gen->add_option("--m", gs.m, "clauses");
  gen->add_option("--kmin", gs.k_min, "shortest clause");
  gen->add_option("--kmax", gs.k_max, "longest clause");
  gen->add_option("--max-target", gs.max_target, "largest target i");
  gen->add_option("--neg-prob", gs.neg_prob, "negation probability");
  gen->add_option("--max-repeat", gs.max_repeat, "occurrences per variable in a clause");
  gen->add_flag("--planted", gs.planted, "hide a model");
  gen->add_option("--seed", gs.seed, "seed");
  gen->add_option("-o,--output", gen_out, "output file");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "branching factors and tables");
  analyze->add_option("--tau", aa.tau, "comma-separated branching vector");
  analyze->add_option("--alpha-for", aa.alpha_for_c, "split for a covered-side base");
  analyze->add_option("--tables", aa.tables, "F/G and binomial tables up to l");
  analyze->add_flag("--paper-regression", aa.regression, "check all shipped values");
  analyze->add_option("--fixture", aa.fixture, "tau fixture file");

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "cross-check solvers against the oracle");
  verify->add_option("--count", vc.count, "instances");
  verify->add_option("--n", vc.n_max, "largest n")->check(CLI::Range(1, 20));
  verify->add_option("--seed", vc.seed, "seed");
  verify->add_flag("--planted", vc.planted_only, "planted instances only");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "serial vs parallel timings");
  bench->add_option("--n", ba.n, "variables")->check(CLI::Range(1, 30));
  bench->add_option("--m", ba.m, "clauses");
  bench->add_option("--count", ba.count, "instances");
  bench->add_option("--seed", ba.seed, "first seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }
  if (*solve) return run_solve(sa);
  if (*gen) return run_gen(gs, gen_out);
  if (*analyze) return run_analyze(aa);
  if (*verify) return run_verify(vc);
  return run_bench(ba);
}
