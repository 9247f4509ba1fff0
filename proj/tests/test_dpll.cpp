#include "doctest.h"
#include "gixsat/dpll.hpp"
#include "gixsat/generator.hpp"
#include "gixsat/oracle.hpp"
#include "helpers.hpp"

using namespace gixsat;
using testing::cl;
using testing::fm;

namespace {

void agrees_with_oracle(const Formula& f, SolveResult (*solver)(const Formula&, const SolveOptions&)) {
  const auto o = brute_solve_serial(f);
  const auto r = solver(f, {});
  CHECK((r.status == Status::Sat) == o.sat);
  if (r.status == Status::Sat) {
    REQUIRE(r.model);
    CHECK(evaluate(f, *r.model));
  }
}

std::uint64_t fires_with_prefix(const SearchStats& s, const std::string& p) {
  std::uint64_t n = 0;
  for (const auto& [k, v] : s.rule_fires)
    if (k.rfind(p, 0) == 0) n += v;
  return n;
}

}  // namespace

TEST_CASE("g2: x and ~x in a C^2 clause") {
  const Formula f = fm(2, {cl(2, {1, -1, 2})});
  const auto r = solve_g2(f);
  REQUIRE(r.status == Status::Sat);
  CHECK((*r.model)[2] == 1);
}

TEST_CASE("g2: fixed regression formula") {
  // a..g = 1..7; 7 models by enumeration.
  const Formula f = fm(7, {cl(2, {1, 2, 3, 4}), cl(2, {1, 2, 5, 6}), cl(1, {3, 5, 7})});
  CHECK(brute_solve_serial(f).model_count == 7);
  agrees_with_oracle(f, solve_g2);
}

TEST_CASE("g2: C^1 clauses sharing one variable use line 9") {
  const Formula f = fm(4, {cl(1, {1, 2, 3}), cl(1, {1, -2, 4})});
  CHECK(brute_solve_serial(f).model_count == 2);
  const auto r = solve_g2(f);
  CHECK(r.status == Status::Sat);
  CHECK(evaluate(f, *r.model));
}

TEST_CASE("g2: each line is reachable and sound") {
  SUBCASE("line 8") {
    const Formula f = fm(5, {cl(1, {1, 2, 3, 4, 5}), cl(2, {1, 3, 5, -2, -4})});
    agrees_with_oracle(f, solve_g2);
    CHECK(fires_with_prefix(solve_g2(f).stats, "g2.L8") > 0);
  }
  SUBCASE("line 9 overlap 3 with odd disagreement refutes") {
    const Formula f = fm(3, {cl(1, {1, 2, 3}), cl(1, {-1, 2, 3})});
    agrees_with_oracle(f, solve_g2);
  }
  SUBCASE("line 10") {
    const Formula f = fm(5, {cl(2, {1, 1, 2, 2, 3, 4}), cl(2, {3, 4, 5, -1, -2})});
    agrees_with_oracle(f, solve_g2);
  }
  SUBCASE("line 12 picks difference or sum") {
    const Formula f = fm(6, {cl(1, {1, 2, 3}), cl(2, {1, 2, 4, 5, 6})});
    agrees_with_oracle(f, solve_g2);
    CHECK(fires_with_prefix(solve_g2(f).stats, "g2.L12") > 0);
    const Formula g = fm(6, {cl(1, {1, 2, 3}), cl(2, {1, -2, 4, 5, 6})});
    agrees_with_oracle(g, solve_g2);
  }
  SUBCASE("line 13") {
    const Formula f = fm(4, {cl(2, {1, 2, 3, 4})});
    const auto r = solve_g2(f);
    CHECK(r.status == Status::Sat);
    CHECK(fires_with_prefix(r.stats, "g2.L13") > 0);
  }
}

TEST_CASE("g2: heavy-variable lines") {
  SUBCASE("one variable in three 6-literal clauses: line 17") {
    const Formula f = fm(16, {cl(2, {1, 2, 3, 4, 5, 6}), cl(2, {1, 7, 8, 9, 10, 11}), cl(2, {1, 12, 13, 14, 15, 16})});
    agrees_with_oracle(f, solve_g2);
    CHECK(fires_with_prefix(solve_g2(f).stats, "g2.L17.bruteheavy") == 1);
  }
  SUBCASE("shorter clause: same-sign branch") {
    const Formula f = fm(16, {cl(2, {1, 2, 3, 4, 5}), cl(2, {1, 7, 8, 9, 10, 11}), cl(2, {1, 12, 13, 14, 15, 16})});
    agrees_with_oracle(f, solve_g2);
    CHECK(fires_with_prefix(solve_g2(f).stats, "g2.L16.samesign") == 1);
  }
  SUBCASE("mixed signs") {
    const Formula f = fm(16, {cl(2, {1, 2, 3, 4, 5, 6}), cl(2, {-1, 7, 8, 9, 10, 11}), cl(2, {1, 12, 13, 14, 15, 16})});
    agrees_with_oracle(f, solve_g2);
    CHECK(fires_with_prefix(solve_g2(f).stats, "g2.L16.mixedsign") == 1);
  }
  SUBCASE("two heavy variables sharing a clause: four-way branch") {
    const Formula f = fm(26, {cl(2, {1, 2, 3, 4, 5, 6}), cl(2, {1, 7, 8, 9, 10, 11}), cl(2, {1, 12, 13, 14, 15, 16}),
                              cl(2, {2, 17, 18, 19, 20, 21}), cl(2, {2, 22, 23, 24, 25, 26})});
    const auto r = solve_g2(f);
    REQUIRE(r.status == Status::Sat);
    CHECK(evaluate(f, *r.model));
    CHECK(fires_with_prefix(r.stats, "g2.L16.heavypair") == 1);
  }
}

TEST_CASE("g2 rejects larger targets") {
  CHECK_THROWS_AS(solve_g2(fm(3, {cl(3, {1, 2, 3})})), std::invalid_argument);
}

TEST_CASE("g3 examples") {
  const auto r = solve_g3(fm(3, {cl(3, {1, 2, 3})}));
  REQUIRE(r.status == Status::Sat);
  CHECK((*r.model)[1] == 1);
  CHECK((*r.model)[2] == 1);
  CHECK((*r.model)[3] == 1);
  CHECK(solve_g3(fm(3, {cl(3, {1, 1, 2, 2, 3, 3})})).status == Status::Unsat);
  CHECK_THROWS_AS(solve_g3(fm(4, {cl(4, {1, 2, 3, 4})})), std::invalid_argument);
}

TEST_CASE("g4 examples") {
  const Formula f = fm(2, {cl(4, {1, 1, 1, 1, 2})});
  const auto r = solve_g4(f);
  REQUIRE(r.status == Status::Sat);
  CHECK((*r.model)[1] == 1);
  CHECK((*r.model)[2] == 0);
  const Formula g = fm(4, {cl(4, {1, 1, 2, 2, 3, 3, 4, 4})});
  CHECK(solve_g4(g).status == Status::Sat);
  CHECK(evaluate(g, *solve_g4(g).model));
}

TEST_CASE("solve_auto dispatch") {
  CHECK(solve_auto(fm(3, {cl(1, {1, 2, 3})})).stats.rule_fires.count("g3.L6") == 0);
  const auto r3 = solve_auto(fm(7, {cl(3, {1, 2, 3, 4, 5, 6, 7})}));
  CHECK(fires_with_prefix(r3.stats, "g3.") > 0);
  CHECK_THROWS_AS(solve_auto(fm(5, {cl(5, {1, 2, 3, 4, 5})})), std::invalid_argument);
}

TEST_CASE("endgame on low-degree formulas") {
  CHECK(endgame_low_degree(Formula(3, {})).status == Status::Sat);
  CHECK(endgame_low_degree(fm(6, {cl(1, {1, 2, 3}), cl(2, {4, 5, 6})})).status == Status::Sat);
  CHECK(endgame_low_degree(fm(4, {cl(1, {1, 2}), cl(3, {3, 4})})).status == Status::Unsat);
  // Chain of C^2 clauses sharing one variable each; 54 models by enumeration.
  const Formula chain = fm(10, {cl(2, {1, 2, 3, 4}), cl(2, {4, 5, 6, 7}), cl(2, {7, 8, 9, 10})});
  CHECK(brute_solve_serial(chain).model_count == 54);
  const auto r = endgame_low_degree(chain);
  REQUIRE(r.status == Status::Sat);
  CHECK(evaluate(chain, *r.model));
  CHECK_THROWS_AS(endgame_low_degree(fm(4, {cl(1, {1, 2}), cl(1, {1, 3}), cl(1, {1, 4})})), std::logic_error);
}

TEST_CASE("random instances agree with the oracle") {
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    GenSpec g;
    g.seed = seed;
    g.n = 10 + seed % 3;
    g.m = 3 + seed % 9;
    g.k_min = 2;
    g.k_max = 7;
    g.max_target = 1 + static_cast<int>(seed % 4);
    g.max_repeat = 1 + static_cast<int>(seed % 2);
    g.planted = seed % 3 != 0;
    const Formula f = generate(g).formula;
    agrees_with_oracle(f, solve_auto);
    if (f.max_target() <= 3) agrees_with_oracle(f, solve_g3);
    agrees_with_oracle(f, solve_g4);
  }
}

TEST_CASE("measure instrumentation and determinism") {
  GenSpec g;
  g.n = 14;
  g.m = 9;
  g.k_min = 3;
  g.k_max = 7;
  g.max_target = 2;
  g.planted = true;
  std::uint64_t violations = 0, checks = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    g.seed = seed;
    const Formula f = generate(g).formula;
    SolveOptions opt;
    opt.check_measure = true;
    const auto a = solve_g2(f, opt);
    const auto b = solve_g2(f, opt);
    CHECK(a.stats.rule_fires == b.stats.rule_fires);
    CHECK(a.stats.nodes_expanded == b.stats.nodes_expanded);
    violations += a.stats.measure_violations;
    checks += a.stats.measure_checks;
  }
  CHECK(checks > 0);
  CHECK(violations == 0);
}

TEST_CASE("deadline aborts the search") {
  GenSpec g;
  g.n = 60;
  g.m = 25;
  g.k_min = 5;
  g.k_max = 8;
  g.max_target = 4;
  g.seed = 3;
  SolveOptions opt;
  opt.deadline = Deadline::after(-1);
  CHECK_THROWS_AS(solve_auto(generate(g).formula, opt), TimeoutError);
}
