#include "doctest.h"
#include "gixsat/generator.hpp"
#include "gixsat/oracle.hpp"
#include "gixsat/textio.hpp"

using namespace gixsat;

TEST_CASE("generation is deterministic by seed") {
  GenSpec g;
  g.seed = 77;
  CHECK(generate(g).formula == generate(g).formula);
  GenSpec h = g;
  h.seed = 78;
  CHECK_FALSE(generate(g).formula == generate(h).formula);
}

TEST_CASE("planted instances are satisfiable by their model") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenSpec g;
    g.seed = seed;
    g.n = 12;
    g.m = 10;
    g.k_min = 1;
    g.k_max = 8;
    g.max_target = 1 + static_cast<int>(seed % 4);
    g.max_repeat = 1 + static_cast<int>(seed % 3);
    g.planted = true;
    const auto out = generate(g);
    REQUIRE(out.planted);
    CHECK(evaluate(out.formula, *out.planted));
    CHECK(brute_solve_serial(out.formula).sat);
    for (const auto& c : out.formula.clauses) {
      CHECK(c.target >= 1);
      CHECK(c.target <= g.max_target);
      CHECK(c.size() >= static_cast<std::size_t>(g.k_min));
      CHECK(c.size() <= static_cast<std::size_t>(g.k_max));
    }
    CHECK(parse(serialize(out.formula)) == out.formula);
  }
}

TEST_CASE("random mode mixes SAT and UNSAT") {
  int sat = 0;
  GenSpec g;
  g.n = 12;
  g.m = 8;
  g.max_target = 4;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    g.seed = seed;
    sat += brute_solve(generate(g).formula).sat ? 1 : 0;
  }
  CHECK(sat > 0);
  CHECK(sat < 1000);
}

TEST_CASE("infeasible specs are rejected") {
  GenSpec g;
  g.n = 3;
  g.k_max = 5;
  g.k_min = 3;
  CHECK_THROWS_AS(validate(g), std::invalid_argument);
  g = GenSpec{};
  g.max_target = 5;
  CHECK_THROWS_AS(validate(g), std::invalid_argument);
  g = GenSpec{};
  g.k_min = 0;
  CHECK_THROWS_AS(validate(g), std::invalid_argument);
  g = GenSpec{};
  g.k_min = 5;
  g.k_max = 4;
  CHECK_THROWS_AS(generate(g), std::invalid_argument);
}
