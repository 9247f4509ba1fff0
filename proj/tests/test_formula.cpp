#include "doctest.h"
#include "gixsat/formula.hpp"
#include "gixsat/oracle.hpp"
#include "helpers.hpp"

using namespace gixsat;
using testing::cl;
using testing::fm;
using testing::model;

TEST_CASE("literal negation is an involution") {
  for (long long x : {1LL, -1LL, 7LL, -42LL}) {
    const Lit l = Lit::from_dimacs(x);
    CHECK(~~l == l);
    CHECK(l.to_dimacs() == x);
    CHECK((~l).to_dimacs() == -x);
  }
}

TEST_CASE("assign folds values into targets") {
  SUBCASE("C^1 (x y z), x=1 gives C^0 (y z)") {
    Formula f = fm(3, {cl(1, {1, 2, 3})});
    Trail t(3);
    REQUIRE(assign(f, t, 1, true) == Outcome::Ok);
    CHECK(f.clauses[0] == cl(0, {2, 3}));
  }
  SUBCASE("C^2 (x x y z), x=1 gives C^0 (y z)") {
    Formula f = fm(3, {cl(2, {1, 1, 2, 3})});
    Trail t(3);
    REQUIRE(assign(f, t, 1, true) == Outcome::Ok);
    CHECK(f.clauses[0] == cl(0, {2, 3}));
  }
  SUBCASE("C^1 (x x), x=1 conflicts") {
    Formula f = fm(1, {cl(1, {1, 1})});
    Trail t(1);
    CHECK(assign(f, t, 1, true) == Outcome::Conflict);
  }
  SUBCASE("negative literal x=0 counts as true") {
    Formula f = fm(2, {cl(1, {-1, 2})});
    Trail t(2);
    REQUIRE(assign(f, t, 1, false) == Outcome::Ok);
    CHECK(f.clauses[0] == cl(0, {2}));
  }
}

TEST_CASE("link substitutes and cancels complements") {
  SUBCASE("C^2 (x y w v) with y := ~x becomes C^1 (w v)") {
    Formula f = fm(4, {cl(2, {1, 2, 3, 4})});
    Trail t(4);
    REQUIRE(link(f, t, 2, Lit(1, false)) == Outcome::Ok);
    CHECK(f.clauses[0] == cl(1, {3, 4}));
    // With y = ~x: two choices of x times two of (w, v).
    const Formula before = fm(4, {cl(2, {1, 2, 3, 4}), cl(1, {1, 2})});
    const auto ob = brute_solve_serial(before);
    const auto oa = brute_solve_serial(fm(4, {cl(1, {3, 4})}));
    CHECK(ob.model_count == 4);
    CHECK(oa.model_count == 8);  // x free, y unconstrained in the reduced formula
  }
  SUBCASE("self link is rejected") {
    Formula f = fm(2, {cl(1, {1, 2})});
    Trail t(2);
    CHECK_THROWS_AS((void)link(f, t, 1, Lit(1, false)), std::logic_error);
  }
}

TEST_CASE("evaluate counts with multiplicity") {
  CHECK(evaluate(fm(2, {cl(2, {1, -1, 2})}), model(2, {2})));
  CHECK_FALSE(evaluate(fm(1, {cl(2, {1, -1})}), model(1, {1})));
  CHECK_FALSE(evaluate(fm(1, {cl(2, {1, -1})}), model(1, {})));
  CHECK(evaluate(fm(2, {cl(1, {1, 1, 2})}), model(2, {2})));
  CHECK_FALSE(evaluate(fm(2, {cl(1, {1, 1, 2})}), model(2, {1})));
}

TEST_CASE("evaluate agrees with truth tables on small formulas") {
  const Formula f = fm(3, {cl(1, {1, 2, -3}), cl(2, {1, 1, 3})});
  for (unsigned a = 0; a < 8; ++a) {
    Assignment m(4, 0);
    for (Var v = 1; v <= 3; ++v) m[v] = (a >> (v - 1)) & 1u;
    const int c1 = m[1] + m[2] + (1 - m[3]);
    const int c2 = 2 * m[1] + m[3];
    CHECK(evaluate(f, m) == (c1 == 1 && c2 == 2));
  }
}

TEST_CASE("trail reconstruction") {
  SUBCASE("links follow to roots") {
    Trail t(3);
    t.set_link(2, Lit(3, false));
    PartialAssignment roots(4);
    roots[1] = true;
    roots[3] = false;
    CHECK(t.reconstruct(roots) == model(3, {1, 2}));
  }
  SUBCASE("empty trail is the identity") {
    Trail t(3);
    PartialAssignment roots(4);
    roots[1] = true;
    roots[2] = false;
    roots[3] = true;
    CHECK(t.reconstruct(roots) == model(3, {1, 3}));
  }
  SUBCASE("resolved variable is the beta count") {
    Trail t(5);
    t.set_resolved(1, {Lit(2, true), Lit(3, true)}, {Lit(4, true), Lit(5, true)});
    PartialAssignment roots(6);
    roots[2] = roots[3] = false;
    roots[4] = true;
    roots[5] = false;
    CHECK(t.reconstruct(roots)[1] == 1);
    roots[4] = false;
    CHECK(t.reconstruct(roots)[1] == 0);
  }
  SUBCASE("unvalued root is a fault") {
    Trail t(2);
    t.set_link(1, Lit(2, true));
    CHECK_THROWS_AS(t.reconstruct(PartialAssignment(3)), std::logic_error);
  }
}

TEST_CASE("degree counts every occurrence") {
  const Formula f = fm(4, {cl(1, {1, 2, 3}), cl(2, {1, 1, 4}), cl(1, {-1, 4, 2})});
  CHECK(degree(f, 1) == 4);
  CHECK(is_heavy(f, 1));
  CHECK(degree(f, 3) == 1);
  CHECK_FALSE(is_heavy(f, 3));
  const Formula g = fm(3, {cl(1, {1, 2, 3}), cl(1, {1, -2}), cl(1, {1, 3})});
  CHECK(degree(g, 1) == 3);
  CHECK(degree(fm(5, {cl(1, {1, 2})}), 5) == 0);
  CHECK(degree(fm(2, {cl(2, {1, 1, 2}), cl(1, {1, 2})}), 1) == 3);
}
