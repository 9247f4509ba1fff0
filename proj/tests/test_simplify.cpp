#include <random>

#include "doctest.h"
#include "gixsat/generator.hpp"
#include "gixsat/oracle.hpp"
#include "gixsat/simplify.hpp"
#include "helpers.hpp"

using namespace gixsat;
using testing::cl;
using testing::fm;

namespace {

Formula simplified(Formula f, SimplifyStatus* status = nullptr) {
  Trail t(f.num_vars);
  const auto s = simplify_to_fixpoint(f, t);
  if (status) *status = s;
  return f;
}

}  // namespace

TEST_CASE("negation downgrade: C^2 (x y z) becomes C^1 (~x ~y ~z)") {
  CHECK(simplified(fm(3, {cl(2, {1, 2, 3})})).clauses == std::vector{cl(1, {-1, -2, -3})});
}

TEST_CASE("uniform multiplicity: C^2 (xx yy zz ww) becomes C^1 (x y z w)") {
  CHECK(simplified(fm(4, {cl(2, {1, 1, 2, 2, 3, 3, 4, 4})})).clauses == std::vector{cl(1, {1, 2, 3, 4})});
}

TEST_CASE("halving: C^4 (xx yy zz) becomes C^2 (x y z) and then C^1 negated") {
  // The halved clause has 2j > k, so the negation downgrade follows.
  CHECK(simplified(fm(3, {cl(4, {1, 1, 2, 2, 3, 3})})).clauses == std::vector{cl(1, {-1, -2, -3})});
}

TEST_CASE("over-occurrence assigns the literal false") {
  Formula f = fm(3, {cl(3, {1, 1, 1, 1, 2, 3, -2, 3})});
  Trail t(3);
  REQUIRE(simplify_to_fixpoint(f, t) == SimplifyStatus::Simplified);
  CHECK(t.state(1) == VarState{Constant{false}});
}

TEST_CASE("cheap unsatisfiability") {
  SimplifyStatus s{};
  simplified(fm(2, {cl(3, {1, 2})}), &s);
  CHECK(s == SimplifyStatus::Unsatisfiable);
  simplified(fm(1, {cl(1, {})}), &s);
  CHECK(s == SimplifyStatus::Unsatisfiable);
  simplified(fm(1, {cl(2, {1, -1})}), &s);
  CHECK(s == SimplifyStatus::Unsatisfiable);
  CHECK(clause_obviously_unsat(cl(-1, {1})));
  CHECK(clause_obviously_unsat(cl(1, {1, 1})));  // single variable, count 0 or 2
  CHECK_FALSE(clause_obviously_unsat(cl(2, {1, 1})));
}

TEST_CASE("2-literal C^1 links") {
  Formula f = fm(4, {cl(1, {1, 2}), cl(1, {1, 3, 4})});
  Trail t(4);
  REQUIRE(simplify_to_fixpoint(f, t) == SimplifyStatus::Simplified);
  CHECK(std::holds_alternative<LinkedTo>(t.state(1)));

  // After x = ~y the C^2 clause reads 1 + 2z = 2.
  SimplifyStatus st{};
  simplified(fm(3, {cl(1, {1, 2}), cl(2, {1, 2, 3, 3})}), &st);
  CHECK(st == SimplifyStatus::Unsatisfiable);
  CHECK_FALSE(brute_solve_serial(fm(3, {cl(1, {1, 2}), cl(2, {1, 2, 3, 3})})).sat);
}

TEST_CASE("fixpoint is idempotent and equisatisfiable") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    GenSpec g;
    g.seed = seed;
    g.n = 6 + seed % 3;
    g.m = 2 + seed % 5;
    g.k_min = 1;
    g.k_max = 6;
    g.max_target = 1 + static_cast<int>(seed % 4);
    g.max_repeat = 1 + static_cast<int>(seed % 3);
    g.planted = seed % 2 == 0;
    const Formula f = generate(g).formula;
    Formula s = f;
    Trail t(f.num_vars);
    const auto status = simplify_to_fixpoint(s, t);
    const bool sat = brute_solve_serial(f).sat;
    if (status == SimplifyStatus::Unsatisfiable) {
      CHECK_FALSE(sat);
      continue;
    }
    CHECK(brute_solve_serial(s).sat == sat);
    Formula again = s;
    Trail t2 = t;
    REQUIRE(simplify_to_fixpoint(again, t2) == SimplifyStatus::Simplified);
    CHECK(again == s);
    for (const auto& c : s.clauses) {
      if (c.target == 1) CHECK(c.size() >= 3);
      for (auto [l, m] : c.runs()) CHECK(m <= c.target);
    }
  }
}

TEST_CASE("resolution") {
  SUBCASE("(a b x), (c d ~x), C^2 (x e f) becomes C^2 (c d e f)") {
    // a=1 b=2 c=3 d=4 x=5 e=6 f=7
    Formula f = fm(7, {cl(1, {1, 2, 5}), cl(1, {3, 4, -5}), cl(2, {5, 6, 7})});
    Trail t(7);
    REQUIRE(can_resolve(f, 5));
    REQUIRE(resolve(f, t, 5) == Outcome::Ok);
    bool found = false;
    for (const auto& c : f.clauses) found = found || c == cl(2, {3, 4, 6, 7});
    CHECK(found);
    CHECK(std::holds_alternative<ResolvedBy>(t.state(5)));
  }
  SUBCASE("positive-only variable cannot be resolved") {
    Formula f = fm(4, {cl(1, {1, 2, 3}), cl(1, {1, 4, 2})});
    Trail t(4);
    CHECK_FALSE(can_resolve(f, 1));
    CHECK_THROWS_AS((void)resolve(f, t, 1), std::logic_error);
  }
  SUBCASE("preserves satisfiability and reconstructs models") {
    std::mt19937_64 rng(5);
    int tried = 0;
    for (int trial = 0; trial < 3000 && tried < 150; ++trial) {
      GenSpec g;
      g.seed = rng();
      g.n = 7;
      g.m = 4;
      g.k_min = 2;
      g.k_max = 4;
      g.max_target = 2;
      Formula f = generate(g).formula;
      for (Var x = 1; x <= f.num_vars; ++x) {
        if (!can_resolve(f, x)) continue;
        ++tried;
        Formula r = f;
        Trail t(f.num_vars);
        const bool sat = brute_solve_serial(f).sat;
        if (resolve(r, t, x) == Outcome::Conflict) {
          CHECK_FALSE(sat);
          break;
        }
        const auto o = brute_solve_serial(r);
        CHECK(o.sat == sat);
        if (o.sat) {
          PartialAssignment roots(f.num_vars + 1);
          for (Var v = 1; v <= f.num_vars; ++v)
            if (t.is_unassigned(v)) roots[v] = (*o.first_model)[v] != 0;
          CHECK(evaluate(f, t.reconstruct(roots)));
        }
        break;
      }
    }
    CHECK(tried > 20);
  }
}
