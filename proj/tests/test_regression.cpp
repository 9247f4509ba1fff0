#include <stdexcept>

#include "doctest.h"
#include "gixsat/regression.hpp"

using namespace gixsat;
using doctest::Approx;

TEST_CASE("term arithmetic") {
  CHECK(eval_term("1.5") == Approx(1.5));
  CHECK(eval_term("3.2992+6.7008") == Approx(10.0));
  CHECK(eval_term("2*0.8039-1") == Approx(0.6078));
  CHECK(eval_term("1-0.25+2*3") == Approx(6.75));
  CHECK_THROWS(eval_term(""));
  CHECK_THROWS(eval_term("1+"));
  CHECK_THROWS(eval_term("2x"));
}

TEST_CASE("fixture parsing") {
  const auto cases = parse_tau_fixture("# header\n\n2,3 = 1.3248  # trailing\n1,1=2\n");
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].line == 3);
  CHECK(cases[0].terms == BranchingVector{2, 3});
  CHECK(cases[0].expected == Approx(1.3248));
  CHECK(cases[1].line == 4);
  CHECK_THROWS_AS(parse_tau_fixture("2,3\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_tau_fixture("ok\n2,,3 = 1\n"), std::runtime_error);
}

TEST_CASE("shipped fixture reproduces") {
  const auto cases = load_tau_fixture(default_fixture_path());
  CHECK(cases.size() >= 40);
  for (const auto& item : tau_regression(cases)) {
    INFO(item.name);
    CHECK(item.pass);
  }
}

TEST_CASE("alpha, binomial and counting tables reproduce") {
  for (const auto& group : {alpha_regression(), binomial_table_regression(), counting_table_regression()}) {
    CHECK_FALSE(group.empty());
    for (const auto& item : group) {
      INFO(item.group << " " << item.name);
      CHECK(item.pass);
    }
  }
}
