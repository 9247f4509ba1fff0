#include "doctest.h"
#include "gixsat/generator.hpp"
#include "gixsat/textio.hpp"
#include "helpers.hpp"

using namespace gixsat;
using testing::cl;
using testing::fm;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("grammar examples") {
  CHECK(parse("p gxsat 3 1\n2 1 2 3 0") == fm(3, {cl(2, {1, 2, 3})}));
  CHECK(parse("p gxsat 2 1\n1 1 -1 0") == fm(2, {cl(1, {1, -1})}));
  CHECK(parse("c hello\np gxsat 4 2\n1 1 2\n 3 0 2 4\n-1 0\n") == fm(4, {cl(1, {1, 2, 3}), cl(2, {4, -1})}));
  CHECK(parse("p gxsat 2 1\r\n1 1 2 0\r\n") == fm(2, {cl(1, {1, 2})}));
  CHECK(parse("p gxsat 0 0\n") == Formula(0, {}));
}

TEST_CASE("diagnostics carry positions") {
  CHECK(parse_error("1 1 2 0\n").line() == 1);
  const auto e = parse_error("p gxsat 2 1\n5 1 2 0");
  CHECK(e.line() == 2);
  CHECK(e.column() == 1);
  CHECK(parse_error("p gxsat 2 1\n1 1 3 0").column() == 5);
  CHECK(parse_error("p gxsat 2 1\n1 1 2").line() == 2);
  CHECK(parse_error("p gxsat 2 2\n1 1 2 0\n").line() == 1);  // count mismatch points at the header
  CHECK(parse_error("p gxsat 2 1\n1 1 2 0\n1 1 0\n").line() == 1);
  CHECK(parse_error("p gxsat 2 1\n1 x 0\n").column() == 3);
  CHECK(parse_error("p gxsat 2 1\n-1 1 0\n").line() == 2);
}

TEST_CASE("serialization is canonical and round-trips") {
  CHECK(serialize(Formula(3, {})) == "p gxsat 3 0\n");
  const Formula f = fm(2, {cl(2, {1, 1, 2})});
  CHECK(serialize(f) == "p gxsat 2 1\n2 1 1 2 0\n");
  CHECK(parse(serialize(f)) == f);
  CHECK(serialize(parse("p gxsat 3 1\n1 -3 2 -1 1 0\n")) == "p gxsat 3 1\n1 1 -1 2 -3 0\n");
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GenSpec g;
    g.seed = seed;
    g.max_target = 1 + static_cast<int>(seed % 4);
    g.max_repeat = 2;
    const Formula h = generate(g).formula;
    const std::string once = serialize(h);
    CHECK(parse(once) == h);
    CHECK(serialize(parse(once)) == once);
  }
}
