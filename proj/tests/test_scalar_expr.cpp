#include "doctest.h"
#include "pwl/errors.hpp"
#include "pwl/scalar_expr.hpp"

using namespace pwl;

namespace {

std::size_t syntax_offset(const char* text) {
  try {
    parse_scalar(text);
  } catch (const SyntaxError& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    return e.offset;
  }
  FAIL("no syntax error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("values") {
  CHECK(parse_scalar("sqrt(2)-1") == 0.41421356237309515);
  CHECK(parse_scalar("-455/100") == -4.55);
  CHECK(parse_scalar("2*sqrt(3)") == 3.4641016151377544);
  CHECK(parse_scalar(" 1 + 2 * 3 ") == 7.0);
  CHECK(parse_scalar("(1+2)*3") == 9.0);
  CHECK(parse_scalar("8/4/2") == 1.0);
  CHECK(parse_scalar("1-2-3") == -4.0);
  CHECK(parse_scalar("--2") == 2.0);
  CHECK(parse_scalar("-sqrt(2)+1") == -(parse_scalar("sqrt(2)") - 1.0));
  CHECK(parse_scalar("pi") == 3.141592653589793);
  CHECK(parse_scalar("1.5e2") == 150.0);
  CHECK(parse_scalar(".5") == 0.5);
}

TEST_CASE("syntax errors carry offsets") {
  CHECK(syntax_offset("") == 0);
  CHECK(syntax_offset("1+") == 2);
  CHECK(syntax_offset("2*(3") == 4);
  CHECK(syntax_offset("abc") == 0);
  CHECK(syntax_offset("1 2") == 2);
  CHECK(syntax_offset("sqrt 2") == 5);
  CHECK(syntax_offset("(1))") == 3);
}

TEST_CASE("domain errors") {
  for (const char* t : {"sqrt(-1)", "1/0", "sqrt(1-2)"}) {
    try {
      parse_scalar(t);
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DomainError);
    }
  }
  CHECK(parse_scalar("sqrt(0)") == 0.0);
}
