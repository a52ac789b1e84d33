#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whitt/laurent.hpp"

using namespace whitt;

namespace {
const LPoly h = LPoly::var(kH), a = LPoly::var(kA), b = LPoly::var(kB), c = LPoly::var(kC);
}

TEST_CASE("ring operations") {
  CHECK((h + h) == LPoly(2) * h);
  CHECK((h - h).is_zero());
  CHECK(((h + 1) * (h - 1)) == h * h - LPoly(1));
  CHECK((a * a.inverse()) == LPoly(1));
  CHECK((LPoly(3) * a).inverse() == ratio(1, 3) * LPoly::var(kA, -1));
  CHECK(LPoly(5).is_constant());
  CHECK(LPoly(5).constant_term() == 5);
  CHECK_FALSE(h.is_constant());
}

TEST_CASE("only monomials in a are units") {
  CHECK(a.is_unit());
  CHECK(LPoly(-2).is_unit());
  CHECK(LPoly::var(kA, -3).is_unit());
  CHECK_FALSE(b.is_unit());
  CHECK_FALSE((a + 1).is_unit());
  CHECK_FALSE(LPoly().is_unit());
  CHECK_THROWS_AS(b.inverse(), std::domain_error);
}

TEST_CASE("shift in h") {
  CHECK((h * h).shift_h(1) == h * h + LPoly(2) * h + LPoly(1));
  CHECK((a * h).shift_h(-2) == a * h - LPoly(2) * a);
  CHECK(b.shift_h(7) == b);
  auto p = h * h * h + b * h;
  CHECK(p.shift_h(3).shift_h(-3) == p);
}

TEST_CASE("substitution") {
  auto p = b - LPoly(4) * c * c + LPoly(4) * c;
  CHECK(p.substitute(kB, LPoly(4) * c * c - LPoly(4) * c).is_zero());
  CHECK((h * LPoly::var(kA, -1)).substitute({{kA, 2}}) == ratio(1, 2) * h);
  CHECK((a + b).substitute({{kA, 1}, {kB, 3}}) == LPoly(4));
  CHECK_THROWS_AS(LPoly::var(kA, -1).substitute({{kA, 0}}), std::domain_error);
}

TEST_CASE("coefficients in h") {
  auto p = LPoly(3) * h * h + b * h + a;
  CHECK(p.max_degree(kH) == 2);
  CHECK(p.coeff_h(0) == a);
  CHECK(p.coeff_h(1) == b);
  CHECK(p.coeff_h(2) == LPoly(3));
  CHECK(p.coeff_h(5).is_zero());
}

TEST_CASE("printing") {
  CHECK(LPoly().str() == "0");
  CHECK(LPoly(1).str() == "1");
  CHECK_FALSE((h * h - LPoly(2) * h).str().empty());
}
