#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whitt/pbw.hpp"

using namespace whitt;

TEST_CASE("structures satisfy super Jacobi and antisymmetry") {
  for (const auto& s : {gl12_structure(), pe2_structure()}) {
    CHECK(s.check_antisymmetry());
    CHECK(s.check_jacobi());
  }
  CHECK(gl12_structure().size() == 9);
  CHECK(pe2_structure().size() == 8);
}

TEST_CASE("structure constants of gl(1|2)") {
  auto s = gl12_structure();
  auto e = s.index("e"), f = s.index("f");
  auto ef = s.bracket(e, f);
  // [e, f] = E22 - E33
  REQUIRE(ef.size() == 2);
  CHECK_THROWS_AS(s.index("nope"), std::invalid_argument);
}

TEST_CASE("rewriting") {
  auto s = gl12_structure();
  CHECK(pbw_reduce(s, parse_uea(s, "e f")) == parse_uea(s, "f e + E22 - E33"));
  CHECK(pbw_reduce(s, parse_uea(s, "F21 F21")).is_zero());
  auto omega = parse_uea(s, "4 f e + E22 E22 - 2 E22 E33 + E33 E33 + 2 E22 - 2 E33");
  CHECK(pbw_reduce(s, omega) == omega);
  for (const auto& [w, c] : omega.terms()) CHECK(is_normal(s, w));
}

TEST_CASE("reduction is idempotent, linear and preserves parity") {
  auto s = gl12_structure();
  const char* exprs[] = {"E12 E13 F31 F21", "e F21 f", "E13 e F21 F31", "E12 F21 E12 F31", "E33 F21 E11 e"};
  for (const char* x : exprs)
    for (const char* y : exprs) {
      auto px = parse_uea(s, x), py = parse_uea(s, y);
      auto rx = pbw_reduce(s, px);
      CHECK(pbw_reduce(s, rx) == rx);
      CHECK(pbw_reduce(s, px + ratio(2, 3) * py) == rx + ratio(2, 3) * pbw_reduce(s, py));
      // Parity of each monomial is the parity of the input word.
      int parity = 0;
      for (const auto& [w, c] : px.terms())
        for (int g : w) parity ^= s.odd(g);
      for (const auto& [w, c] : rx.terms()) {
        int p = 0;
        for (int g : w) p ^= s.odd(g);
        CHECK(p == parity);
        CHECK(is_normal(s, w));
      }
    }
}

TEST_CASE("pe(2) odd bracket") {
  auto s = pe2_structure();
  // X12 Y12 + Y12 X12 = H2 - H1 with the printed generators.
  auto r = pbw_reduce(s, parse_uea(s, "X12 Y12 + Y12 X12"));
  CHECK(r == parse_uea(s, "H2 - H1"));
}

TEST_CASE("parser errors") {
  auto s = gl12_structure();
  CHECK_THROWS_AS(parse_uea(s, "E12 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_uea(s, "Q"), std::invalid_argument);
}
