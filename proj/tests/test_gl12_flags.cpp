#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "whitt/gl12_flags.hpp"

using namespace whitt;
using namespace whitt::gl12;

namespace {

bool contains(const std::vector<Label>& v, const Label& l) { return std::find(v.begin(), v.end(), l) != v.end(); }

}  // namespace

TEST_CASE("labels") {
  CHECK(Label::B(0) == Label::A(0));
  CHECK(Label::A(2).coords() == std::array<long, 3>{0, 2, -2});
  CHECK(Label::B(-3).coords() == std::array<long, 3>{-3, 0, 3});
}

TEST_CASE("flag of P(0,0|0)") {
  auto f = projective_flag(Label::A(0));
  CHECK(f.size() == 3);
  CHECK(contains(f, Label::A(0)));
  CHECK(contains(f, Label::A(1)));  // (0,1|-1)
  CHECK(contains(f, Label::B(1)));  // (1,0|-1)
}

TEST_CASE("flag families") {
  CHECK(projective_flag(Label::A(-1)).size() == 3);
  CHECK(projective_flag(Label::B(-1)).size() == 3);
  for (long k = 2; k < 6; ++k) {
    CHECK(projective_flag(Label::A(-k)).size() == 2);
    CHECK(projective_flag(Label::B(-k)).size() == 4);
  }
  for (long k = 1; k < 6; ++k) {
    CHECK(projective_flag(Label::B(k)).size() == 2);
    CHECK(projective_flag(Label::A(k)).size() == 4);
  }
}

TEST_CASE("BGG reciprocity is the transpose") {
  for (long j = -6; j <= 6; ++j)
    for (const auto& y : {Label::A(j), Label::B(j)})
      for (long i = -8; i <= 8; ++i)
        for (const auto& x : {Label::A(i), Label::B(i)})
          CHECK(contains(verma_factors(y), x) == contains(projective_flag(x), y));
}

TEST_CASE("every Verma has itself as a factor and exactly two antidominant factors") {
  for (long j = -8; j <= 8; ++j)
    for (const auto& y : {Label::A(j), Label::B(j)}) {
      auto f = verma_factors(y);
      CHECK(contains(f, y));
      CHECK(std::count_if(f.begin(), f.end(), [](const Label& l) { return is_antidominant(l); }) == 2);
    }
}

TEST_CASE("literal Verma lengths run from 2 to 4") {
  CHECK(verma_factors(Label::A(0)).size() == 3);
  CHECK(verma_factors(Label::A(-1)).size() == 4);
  CHECK(verma_factors(Label::B(2)).size() == 4);
  CHECK(verma_factors(Label::A(2)).size() == 2);
  CHECK(verma_factors(Label::B(-3)).size() == 2);
}

TEST_CASE("coordinate adapter round trip") {
  auto kind = AlgebraKind::gl(1, 2);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        Weight l(kind, {ratio(a, 2), b, c});
        CHECK(from_gl21_shifted(to_gl21_shifted(l)) == l);
      }
}

TEST_CASE("placement") {
  auto kind = AlgebraKind::gl(1, 2);
  auto rs = build_algebra(kind);
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c) {
        Weight l(kind, {a, b, c});
        auto p = place(l);
        CHECK(p.has_value() == !is_typical(rs, l));
        if (p) CHECK(weight_of(*p) == l);
      }
  // lambda_2 - lambda_3 not integral: outside the integral block.
  CHECK_FALSE(place(Weight(kind, {0, 0, ratio(1, 2)})).has_value());
}
