#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whitt/whittaker.hpp"

using namespace whitt;

namespace {

const RootSystem& gl12() {
  static const RootSystem rs = build_algebra(AlgebraKind::gl(1, 2));
  return rs;
}

Weight L(long a, long b, long c) { return gl12().make({a, b, c}); }

WhittakerCharacter regular() { return make_character(gl12(), {{1, 1}}); }
WhittakerCharacter zero() { return make_character(gl12(), {}); }

Integer total(const CompositionSeries& cs) {
  Integer t = 0;
  for (const auto& f : cs.factors) t += f.mult;
  return t;
}

}  // namespace

TEST_CASE("characters") {
  auto z = make_character(gl12(), {{1, ratio(3, 2)}});
  CHECK(z.support() == std::vector<int>{0});
  CHECK(is_regular(gl12(), z));
  CHECK(zeta_group(gl12(), z).size() == 2);
  CHECK(zeta_group(gl12(), zero()).size() == 1);
  CHECK_FALSE(is_regular(gl12(), zero()));
  // Zero values are dropped.
  CHECK(make_character(gl12(), {{1, 0}}) == zero());
  auto rs22 = build_algebra(AlgebraKind::gl(2, 2));
  auto z22 = make_character(rs22, {{1, 1}});
  CHECK_FALSE(is_regular(rs22, z22));
  CHECK(zeta_group(rs22, z22).size() == 2);
  CHECK_THROWS_AS(make_character(gl12(), {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_character(gl12(), {{0, 1}}), std::invalid_argument);
}

TEST_CASE("same_simple") {
  WhittakerParam p{L(0, 0, 0), regular()}, q{L(0, -1, 1), regular()};
  CHECK(same_simple(gl12(), p, p));
  CHECK(same_simple(gl12(), p, q));
  CHECK_FALSE(same_simple(gl12(), {L(0, 0, 0), zero()}, {L(0, -1, 1), zero()}));
  CHECK(same_simple(gl12(), {L(1, 2, 3), zero()}, {L(1, 2, 3), zero()}));
  CHECK_FALSE(same_simple(gl12(), p, {L(1, 0, 0), regular()}));
}

TEST_CASE("canonical representative is the lex-min antidominant member") {
  auto z = regular();
  CHECK(canonical_representative(gl12(), z, L(0, 0, 0)) == L(0, -1, 1));
  CHECK(canonical_representative(gl12(), z, L(0, -1, 1)) == L(0, -1, 1));
  CHECK(canonical_representative(gl12(), zero(), L(0, 0, 0)) == L(0, 0, 0));
}

TEST_CASE("composition series with regular zeta") {
  auto z = regular();
  auto a = composition_series(gl12(), {L(0, 0, 0), z});
  REQUIRE(a);
  CHECK(a->length() == 2);
  CHECK(total(*a) == 2);
  auto t = composition_series(gl12(), {L(0, 2, 0), z});
  REQUIRE(t);
  CHECK(t->length() == 1);
  CHECK(t->factors[0].weight == canonical_representative(gl12(), z, L(0, 2, 0)));
  // Non-integral atypical.
  Weight n = gl12().make({0, 0, ratio(1, 2)});
  REQUIRE_FALSE(is_typical(gl12(), n));
  auto nc = composition_series(gl12(), {n, z});
  REQUIRE(nc);
  CHECK(nc->length() == 2);
}

TEST_CASE("total multiplicity is 1 or 2 for gl(1|2), regular zeta") {
  auto z = regular();
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        Weight l = gl12().make({ratio(a, 2), b, ratio(c, 2)});
        auto cs = composition_series(gl12(), {l, z});
        REQUIRE(cs);
        CHECK(total(*cs) == (is_typical(gl12(), l) ? 1 : 2));
      }
}

TEST_CASE("zeta = 0 reduces to super Verma multiplicities") {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        Weight l = L(a, b, c);
        auto f = verma_factors_super(gl12(), l);
        REQUIRE(f);
        for (const auto& x : *f) CHECK(whittaker_multiplicity(gl12(), {l, zero()}, x.weight) == x.mult);
        CHECK(whittaker_multiplicity(gl12(), {l, zero()}, l) == 1);
      }
}

TEST_CASE("typical multiplicity at lambda is 1") {
  auto rs = build_algebra(AlgebraKind::gl(2, 2));
  Weight l = rs.make({5, 1, 0, 9});
  REQUIRE(is_typical(rs, l));
  CHECK(whittaker_multiplicity(rs, {l, make_character(rs, {})}, l) == 1);
}

TEST_CASE("outside the supported scope") {
  auto rs = build_algebra(AlgebraKind::gl(2, 2));
  Weight l = rs.zero();
  REQUIRE_FALSE(is_typical(rs, l));
  CHECK_FALSE(whittaker_multiplicity(rs, {l, make_character(rs, {})}, l).has_value());
  CHECK_FALSE(composition_series(rs, {l, make_character(rs, {{1, 1}})}).has_value());
}

TEST_CASE("multiplicity is constant on W_zeta orbits") {
  auto z = regular();
  auto W = zeta_group(gl12(), z);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      WhittakerParam p{L(a, b, 0), z};
      for (int c = -2; c <= 2; ++c) {
        Weight m = L(a - 1, c, b);
        auto first = whittaker_multiplicity(gl12(), p, m);
        for (const auto& mu : orbit(gl12(), W, m)) CHECK(whittaker_multiplicity(gl12(), p, mu) == first);
      }
    }
}

TEST_CASE("simplicity") {
  auto z = regular();
  CHECK(is_standard_simple(gl12(), {L(0, 2, 0), z}) == true);
  CHECK(is_standard_simple(gl12(), {L(0, 0, 0), z}) == false);
  // zeta = 0, dominant regular typical: the Verma module has two factors.
  CHECK(is_standard_simple(gl12(), {L(0, 2, 0), zero()}) == false);
  // Antidominant typical.
  CHECK(is_standard_simple(gl12(), {L(0, -2, 2), zero()}) == true);
  auto pe = build_algebra(AlgebraKind::pe(2));
  CHECK(is_standard_simple(pe, {pe.make({-1, 1}), make_character(pe, {})}) == true);
  CHECK_FALSE(is_standard_simple(pe, {pe.make({0, 0}), make_character(pe, {})}).has_value());
}

TEST_CASE("a simple standard module has indicator multiplicities") {
  auto z = regular();
  auto W = zeta_group(gl12(), z);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        WhittakerParam p{L(a, b, c), z};
        if (is_standard_simple(gl12(), p) != true) continue;
        for (int x = -2; x <= 2; ++x) {
          Weight m = L(x, b, c);
          CHECK(whittaker_multiplicity(gl12(), p, m) == Integer(in_orbit(gl12(), W, p.lambda, m) ? 1 : 0));
        }
      }
}

TEST_CASE("block_link") {
  auto z = regular();
  WhittakerParam p{L(0, 0, 0), z};
  CHECK(block_link(gl12(), p, p));
  CHECK(block_link(gl12(), {L(-1, 1, 0), z}, p));
  CHECK_FALSE(block_link(gl12(), {gl12().make({ratio(1, 2), ratio(-1, 2), 0}), z}, p));
  CHECK_THROWS_AS(block_link(gl12(), {L(0, 2, 0), z}, p), std::invalid_argument);
}
