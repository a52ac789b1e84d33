#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "whitt/weyl.hpp"

using namespace whitt;

namespace {

RootSystem gl12e() { return build_algebra(AlgebraKind::gl(1, 2).even()); }

}  // namespace

TEST_CASE("dot action") {
  auto rs = gl12e();
  auto W = WeylSubgroup::full(rs);
  REQUIRE(W.size() == 2);
  auto s = W.generators()[0];
  CHECK(dot_action(rs, WeylElement::identity(3), rs.zero()) == rs.zero());
  CHECK(dot_action(rs, s, rs.zero()) == rs.make({0, -1, 1}));
}

TEST_CASE("dot action is a group action") {
  for (auto kind : {AlgebraKind::gl(4, 1).even(), AlgebraKind::osp(2).even(), AlgebraKind::pe(3).even()}) {
    auto rs = build_algebra(kind);
    auto W = WeylSubgroup::full(rs);
    std::mt19937 gen(3);
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 100; ++t) {
      std::vector<Rational> c;
      for (int i = 0; i < rs.rank(); ++i) c.push_back(ratio(d(gen), 2));
      Weight l = rs.make(c);
      const auto& a = W.elements()[pick(gen)];
      const auto& b = W.elements()[pick(gen)];
      CHECK(dot_action(rs, a, dot_action(rs, b, l)) == dot_action(rs, a * b, l));
    }
  }
}

TEST_CASE("stabilizers") {
  auto rs = build_algebra(AlgebraKind::gl(2, 1).even());
  auto W = WeylSubgroup::full(rs);
  CHECK(stabilizer(rs, -rs.rho_even, W).size() == 2);
  auto r = gl12e();
  auto W2 = WeylSubgroup::full(r);
  CHECK(stabilizer(r, r.make({0, ratio(1, 3), 0}), W2).size() == 1);
  CHECK(stabilizer(r, r.zero(), W2).size() == 1);
}

TEST_CASE("antidominance") {
  auto rs = gl12e();
  CHECK(is_antidominant(rs, rs.zero(), {}));
  CHECK_FALSE(is_antidominant(rs, rs.zero(), {0}));
  CHECK(is_antidominant(rs, rs.make({0, -1, 1}), {0}));
  auto [w, el] = antidominant_representative(rs, rs.zero(), {0});
  CHECK(w == rs.make({0, -1, 1}));
  CHECK(el == WeylSubgroup::full(rs).generators()[0]);
  auto [w2, el2] = antidominant_representative(rs, w, {0});
  CHECK(w2 == w);
  CHECK(el2 == WeylElement::identity(3));
}

TEST_CASE("antidominant representative is idempotent and stays in the orbit") {
  auto rs = build_algebra(AlgebraKind::gl(4, 1).even());
  auto W = WeylSubgroup::full(rs);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      Weight l = rs.make({a, b, 0, ratio(a, 2), 1});
      auto [r, w] = antidominant_representative(rs, l, {0, 1, 2});
      CHECK(in_orbit(rs, W, l, r));
      CHECK(antidominant_representative(rs, r, {0, 1, 2}).first == r);
      CHECK(dot_action(rs, w, l) == r);
    }
}

TEST_CASE("integral Weyl group") {
  auto rs = gl12e();
  CHECK(integral_weyl_group(rs, rs.zero()).size() == 2);
  CHECK(integral_weyl_group(rs, rs.make({0, ratio(1, 4), 0})).size() == 1);
  auto c2 = build_algebra(AlgebraKind::osp(2).even());
  // lambda + rho_0 = (5/2, 1): only 2 delta_2 pairs integrally.
  CHECK(integral_weyl_group(c2, c2.make({0, ratio(1, 2), 0})).size() == 2);
  // lambda + rho_0 = (5/2, 3/2): delta_1 -+ delta_2 are integral, the long roots are not.
  CHECK(integral_weyl_group(c2, c2.make({0, ratio(1, 2), ratio(1, 2)})).size() == 4);
}

TEST_CASE("Bruhat order in S3") {
  auto rs = build_algebra(AlgebraKind::gl(3, 1).even());
  auto W = WeylSubgroup::full(rs);
  REQUIRE(W.size() == 6);
  auto w = [&](const char* s) { return W.from_word(parse_word(s)); };
  CHECK(W.bruhat_leq(w("e"), w("s1s2s1")));
  CHECK(W.bruhat_leq(w("s1"), w("s1s2")));
  // s1 is a subword of s2 s1.
  CHECK(W.bruhat_leq(w("s1"), w("s2s1")));
  CHECK_FALSE(W.bruhat_leq(w("s1s2"), w("s2s1")));
  CHECK(W.longest() == w("s1s2s1"));
  for (const auto& x : W.elements()) {
    CHECK(W.bruhat_leq(w("e"), x));
    CHECK(W.bruhat_leq(x, W.longest()));
  }
}

TEST_CASE("Bruhat order is a partial order refining length") {
  auto rs = build_algebra(AlgebraKind::osp(2).even());
  auto W = WeylSubgroup::full(rs);
  REQUIRE(W.size() == 8);
  const auto& el = W.elements();
  for (const auto& x : el)
    for (const auto& y : el) {
      if (W.bruhat_leq(x, y) && !(x == y)) CHECK(W.length(x) < W.length(y));
      if (W.bruhat_leq(x, y) && W.bruhat_leq(y, x)) CHECK(x == y);
      for (const auto& z : el)
        if (W.bruhat_leq(x, y) && W.bruhat_leq(y, z)) CHECK(W.bruhat_leq(x, z));
    }
}

TEST_CASE("reduced words") {
  auto rs = build_algebra(AlgebraKind::gl(4, 1).even());
  auto W = WeylSubgroup::full(rs);
  CHECK(W.size() == 24);
  for (const auto& x : W.elements()) {
    auto word = W.reduced_word(x);
    CHECK(static_cast<int>(word.size()) == W.length(x));
    CHECK(W.from_word(word) == x);
    CHECK(parse_word(word_string(word)) == word);
  }
  CHECK(word_string({1, 0, 2}) == "s2 s1 s3");
  CHECK(parse_word("1,3,2") == std::vector<int>{0, 2, 1});
  CHECK(parse_word("e").empty());
  CHECK_THROWS_AS(parse_word("s0"), std::invalid_argument);
}

TEST_CASE("orbit-stabilizer") {
  auto rs = build_algebra(AlgebraKind::osp(2).even());
  auto W = WeylSubgroup::full(rs);
  for (int a = -2; a <= 1; ++a)
    for (int b = -2; b <= 1; ++b) {
      Weight l = rs.make({0, a, b});
      CHECK(orbit(rs, W, l).size() * stabilizer(rs, l, W).size() == W.size());
    }
}

TEST_CASE("regular integral orbit is a bijective image of W") {
  auto rs = build_algebra(AlgebraKind::gl(4, 1).even());
  auto W = WeylSubgroup::full(rs);
  CHECK(orbit(rs, W, rs.zero()).size() == W.size());
}

TEST_CASE("weight order") {
  auto rs = build_algebra(AlgebraKind::gl(1, 2));
  CHECK(leq_weights(rs, rs.zero(), rs.zero()));
  CHECK(leq_weights(rs, rs.make({0, -1, 1}), rs.zero()));
  CHECK_FALSE(leq_weights(rs, rs.make({1, 0, -1}), rs.zero()));
  CHECK(leq_weights(rs, rs.make({-1, 1, 0}), rs.zero()));  // odd root eps1 - eps2
  CHECK_FALSE(leq_weights(rs, rs.make({ratio(1, 2), 0, 0}), rs.zero()));
}
