#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "whitt/rootdata.hpp"

using namespace whitt;

namespace {

Weight W(const RootSystem& rs, std::vector<Rational> c) { return rs.make(std::move(c)); }

bool has_root(const std::vector<Root>& roots, const Weight& w) {
  for (const auto& r : roots)
    if (r.weight == w) return true;
  return false;
}

std::vector<AlgebraKind> kinds() {
  return {AlgebraKind::gl(1, 2), AlgebraKind::gl(2, 1), AlgebraKind::gl(2, 2), AlgebraKind::gl(2, 3),
          AlgebraKind::osp(1),   AlgebraKind::osp(2),   AlgebraKind::osp(3),   AlgebraKind::pe(2),
          AlgebraKind::pe(3),    AlgebraKind::pe(4)};
}

}  // namespace

TEST_CASE("gl(1|2) roots and rho") {
  auto rs = build_algebra(AlgebraKind::gl(1, 2));
  REQUIRE(rs.positive_even.size() == 1);
  CHECK(rs.positive_even[0].weight == W(rs, {0, 1, -1}));
  CHECK(rs.positive_odd.size() == 2);
  CHECK(has_root(rs.positive_odd, W(rs, {1, -1, 0})));
  CHECK(has_root(rs.positive_odd, W(rs, {1, 0, -1})));
  CHECK(rs.rho == W(rs, {-1, 1, 0}));
}

TEST_CASE("pe(2) roots") {
  auto rs = build_algebra(AlgebraKind::pe(2));
  REQUIRE(rs.simple_roots_even.size() == 1);
  CHECK(rs.simple_roots_even[0].weight == W(rs, {1, -1}));
  REQUIRE(rs.negative_odd.size() == 1);
  CHECK(rs.negative_odd[0].weight == W(rs, {-1, -1}));
  CHECK(rs.positive_odd.size() == 3);
}

TEST_CASE("osp(2|4) roots") {
  auto rs = build_algebra(AlgebraKind::osp(2));
  CHECK(rs.rank() == 3);
  CHECK(rs.positive_even.size() == 4);  // type C2
  CHECK(rs.positive_odd.size() == 4);   // eps - delta_k, eps + delta_k
  CHECK(rs.odd_roots().size() == 8);
}

TEST_CASE("rho recomputed from the root lists") {
  for (const auto& k : kinds()) {
    auto rs = build_algebra(k);
    Weight even = rs.zero(), odd = rs.zero();
    for (const auto& r : rs.positive_even) even += r.weight;
    for (const auto& r : rs.positive_odd) odd += r.weight;
    CAPTURE(k.name());
    CHECK(rs.rho_even == ratio(1, 2) * even);
    CHECK(rs.rho == ratio(1, 2) * even - ratio(1, 2) * odd);
  }
}

TEST_CASE("parities partition the roots") {
  for (const auto& k : kinds()) {
    auto rs = build_algebra(k);
    auto all = rs.all_roots();
    std::size_t even = 0, odd = 0;
    for (const auto& r : all) (r.parity == Parity::Even ? even : odd) += 1;
    CHECK(even == 2 * rs.positive_even.size());
    CHECK(odd == rs.positive_odd.size() + rs.negative_odd.size());
    for (const auto& r : rs.positive_even) CHECK_FALSE(has_root(rs.odd_roots(), r.weight));
  }
}

TEST_CASE("positive roots are nonnegative combinations of simple roots") {
  for (const auto& k : kinds()) {
    auto rs = build_algebra(k);
    // Work in the ambient basis: solve by brute force over small coefficients.
    const std::size_t s = rs.simple_roots.size();
    auto roots = rs.positive_even;
    roots.insert(roots.end(), rs.positive_odd.begin(), rs.positive_odd.end());
    for (const auto& r : roots) {
      bool found = false;
      std::vector<int> c(s, 0);
      while (!found) {
        Weight sum = rs.zero();
        for (std::size_t i = 0; i < s; ++i) sum += Rational(c[i]) * rs.simple_roots[i].weight;
        found = sum == r.weight;
        std::size_t i = 0;
        while (i < s && ++c[i] == 4) c[i++] = 0;
        if (i == s) break;
      }
      CAPTURE(k.name());
      CAPTURE(r.weight.str());
      CHECK(found);
    }
  }
}

TEST_CASE("supersymmetric form") {
  auto rs = build_algebra(AlgebraKind::gl(1, 2));
  CHECK(bilinear_form(rs, rs.epsilon(0), rs.epsilon(0)) == 1);
  CHECK(bilinear_form(rs, rs.epsilon(1), rs.epsilon(1)) == -1);
  CHECK(bilinear_form(rs, W(rs, {1, -1, 0}), W(rs, {0, 1, -1})) == 1);
  auto even = build_algebra(AlgebraKind::gl(1, 2).even());
  CHECK(bilinear_form(even, even.epsilon(1), even.epsilon(1)) == 1);
  CHECK_THROWS_AS(bilinear_form(rs, rs.epsilon(0), build_algebra(AlgebraKind::pe(2)).epsilon(0)),
                  std::invalid_argument);
}

TEST_CASE("form is symmetric and bilinear") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> d(-6, 6);
  for (const auto& k : kinds()) {
    auto rs = build_algebra(k);
    auto rnd = [&] {
      std::vector<Rational> c;
      for (int i = 0; i < rs.rank(); ++i) c.push_back(ratio(d(gen), 1 + (d(gen) + 6) % 3));
      return rs.make(c);
    };
    for (int t = 0; t < 20; ++t) {
      Weight x = rnd(), y = rnd(), z = rnd();
      Rational s = ratio(d(gen), 5);
      CHECK(bilinear_form(rs, x, y) == bilinear_form(rs, y, x));
      CHECK(bilinear_form(rs, s * x + z, y) == s * bilinear_form(rs, x, y) + bilinear_form(rs, z, y));
    }
  }
}

TEST_CASE("gl(1|2) typicality is the pair of hyperplanes") {
  auto rs = build_algebra(AlgebraKind::gl(1, 2));
  CHECK_FALSE(is_typical(rs, rs.zero()));
  std::size_t n = 0;
  for (int x = -10; x <= 10; ++x)
    for (int y = -10; y <= 10; ++y)
      for (int z = -10; z <= 10; ++z) {
        Rational a = ratio(x, 2), b = ratio(y, 2), c = ratio(z, 2);
        bool atyp = (a + b) * (a + c - 1) == 0;
        CHECK(is_typical(rs, rs.make({a, b, c})) == !atyp);
        ++n;
      }
  CHECK(n == 9261);
}

TEST_CASE("pe typicality") {
  auto rs = build_algebra(AlgebraKind::pe(2));
  CHECK(is_typical(rs, W(rs, {1, 0})));
  // lambda_1 - lambda_2 + 2 - 1 - 1 = 0
  CHECK_FALSE(is_typical(rs, W(rs, {0, 0})));
  CHECK_FALSE(is_typical(rs, W(rs, {-2, 0})));  // 0 - (-2) + 1 - 2 - 1 = 0
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(build_algebra(AlgebraKind::gl(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra(AlgebraKind::pe(0)), std::invalid_argument);
  auto even = build_algebra(AlgebraKind::gl(1, 2).even());
  CHECK_THROWS_AS(is_typical(even, even.zero()), std::invalid_argument);
  CHECK_THROWS_AS(Weight(AlgebraKind::gl(1, 2), {1, 2}), std::invalid_argument);
}
