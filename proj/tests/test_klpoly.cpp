#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "verify/rpoly_oracle.hpp"
#include "whitt/klpoly.hpp"

using namespace whitt;

namespace {

WeylSubgroup group(const char* label) { return WeylSubgroup::full(even_root_system_for_group(label)); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  IntPoly q = IntPoly::monomial(1, 1);
  CHECK((IntPoly(1) + q).str() == "1+q");
  CHECK(((IntPoly(1) + q) * (IntPoly(1) + q)).str() == "1+2q+q^2");
  CHECK((q - q).is_zero());
  CHECK(IntPoly().str() == "0");
  CHECK((IntPoly(1) + q.shifted(2)).truncated(2) == IntPoly(1));
  CHECK((IntPoly(2) + q).at_one() == 3);
}

TEST_CASE("diagonal and support") {
  for (const char* g : {"A1", "A2", "A3", "B2"}) {
    auto W = group(g);
    auto t = kl_table(W);
    for (int x = 0; x < t->size(); ++x)
      for (int w = 0; w < t->size(); ++w) {
        const auto& p = t->P(x, w);
        if (x == w) CHECK(p == IntPoly(1));
        bool leq = W.bruhat_leq(W.elements()[x], W.elements()[w]);
        CHECK(p.is_zero() == !leq);
        if (leq) CHECK(p[0] == 1);
        for (const auto& c : p.coeffs()) CHECK(c >= 0);
      }
  }
}

TEST_CASE("S3 polynomials are trivial") {
  auto W = group("A2");
  auto t = kl_table(W);
  for (int x = 0; x < t->size(); ++x)
    for (int w = 0; w < t->size(); ++w)
      if (W.bruhat_leq(W.elements()[x], W.elements()[w])) CHECK(t->P(x, w) == IntPoly(1));
}

TEST_CASE("S4: P_{s2, s2s1s3s2} = 1+q") {
  auto W = group("A3");
  auto t = kl_table(W);
  auto x = W.from_word(parse_word("s2")), w = W.from_word(parse_word("s2s1s3s2"));
  CHECK(t->P(x, w).str() == "1+q");
  CHECK(t->mu(W.index_of(x), W.index_of(w)) == 1);
}

TEST_CASE("main recursion agrees with the R-polynomial oracle") {
  for (const char* g : {"A3", "B2", "C2"}) {
    auto W = group(g);
    auto t = kl_table(W);
    oracle::RPolyOracle o(W);
    for (int x = 0; x < t->size(); ++x)
      for (int w = 0; w < t->size(); ++w) {
        CHECK(t->P(x, w) == o.P(x, w));
        if (x != w && o.leq(x, w)) CHECK(2 * t->P(x, w).degree() <= W.lengths()[w] - W.lengths()[x] - 1);
      }
  }
}

TEST_CASE("rank-1 blocks") {
  auto rs = build_algebra(AlgebraKind::gl(1, 2).even());
  // Regular integral: antidominant first.
  auto d = decomposition_matrix(make_block(rs, rs.zero()));
  REQUIRE(d.weights.size() == 2);
  CHECK(d.weights[0] == rs.make({0, -1, 1}));
  CHECK(d.entries == std::vector<std::vector<Integer>>{{1, 0}, {1, 1}});
  auto b = make_block(rs, rs.zero());
  CHECK(verma_multiplicity_even(b, rs.zero(), rs.zero()) == 1);
  CHECK(verma_multiplicity_even(b, rs.zero(), rs.make({0, -1, 1})) == 1);
  CHECK(verma_multiplicity_even(b, rs.make({0, -1, 1}), rs.zero()) == 0);
  CHECK(verma_multiplicity_even(b, rs.zero(), rs.make({1, -1, 1})) == 0);
  // Singular: lambda + rho_0 on the wall.
  Weight s = -rs.rho_even;
  auto sb = make_block(rs, s);
  CHECK(sb.stabilizer.size() == 2);
  auto sd = decomposition_matrix(sb);
  CHECK(sd.entries == std::vector<std::vector<Integer>>{{1}});
  CHECK(verma_multiplicity_even(sb, s, s) == 1);
  // Non-integral: trivial integral group, Verma simple.
  Weight n = rs.make({0, ratio(1, 3), 0});
  CHECK(decomposition_matrix(make_block(rs, n)).entries.size() == 1);
  CHECK_THROWS_AS(verma_multiplicity_even(b, n, n), std::invalid_argument);
}

TEST_CASE("S3 regular block: Verma lengths") {
  auto rs = build_algebra(AlgebraKind::gl(3, 1).even());
  auto d = decomposition_matrix(make_block(rs, rs.zero()));
  REQUIRE(d.weights.size() == 6);
  std::vector<Integer> sums;
  for (const auto& row : d.entries) {
    Integer s = 0;
    for (const auto& e : row) s += e;
    sums.push_back(s);
  }
  // Every P is 1 in S3, so the length of M(x.base) is the size of the Bruhat interval [e, x].
  CHECK(sums == std::vector<Integer>{1, 2, 2, 4, 4, 6});
}

TEST_CASE("decomposition matrix is unitriangular with alternating inverse") {
  auto rs = build_algebra(AlgebraKind::gl(4, 1).even());
  auto d = decomposition_matrix(make_block(rs, rs.zero()));
  const std::size_t n = d.weights.size();
  REQUIRE(n == 24);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(d.entries[i][i] == 1);
    for (std::size_t j = i + 1; j < n; ++j) CHECK(d.entries[i][j] == 0);
  }
  // Forward substitution for the inverse of a lower unitriangular matrix.
  std::vector<std::vector<Integer>> inv(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    inv[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      Integer s = 0;
      for (std::size_t k = j; k < i; ++k) s += d.entries[i][k] * inv[k][j];
      inv[i][j] = -s;
    }
  }
  auto W = WeylSubgroup::full(rs);
  auto base = make_block(rs, rs.zero()).base;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (inv[i][j] == 0) continue;
      // Sign is (-1)^{l(x)-l(y)} for the carriers of the two weights.
      int li = -1, lj = -1;
      for (const auto& w : W.elements()) {
        if (dot_action(rs, w, base) == d.weights[i]) li = W.length(w);
        if (dot_action(rs, w, base) == d.weights[j]) lj = W.length(w);
      }
      CHECK(sgn(inv[i][j]) == ((li - lj) % 2 ? -1 : 1));
    }
}

TEST_CASE("multiplicity vanishes off the order and off the orbit") {
  auto rs = build_algebra(AlgebraKind::gl(3, 1).even());
  auto b = make_block(rs, rs.make({1, 0, -1, 0}));
  auto W = WeylSubgroup::full(rs);
  for (const auto& l : orbit(rs, b.integral, b.base))
    for (const auto& m : orbit(rs, W, b.base)) {
      if (!leq_weights(rs, m, l)) CHECK(verma_multiplicity_even(b, l, m) == 0);
    }
  CHECK(verma_multiplicity_even(b, b.base, rs.make({5, 0, 0, 0})) == 0);
}

TEST_CASE("disk cache round trip and corruption") {
  auto W = group("A3");
  auto dir = std::filesystem::temp_directory_path() / "whitt_kl_cache_test";
  std::filesystem::create_directories(dir);
  auto file = dir / "a3.json";
  KLTable t(W);
  store_kl_cache(file, t);
  auto back = load_kl_cache(file, W);
  REQUIRE(back);
  CHECK(back->cells() == t.cells());
  // Wrong group.
  CHECK_FALSE(load_kl_cache(file, group("B2")));
  // Flip one coefficient without updating the checksum.
  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto pos = text.find("[\"1\",\"1\"]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 9, "[\"1\",\"2\"]");
  std::ofstream(file) << text;
  CHECK_FALSE(load_kl_cache(file, W));
  std::ofstream(file) << "not json";
  CHECK_FALSE(load_kl_cache(file, W));
  CHECK_FALSE(load_kl_cache(dir / "missing.json", W));
  std::filesystem::remove_all(dir);
}

TEST_CASE("group labels") {
  CHECK(group("A3").size() == 24);
  CHECK(group("B2").size() == 8);
  CHECK(group("C3").size() == 48);
  CHECK_THROWS_AS(even_root_system_for_group("D4"), std::invalid_argument);
  CHECK_THROWS_AS(even_root_system_for_group("A"), std::invalid_argument);
  CHECK_THROWS_AS(even_root_system_for_group("Ax"), std::invalid_argument);
}
