#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whitt/action_model.hpp"

using namespace whitt;

namespace {
const LPoly h = LPoly::var(kH);
}

TEST_CASE("realisations") {
  auto g = realize_gl12();
  CHECK(g.rank() == 4);
  CHECK(g.basis_labels[0] == "F21^0 F31^0");
  CHECK(g.relations_hold());
  auto p = realize_pe2();
  CHECK(p.rank() == 2);
  CHECK(p.relations_hold());
}

TEST_CASE("bottom layer formulas") {
  auto m = realize_gl12();
  const LPoly a = m.param(kA), b = m.param(kB);
  for (int k = 0; k <= 5; ++k) {
    LPoly hk = LPoly::var(kH, k);
    auto ev = act(m.op("e"), m.bottom(hk));
    CHECK(ev == m.bottom(a * hk.shift_h(-2)));
    auto fv = act(m.op("f"), m.bottom(hk));
    CHECK(fv == m.bottom(hk.shift_h(2) * (b - h * h - LPoly(2) * h) * ratio(1, 4) * a.inverse()));
  }
  // Raising odd generators kill v.
  for (const char* x : {"E12", "E13"}) CHECK(act(m.op(x), m.bottom(LPoly(1))) == ModuleElement(4));
}

TEST_CASE("Casimir and centre on v") {
  auto m = realize_gl12();
  const auto& s = m.structure;
  auto v = m.bottom(LPoly(1));
  CHECK(act(operator_of(m, gl12_casimir(s)), v) == m.bottom(m.param(kB)));
  CHECK(act(operator_of(m, gl12_center(s)), v) == m.bottom(m.param(kC)));
  CHECK(casimir_identity_check(s));
}

TEST_CASE("perturbed structure breaks the relations") {
  auto s = gl12_structure();
  auto table = s.table();
  const int i = s.index("E12"), j = s.index("F21");
  for (auto& [k, q] : table[i][j]) q *= 2;
  for (auto& [k, q] : table[j][i]) q *= 2;
  std::vector<Generator> gens;
  for (int k = 0; k < s.size(); ++k) gens.push_back(s.gen(k));
  CHECK_THROWS(SuperStructure::from_table(gens, table, true));
  auto bad = SuperStructure::from_table(gens, table, false);
  CHECK_FALSE(casimir_identity_check(bad));
  CHECK_THROWS(realize_gl12(bad, true));
}

TEST_CASE("powers of h on v are independent") {
  for (auto m : {realize_gl12(), realize_pe2()}) {
    const OpMatrix hop = m.kind == ModelKind::GL12 ? m.op("E22") - m.op("E33") : m.op("H1") - m.op("H2");
    auto v = m.bottom(LPoly(1));
    for (int k = 0; k <= 50; ++k) {
      // Leading term of h^k v is h^k: distinct degrees, hence independent.
      CHECK(v[0].max_degree(kH) == k);
      v = act(hop, v);
    }
  }
}

TEST_CASE("parameters from weights") {
  auto kind = AlgebraKind::gl(1, 2);
  auto v = gl12_params(Weight(kind, {1, 2, 3}), 5);
  CHECK(v.at(kA) == 5);
  CHECK(v.at(kB) == (2 - 3) * (2 - 3 + 2));
  CHECK(v.at(kC) == 1 + ratio(5, 2));
  CHECK(v.at(kD) == 1);
  CHECK_THROWS_AS(gl12_params(Weight(kind, {0, 0, 0}), 0), std::invalid_argument);
  auto p = pe2_params(Weight(AlgebraKind::pe(2), {3, 1}), 1);
  CHECK(p.at(kB) == 2 * 4);
  CHECK(p.at(kC) == 4);
}

TEST_CASE("specialised model keeps the relations") {
  auto m = specialize(realize_gl12(), gl12_params(Weight(AlgebraKind::gl(1, 2), {ratio(1, 2), 0, 3}), 2));
  CHECK(m.relations_hold());
  CHECK(m.param(kA) == LPoly(2));
}

TEST_CASE("printing") {
  auto m = realize_gl12();
  ModuleElement v(4);
  v[1] = h * h - LPoly(2) * h;
  CHECK(m.element_string(v).rfind("F21^1 F31^0 ⊗ (", 0) == 0);
}
