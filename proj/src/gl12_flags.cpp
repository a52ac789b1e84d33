#include "whitt/gl12_flags.hpp"

#include <algorithm>
#include <stdexcept>

namespace whitt::gl12 {

std::array<long, 3> Label::coords() const {
  if (family == Family::A) return {0, j, -j};
  return {j, 0, -j};
}

std::string Label::str() const {
  auto c = coords();
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "|" + std::to_string(c[2]) + ")";
}

std::vector<Label> projective_flag(const Label& p) {
  const long j = p.j;
  if (p.family == Family::A) {
    if (j == 0) return {Label::A(0), Label::A(1), Label::B(1)};
    if (j == -1) return {Label::A(-1), Label::A(0), Label::B(1)};
    if (j < -1) return {Label::A(j), Label::A(j + 1)};
    return {Label::A(j), Label::B(j), Label::A(j + 1), Label::B(j + 1)};
  }
  if (j == -1) return {Label::B(-1), Label::A(-1), Label::A(0)};
  if (j < -1) return {Label::B(j), Label::A(j), Label::B(j + 1), Label::A(j + 1)};
  return {Label::B(j), Label::B(j + 1)};
}

std::vector<Label> verma_factors(const Label& y) {
  std::vector<Label> out;
  // Flags only link indices at distance <= 1.
  for (long j = y.j - 2; j <= y.j + 2; ++j)
    for (Label x : {Label::A(j), Label::B(j)}) {
      if (std::find(out.begin(), out.end(), x) != out.end()) continue;
      auto flag = projective_flag(x);
      if (std::find(flag.begin(), flag.end(), y) != flag.end()) out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_antidominant(const Label& y) {
  auto c = y.coords();
  return c[0] <= c[1];
}

namespace {
const std::array<Rational, 3> kRho12 = {Rational(-1), Rational(1), Rational(0)};
}

std::array<Rational, 3> to_gl21_shifted(const Weight& lambda) {
  if (lambda.algebra.super() != AlgebraKind::gl(1, 2)) throw std::invalid_argument("gl(1|2) weight expected");
  std::array<Rational, 3> x;
  for (int i = 0; i < 3; ++i) x[i] = lambda[i] + kRho12[i];
  return {-x[2], -x[1], -x[0]};
}

Weight from_gl21_shifted(const std::array<Rational, 3>& y) {
  std::vector<Rational> lam = {-y[2], -y[1], -y[0]};
  for (int i = 0; i < 3; ++i) lam[i] -= kRho12[i];
  return Weight(AlgebraKind::gl(1, 2), lam);
}

std::optional<Placement> place(const Weight& lambda) {
  auto y = to_gl21_shifted(lambda);
  // Atypical pairs in gl(2|1): y1 + y3 = 0 or y2 + y3 = 0.  The remaining
  // coordinate is the core; twisting by the supertrace moves it to 0.
  int core;
  if (y[1] + y[2] == 0) core = 0;
  else if (y[0] + y[2] == 0) core = 1;
  else return std::nullopt;
  if (!is_integer(y[0] - y[1])) return std::nullopt;
  // In gl(2|1) the supertrace weight is (1,1|-1); it shifts y by t*(1,1,-1)
  // and preserves y_i + y3.
  Rational t = y[core];
  std::array<Rational, 3> z = {y[0] - t, y[1] - t, y[2] + t};
  Placement p;
  p.t = t;
  long a = z[0].get_num().get_si(), b = z[1].get_num().get_si();
  if (z[0] == 0) p.label = Label::A(b);
  else p.label = Label::B(a);
  return p;
}

Weight weight_of(const Placement& p) {
  auto c = p.label.coords();
  std::array<Rational, 3> y = {c[0] + p.t, c[1] + p.t, c[2] - p.t};
  return from_gl21_shifted(y);
}

}  // namespace whitt::gl12
