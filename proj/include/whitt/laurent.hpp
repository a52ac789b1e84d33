#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "whitt/linalg.hpp"
#include "whitt/rational.hpp"

namespace whitt {

/// Variables of the module coefficient ring.  h is the polynomial variable of
/// C[h]v; the rest are the module parameters (a may appear inverted).
enum Var { kH = 0, kA, kB, kC, kD };
constexpr int kNumVars = 5;

using ParamValues = std::map<Var, Rational>;

/// Laurent polynomial over Q in h, a, b, c, d.
class LPoly {
 public:
  using Exp = std::array<int, kNumVars>;

  LPoly() = default;
  LPoly(const Rational& c);
  LPoly(long c) : LPoly(Rational(c)) {}
  static LPoly var(Var v, int power = 1);
  static LPoly monomial(const Rational& c, const Exp& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Monomial whose only variable is a: a unit of the ring.
  bool is_unit() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const std::map<Exp, Rational>& terms() const { return terms_; }

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const Rational& s);
  friend LPoly operator+(LPoly x, const LPoly& y) { return x += y; }
  friend LPoly operator-(LPoly x, const LPoly& y) { return x -= y; }
  friend LPoly operator*(const LPoly& x, const LPoly& y);
  friend LPoly operator*(LPoly x, const Rational& s) { return x *= s; }
  friend LPoly operator*(const Rational& s, LPoly x) { return x *= s; }
  LPoly operator-() const;
  bool operator==(const LPoly& o) const { return terms_ == o.terms_; }

  /// Inverse of a unit.
  LPoly inverse() const;
  /// p(h + s).  h must only occur with nonnegative exponents.
  LPoly shift_h(long s) const;
  LPoly substitute(Var v, const LPoly& value) const;
  LPoly substitute(const ParamValues& values) const;
  int max_degree(Var v) const;
  /// Coefficient of h^k, an element without h.
  LPoly coeff_h(int k) const;
  /// Divides out the largest monomial (nonnegative exponents) and makes the
  /// leading coefficient 1; the result is an associate over the fraction field.
  LPoly primitive() const;

  std::string str() const;

 private:
  std::map<Exp, Rational> terms_;
};

template <>
struct RingTraits<LPoly> {
  static bool is_zero(const LPoly& x) { return x.is_zero(); }
  static bool is_unit(const LPoly& x) { return x.is_unit(); }
  static LPoly inverse(const LPoly& x) { return x.inverse(); }
  static std::size_t weight(const LPoly& x) { return x.size(); }
  static void normalize_row(std::vector<LPoly>& row);
};

}  // namespace whitt
