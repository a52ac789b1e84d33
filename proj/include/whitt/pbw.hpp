#pragma once

#include <map>
#include <string>
#include <vector>

#include "whitt/superalgebra.hpp"

namespace whitt {

/// Linear combination of words in the generators.  After pbw_reduce every
/// word is nondecreasing in generator order with no odd generator repeated.
class UEAElement {
 public:
  using Word = std::vector<int>;

  UEAElement() = default;
  static UEAElement scalar(const Rational& c);
  static UEAElement generator(int i);
  static UEAElement generator(const SuperStructure& s, const std::string& name);

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const Rational& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  /// Concatenation product (not reduced).
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
  friend UEAElement operator*(const Rational& c, UEAElement a);
  bool operator==(const UEAElement& o) const { return terms_ == o.terms_; }

  std::string str(const SuperStructure& s) const;

 private:
  std::map<Word, Rational> terms_;
};

bool is_normal(const SuperStructure& s, const UEAElement::Word& w);

/// Rewrites xy -> (-1)^{|x||y|} yx + [x,y] for x after y, and xx -> [x,x]/2
/// for odd x, until every word is a PBW monomial.
UEAElement pbw_reduce(const SuperStructure& s, const UEAElement& x);

/// Parses "4 f e + E22 E22 - 1/2 E11" style expressions (products of
/// generator names with optional rational coefficients).
UEAElement parse_uea(const SuperStructure& s, const std::string& text);

}  // namespace whitt
