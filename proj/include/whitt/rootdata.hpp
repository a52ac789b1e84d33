#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "whitt/rational.hpp"

namespace whitt {

/// The three type I series handled here.  osp(2|2n) is stored as OSP with `n`.
enum class Series { GL, OSP, PE };

enum class Parity { Even, Odd };

/// gl(m|n), osp(2|2n), pe(n), or the even part of one of them.
struct AlgebraKind {
  Series series = Series::GL;
  int m = 0;  // only meaningful for GL
  int n = 0;
  bool even_part = false;

  static AlgebraKind gl(int m, int n);
  static AlgebraKind osp(int n);
  static AlgebraKind pe(int n);

  AlgebraKind even() const;
  AlgebraKind super() const;

  /// Dimension of h: m+n, n+1, n respectively.
  int rank() const;
  std::string name() const;

  bool operator==(const AlgebraKind&) const = default;
  auto operator<=>(const AlgebraKind&) const = default;
};

/// A vector of exact rational coordinates in the epsilon basis of h*.
/// For osp(2|2n) coordinate 0 is epsilon and 1..n are delta_1..delta_n.
struct Weight {
  AlgebraKind algebra;
  std::vector<Rational> coords;

  Weight() = default;
  Weight(AlgebraKind kind, std::vector<Rational> c);

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w);
  Weight operator-() const;

  /// Same algebra up to the even-part flag.
  bool same_space(const Weight& other) const;
  bool operator==(const Weight& other) const;
  /// Lexicographic on coordinates.
  bool operator<(const Weight& other) const;

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct Root {
  Weight weight;
  Parity parity = Parity::Even;
};

struct RootSystem {
  AlgebraKind algebra;
  std::vector<Root> simple_roots_even;
  /// Simple roots of the full (super) positive system; for even parts equal to
  /// simple_roots_even.  Every positive root is a nonnegative integer
  /// combination of these.
  std::vector<Root> simple_roots;
  std::vector<Root> positive_even;
  std::vector<Root> positive_odd;
  /// Odd roots of g_{-1} (negatives of positive_odd for gl and osp).
  std::vector<Root> negative_odd;
  Weight rho;
  Weight rho_even;
  std::vector<int> form_signature;

  int rank() const { return algebra.rank(); }
  Weight zero() const;
  Weight epsilon(int i) const;
  Weight make(std::vector<Rational> coords) const;
  /// All odd roots (positive first).
  std::vector<Root> odd_roots() const;
  /// All roots, even and odd, positive and negative.
  std::vector<Root> all_roots() const;
  /// Throws unless w lives in this algebra (even part or not).
  void check(const Weight& w) const;
};

RootSystem build_algebra(AlgebraKind kind);

/// Supersymmetric form: +1 on the first coordinate block, -1 on the second
/// (gl, osp); +1 everywhere for pe and for even parts.
Rational bilinear_form(const RootSystem& rs, const Weight& a, const Weight& b);

/// <lambda, alpha^vee> for an even root, computed with the Euclidean form on
/// coordinates.
Rational coroot_pairing(const Weight& lambda, const Weight& alpha);

/// gl/osp: (lambda+rho, alpha) != 0 for every odd root.  pe(n): the product
/// of lambda_i - lambda_j + j - i - 1 over i != j is nonzero.
/// Throws std::invalid_argument for an even-part root system.
bool is_typical(const RootSystem& rs, const Weight& lambda);

}  // namespace whitt
