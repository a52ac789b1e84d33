#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "whitt/weyl.hpp"

namespace whitt {

/// Polynomial in q with big integer coefficients, lowest degree first, no
/// trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) { if (c) coeffs_.push_back(c); }
  static IntPoly monomial(Integer c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer operator[](int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : Integer(0); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly shifted(int k) const;  // times q^k
  /// Terms of degree < bound.
  IntPoly truncated(int bound) const;
  Integer at_one() const;

  bool operator==(const IntPoly&) const = default;
  /// "1+q", "1+2q+q^2", "0".
  std::string str() const;

 private:
  std::vector<Integer> coeffs_;
  void trim();
};

/// All Kazhdan-Lusztig polynomials of a (reflection sub)group, indexed by
/// positions in WeylSubgroup::elements().
class KLTable {
 public:
  explicit KLTable(WeylSubgroup group);

  const WeylSubgroup& group() const { return group_; }
  const IntPoly& P(int x, int w) const { return cells_[x * n_ + w]; }
  const IntPoly& P(const WeylElement& x, const WeylElement& w) const;
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}, 0 unless x < w.
  Integer mu(int x, int w) const;
  int size() const { return n_; }

  /// Used by the on-disk cache.
  KLTable(WeylSubgroup group, std::vector<IntPoly> cells);
  const std::vector<IntPoly>& cells() const { return cells_; }

 private:
  WeylSubgroup group_;
  int n_ = 0;
  std::vector<IntPoly> cells_;
  std::vector<std::vector<bool>> leq_;
  void build();
};

/// Process-wide table for the group, built once.  When WHITTAKER_KL_CACHE names
/// a directory, tables are also read from and written to it.
std::shared_ptr<const KLTable> kl_table(const WeylSubgroup& group);

/// JSON cache file {"checksum", "payload"}.  Loading returns nullptr when the
/// file is missing, corrupt, or describes another group.
std::shared_ptr<const KLTable> load_kl_cache(const std::filesystem::path& file, const WeylSubgroup& group);
void store_kl_cache(const std::filesystem::path& file, const KLTable& table);

/// Integral block of an even-part weight: antidominant base, integral Weyl
/// group and the stabiliser of the base.
struct BlockParams {
  RootSystem rs;  // even part
  Weight base;
  WeylSubgroup integral;
  WeylSubgroup stabilizer;
};

/// rs may be a super root system; the even part is used.
BlockParams make_block(const RootSystem& rs, const Weight& lambda);

/// [M(lambda) : L(mu)] for g_0: with lambda = x.base, mu = y.base and xbar,
/// ybar the longest elements of xW_base, yW_base, this is P_{ybar,xbar}(1).
/// Zero when mu is not in the integral dot orbit of lambda.
Integer verma_multiplicity_even(const BlockParams& block, const Weight& lambda, const Weight& mu);

struct DecompositionMatrix {
  /// Orbit weights, antidominant first (by length of the coset representative).
  std::vector<Weight> weights;
  /// entries[i][j] = [M(weights[i]) : L(weights[j])].
  std::vector<std::vector<Integer>> entries;
};

DecompositionMatrix decomposition_matrix(const BlockParams& block);

/// Even part of the group label "A3", "B2", "C2" (types A via gl(r+1|1), B and
/// C both via osp(2|2r), whose even part is of type C).
RootSystem even_root_system_for_group(const std::string& label);

}  // namespace whitt
