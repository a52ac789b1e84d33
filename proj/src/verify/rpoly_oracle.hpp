#pragma once

#include <vector>

#include "whitt/klpoly.hpp"

namespace whitt::oracle {

/// Kazhdan-Lusztig polynomials obtained by inverting R-polynomials.  Bruhat
/// order comes from the subword property on reduced words, so nothing here
/// shares code with the main recursion except group enumeration.
class RPolyOracle {
 public:
  explicit RPolyOracle(const WeylSubgroup& group);
  const IntPoly& R(int x, int w) const { return r_[x * n_ + w]; }
  const IntPoly& P(int x, int w) const { return p_[x * n_ + w]; }
  bool leq(int x, int w) const { return leq_[x * n_ + w]; }

 private:
  int n_ = 0;
  std::vector<bool> leq_;
  std::vector<IntPoly> r_, p_;
};

}  // namespace whitt::oracle
