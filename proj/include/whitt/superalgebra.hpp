#pragma once

#include <string>
#include <utility>
#include <vector>

#include "whitt/linalg.hpp"
#include "whitt/rootdata.hpp"

namespace whitt {

struct Generator {
  std::string name;
  Parity parity = Parity::Even;
  /// Z-grading g_{-1} + g_0 + g_1 of a type I superalgebra.
  int degree = 0;
};

/// Sparse linear combination of generators.
using GenCombo = std::vector<std::pair<int, Rational>>;

/// Finite dimensional Lie superalgebra with an ordered basis and its
/// supercommutator table [x, y] = xy - (-1)^{|x||y|} yx.
class SuperStructure {
 public:
  /// Brackets from matrices in gl(p|q): `odd_index[i]` marks odd matrix rows.
  static SuperStructure from_matrices(std::vector<Generator> gens, const std::vector<Matrix<Rational>>& mats,
                                      const std::vector<bool>& odd_index);
  /// Raw table; `verify` checks super-antisymmetry and the super Jacobi identity.
  static SuperStructure from_table(std::vector<Generator> gens, std::vector<std::vector<GenCombo>> table,
                                   bool verify = true);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[i]; }
  bool odd(int i) const { return gens_[i].parity == Parity::Odd; }
  int index(const std::string& name) const;
  const GenCombo& bracket(int i, int j) const { return table_[i][j]; }
  const std::vector<std::vector<GenCombo>>& table() const { return table_; }

  bool check_antisymmetry() const;
  bool check_jacobi() const;

 private:
  std::vector<Generator> gens_;
  std::vector<std::vector<GenCombo>> table_;
};

/// Order F21, F31, f, E11, E22, E33, e, E12, E13 with f = E32, e = E23.
SuperStructure gl12_structure();
/// Inside gl(2|2) (rows 3, 4 odd): Y12 = E32 - E41, f' = E21 - E34,
/// H1 = E11 - E33, H2 = E22 - E44, e' = E12 - E43, X11 = E13,
/// X12 = E14 + E23, X22 = E24.
SuperStructure pe2_structure();

}  // namespace whitt
