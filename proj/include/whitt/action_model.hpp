#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "whitt/laurent.hpp"
#include "whitt/pbw.hpp"
#include "whitt/rootdata.hpp"

namespace whitt {

/// Operator p(h) -> sum_s q_s(h) p(h + s) on C[h] with coefficients in LPoly.
class ShiftOp {
 public:
  ShiftOp() = default;
  static ShiftOp scalar(const LPoly& q) { return shift(0, q); }
  static ShiftOp shift(long s, const LPoly& q);

  bool is_zero() const { return parts_.empty(); }
  const std::map<long, LPoly>& parts() const { return parts_; }

  LPoly apply(const LPoly& p) const;
  ShiftOp& operator+=(const ShiftOp& o);
  ShiftOp& operator-=(const ShiftOp& o);
  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
  friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b);  // composition a o b
  friend ShiftOp operator*(const LPoly& c, const ShiftOp& a);
  bool operator==(const ShiftOp&) const = default;
  ShiftOp substitute(const ParamValues& v) const;

 private:
  std::map<long, LPoly> parts_;
  void add(long s, const LPoly& q);
};

/// Square matrix of ShiftOps acting on Lambda(g_{-1}) (x) C[h]v; entry [T][S]
/// maps the S component to the T component.
using OpMatrix = std::vector<std::vector<ShiftOp>>;
/// One polynomial per exterior basis monomial.
using ModuleElement = std::vector<LPoly>;

OpMatrix op_zero(std::size_t n);
OpMatrix op_identity(std::size_t n);
OpMatrix operator+(const OpMatrix& a, const OpMatrix& b);
OpMatrix operator-(const OpMatrix& a, const OpMatrix& b);
OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);
OpMatrix operator*(const LPoly& c, const OpMatrix& a);
ModuleElement act(const OpMatrix& m, const ModuleElement& v);
bool is_zero(const ModuleElement& v);
ModuleElement substitute(const ModuleElement& v, const ParamValues& values);

enum class ModelKind { GL12, PE2 };

/// Standard Whittaker module realised as the Kac module over the g_0
/// Whittaker module C[h]v.  Parameters (possibly symbolic):
///   gl(1|2): a = zeta(e), b = chi(Omega), c = chi(z), d = lambda_1;
///   pe(2):   a = zeta(e'), b = chi(Omega'), c = lambda_1 + lambda_2.
struct ActionModel {
  ModelKind kind = ModelKind::GL12;
  SuperStructure structure;
  /// g_{-1} generators in PBW order; bit k of a basis index is lowering[k].
  std::vector<int> lowering;
  std::vector<std::string> basis_labels;
  std::vector<OpMatrix> action;
  /// Values substituted so far; an empty map means fully symbolic.
  ParamValues values;
  /// The even raising generator carrying zeta.
  int zeta_generator = -1;

  std::size_t rank() const { return basis_labels.size(); }
  LPoly param(Var v) const;
  /// zeta(x) as a ring element (a for the raising generator, 0 otherwise).
  LPoly zeta(int gen) const;
  std::vector<int> even_nilradical() const { return {zeta_generator}; }
  std::vector<int> full_nilradical() const;
  const OpMatrix& op(const std::string& name) const { return action[structure.index(name)]; }

  /// Every supercommutator [x,y] acts as the corresponding combination.
  bool relations_hold() const;
  /// h^k v in the bottom layer.
  ModuleElement bottom(const LPoly& p) const;
  std::string element_string(const ModuleElement& v) const;
};

/// Kac module construction; with `check` the relations are verified and a
/// failure throws.  `structure` defaults to the standard table.
ActionModel realize_gl12(const SuperStructure& structure, bool check = true);
ActionModel realize_gl12();
ActionModel realize_pe2(const SuperStructure& structure, bool check = true);
ActionModel realize_pe2();
ActionModel specialize(const ActionModel& m, const ParamValues& values);

/// Parameter values for a concrete weight with zeta value a.
ParamValues gl12_params(const Weight& lambda, const Rational& a = 1);
ParamValues pe2_params(const Weight& lambda, const Rational& a = 1);

/// Operator of a (not necessarily reduced) element of U(g).
OpMatrix operator_of(const ActionModel& m, const UEAElement& u);

/// Omega = 4fe + h^2 + 2h and z = E11 + (E22 + E33)/2 for gl(1|2).
UEAElement gl12_casimir(const SuperStructure& s);
UEAElement gl12_center(const SuperStructure& s);

/// E12 E13 F31 F21 acts on the bottom layer as z^2 - z - Omega/4.
bool casimir_identity_check(const SuperStructure& s);

}  // namespace whitt
