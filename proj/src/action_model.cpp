#include "whitt/action_model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace whitt {

ShiftOp ShiftOp::shift(long s, const LPoly& q) {
  ShiftOp op;
  op.add(s, q);
  return op;
}

void ShiftOp::add(long s, const LPoly& q) {
  if (q.is_zero()) return;
  auto [it, fresh] = parts_.emplace(s, q);
  if (!fresh) {
    it->second += q;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

LPoly ShiftOp::apply(const LPoly& p) const {
  LPoly out;
  for (const auto& [s, q] : parts_) out += q * p.shift_h(s);
  return out;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
  for (const auto& [s, q] : o.parts_) add(s, q);
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) {
  for (const auto& [s, q] : o.parts_) add(s, -q);
  return *this;
}

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
  ShiftOp out;
  for (const auto& [s1, qa] : a.parts_)
    for (const auto& [s2, qb] : b.parts_) out.add(s1 + s2, qa * qb.shift_h(s1));
  return out;
}

ShiftOp operator*(const LPoly& c, const ShiftOp& a) {
  ShiftOp out;
  for (const auto& [s, q] : a.parts_) out.add(s, c * q);
  return out;
}

ShiftOp ShiftOp::substitute(const ParamValues& v) const {
  ShiftOp out;
  for (const auto& [s, q] : parts_) out.add(s, q.substitute(v));
  return out;
}

OpMatrix op_zero(std::size_t n) { return OpMatrix(n, std::vector<ShiftOp>(n)); }

OpMatrix op_identity(std::size_t n) {
  OpMatrix m = op_zero(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = ShiftOp::scalar(1);
  return m;
}

OpMatrix operator+(const OpMatrix& a, const OpMatrix& b) {
  OpMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += b[i][j];
  return out;
}

OpMatrix operator-(const OpMatrix& a, const OpMatrix& b) {
  OpMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] -= b[i][j];
  return out;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
  const std::size_t n = a.size();
  OpMatrix out = op_zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

OpMatrix operator*(const LPoly& c, const OpMatrix& a) {
  OpMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x = c * x;
  return out;
}

ModuleElement act(const OpMatrix& m, const ModuleElement& v) {
  ModuleElement out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j].apply(v[j]);
  return out;
}

bool is_zero(const ModuleElement& v) {
  return std::all_of(v.begin(), v.end(), [](const LPoly& p) { return p.is_zero(); });
}

ModuleElement substitute(const ModuleElement& v, const ParamValues& values) {
  ModuleElement out;
  for (const auto& p : v) out.push_back(p.substitute(values));
  return out;
}

LPoly ActionModel::param(Var v) const {
  auto it = values.find(v);
  return it == values.end() ? LPoly::var(v) : LPoly(it->second);
}

LPoly ActionModel::zeta(int gen) const { return gen == zeta_generator ? param(kA) : LPoly(); }

std::vector<int> ActionModel::full_nilradical() const {
  std::vector<int> out = {zeta_generator};
  for (int i = 0; i < structure.size(); ++i)
    if (structure.gen(i).degree == 1) out.push_back(i);
  return out;
}

bool ActionModel::relations_hold() const {
  const int g = structure.size();
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      const bool both_odd = structure.odd(i) && structure.odd(j);
      OpMatrix lhs = action[i] * action[j];
      OpMatrix yx = action[j] * action[i];
      lhs = both_odd ? lhs + yx : lhs - yx;
      OpMatrix rhs = op_zero(rank());
      for (const auto& [k, c] : structure.bracket(i, j)) rhs = rhs + LPoly(c) * action[k];
      if (!(lhs == rhs)) return false;
    }
  return true;
}

ModuleElement ActionModel::bottom(const LPoly& p) const {
  ModuleElement v(rank());
  v[0] = p;
  return v;
}

std::string ActionModel::element_string(const ModuleElement& v) const {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += basis_labels[t] + " ⊗ (" + v[t].str() + ")";
  }
  return out.empty() ? "0" : out;
}

namespace {

ActionModel build_kac(ModelKind kind, const SuperStructure& s, const std::map<std::string, ShiftOp>& bottom,
                      const std::string& zeta_name, bool check) {
  ActionModel m;
  m.kind = kind;
  m.structure = s;
  m.zeta_generator = s.index(zeta_name);
  const int g = s.size();
  for (int i = 0; i < g; ++i)
    if (s.gen(i).degree == -1) m.lowering.push_back(i);
  const int d = static_cast<int>(m.lowering.size());
  for (int a : m.lowering)
    for (int b : m.lowering)
      if (!s.bracket(a, b).empty()) throw std::invalid_argument("g_{-1} is not supercommutative");
  const std::size_t n = std::size_t(1) << d;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string label;
    for (int k = 0; k < d; ++k) {
      if (k) label += ' ';
      label += s.gen(m.lowering[k]).name + "^" + std::to_string(mask >> k & 1);
    }
    m.basis_labels.push_back(label);
  }
  m.action.assign(g, op_zero(n));

  // Bottom layer: g_0 through the given operators, g_1 by zero, g_{-1} by wedging.
  for (int x = 0; x < g; ++x) {
    const int deg = s.gen(x).degree;
    if (deg == 0) {
      auto it = bottom.find(s.gen(x).name);
      if (it == bottom.end()) throw std::logic_error("no bottom action for " + s.gen(x).name);
      m.action[x][0][0] = it->second;
    } else if (deg == -1) {
      int k = static_cast<int>(std::find(m.lowering.begin(), m.lowering.end(), x) - m.lowering.begin());
      m.action[x][std::size_t(1) << k][0] = ShiftOp::scalar(1);
    }
  }

  std::vector<std::size_t> masks;
  for (std::size_t mask = 1; mask < n; ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });
  // x (y_k b_rest) = [x, y_k] b_rest + (-1)^{|x||y_k|} y_k (x b_rest)
  for (std::size_t S : masks) {
    const int k = std::countr_zero(S);
    const std::size_t rest = S ^ (std::size_t(1) << k);
    const int y = m.lowering[k];
    for (int x = 0; x < g; ++x) {
      auto& col = m.action[x];
      for (const auto& [gen, c] : s.bracket(x, y))
        for (std::size_t T = 0; T < n; ++T)
          if (!m.action[gen][T][rest].is_zero()) col[T][S] += LPoly(c) * m.action[gen][T][rest];
      const int sx = s.odd(x) && s.odd(y) ? -1 : 1;
      for (std::size_t T = 0; T < n; ++T) {
        if (T >> k & 1 || col[T][rest].is_zero()) continue;
        const int below = std::popcount(T & ((std::size_t(1) << k) - 1));
        const int sign = sx * (below % 2 ? -1 : 1);
        col[T | (std::size_t(1) << k)][S] += LPoly(sign) * col[T][rest];
      }
    }
  }
  if (check && !m.relations_hold()) throw std::logic_error("Kac module action violates a bracket relation");
  return m;
}

LPoly h() { return LPoly::var(kH); }

// sl2 Whittaker action on C[h]v: e p = a p(h-2), f p = p(h+2)(b - h^2 - 2h)/(4a).
std::pair<ShiftOp, ShiftOp> sl2_pair() {
  LPoly a = LPoly::var(kA), b = LPoly::var(kB);
  ShiftOp e = ShiftOp::shift(-2, a);
  ShiftOp f = ShiftOp::shift(2, (b - h() * h() - LPoly(2) * h()) * LPoly::var(kA, -1) * Rational(1, 4));
  return {e, f};
}

}  // namespace

ActionModel realize_gl12(const SuperStructure& s, bool check) {
  auto [e, f] = sl2_pair();
  LPoly c = LPoly::var(kC), d = LPoly::var(kD);
  LPoly half_t = c - d;  // (E22 + E33)/2
  std::map<std::string, ShiftOp> bottom = {
      {"E11", ShiftOp::scalar(d)},
      {"E22", ShiftOp::scalar(half_t + h() * Rational(1, 2))},
      {"E33", ShiftOp::scalar(half_t - h() * Rational(1, 2))},
      {"e", e},
      {"f", f},
  };
  return build_kac(ModelKind::GL12, s, bottom, "e", check);
}

ActionModel realize_gl12() {
  static const ActionModel model = realize_gl12(gl12_structure(), true);
  return model;
}

ActionModel realize_pe2(const SuperStructure& s, bool check) {
  auto [e, f] = sl2_pair();
  LPoly half_s = LPoly::var(kC) * Rational(1, 2);
  std::map<std::string, ShiftOp> bottom = {
      {"H1", ShiftOp::scalar(half_s + h() * Rational(1, 2))},
      {"H2", ShiftOp::scalar(half_s - h() * Rational(1, 2))},
      {"e'", e},
      {"f'", f},
  };
  return build_kac(ModelKind::PE2, s, bottom, "e'", check);
}

ActionModel realize_pe2() {
  static const ActionModel model = realize_pe2(pe2_structure(), true);
  return model;
}

ActionModel specialize(const ActionModel& m, const ParamValues& values) {
  if (auto it = values.find(kA); it != values.end() && it->second == 0)
    throw std::invalid_argument("the character value a must be nonzero");
  ActionModel out = m;
  for (auto& op : out.action)
    for (auto& row : op)
      for (auto& x : row) x = x.substitute(values);
  for (const auto& [v, val] : values) out.values[v] = val;
  return out;
}

ParamValues gl12_params(const Weight& lambda, const Rational& a) {
  if (lambda.algebra.super() != AlgebraKind::gl(1, 2)) throw std::invalid_argument("gl(1|2) weight expected");
  if (a == 0) throw std::invalid_argument("the character value a must be nonzero");
  Rational m = lambda[1] - lambda[2];
  return {{kA, a}, {kB, m * (m + 2)}, {kC, lambda[0] + (lambda[1] + lambda[2]) / 2}, {kD, lambda[0]}};
}

ParamValues pe2_params(const Weight& lambda, const Rational& a) {
  if (lambda.algebra.super() != AlgebraKind::pe(2)) throw std::invalid_argument("pe(2) weight expected");
  if (a == 0) throw std::invalid_argument("the character value a must be nonzero");
  Rational m = lambda[0] - lambda[1];
  return {{kA, a}, {kB, m * (m + 2)}, {kC, lambda[0] + lambda[1]}};
}

OpMatrix operator_of(const ActionModel& m, const UEAElement& u) {
  OpMatrix total = op_zero(m.rank());
  for (const auto& [word, c] : u.terms()) {
    OpMatrix prod = op_identity(m.rank());
    for (int g : word) prod = prod * m.action[g];
    total = total + LPoly(c) * prod;
  }
  return total;
}

UEAElement gl12_casimir(const SuperStructure& s) {
  auto g = [&](const char* n) { return UEAElement::generator(s, n); };
  UEAElement h = g("E22") - g("E33");
  return Rational(4) * (g("f") * g("e")) + h * h + Rational(2) * h;
}

UEAElement gl12_center(const SuperStructure& s) {
  auto g = [&](const char* n) { return UEAElement::generator(s, n); };
  return g("E11") + Rational(1, 2) * (g("E22") + g("E33"));
}

bool casimir_identity_check(const SuperStructure& s) {
  ActionModel m = realize_gl12(s, false);
  auto g = [&](const char* n) { return UEAElement::generator(s, n); };
  UEAElement lhs = pbw_reduce(s, g("E12") * g("E13") * g("F31") * g("F21"));
  UEAElement z = gl12_center(s);
  UEAElement rhs = pbw_reduce(s, z * z - z - Rational(1, 4) * gl12_casimir(s));
  OpMatrix L = operator_of(m, lhs), R = operator_of(m, rhs);
  for (std::size_t t = 0; t < m.rank(); ++t)
    if (!(L[t][0] == R[t][0])) return false;
  return true;
}

}  // namespace whitt
