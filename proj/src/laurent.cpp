#include "whitt/laurent.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace whitt {

LPoly::LPoly(const Rational& c) {
  if (c != 0) terms_[Exp{}] = c;
}

LPoly LPoly::var(Var v, int power) {
  Exp e{};
  e[v] = power;
  return monomial(1, e);
}

LPoly LPoly::monomial(const Rational& c, const Exp& e) {
  LPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool LPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{});
}

bool LPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Exp& e = terms_.begin()->first;
  for (int v = 0; v < kNumVars; ++v)
    if (v != kA && e[v] != 0) return false;
  return true;
}

Rational LPoly::constant_term() const {
  auto it = terms_.find(Exp{});
  return it == terms_.end() ? Rational(0) : it->second;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(e, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LPoly& LPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LPoly operator*(const LPoly& x, const LPoly& y) {
  LPoly out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      LPoly::Exp e;
      for (int v = 0; v < kNumVars; ++v) e[v] = ex[v] + ey[v];
      Rational c = cx * cy;
      auto [it, fresh] = out.terms_.emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

LPoly LPoly::operator-() const {
  LPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LPoly LPoly::inverse() const {
  if (!is_unit()) throw std::domain_error("inverting a non-unit " + str());
  const auto& [e, c] = *terms_.begin();
  Exp inv{};
  for (int v = 0; v < kNumVars; ++v) inv[v] = -e[v];
  return monomial(1 / c, inv);
}

LPoly LPoly::shift_h(long s) const {
  if (s == 0) return *this;
  LPoly out;
  for (const auto& [e, c] : terms_) {
    const int n = e[kH];
    if (n < 0) throw std::domain_error("negative power of h");
    // (h+s)^n = sum_k C(n,k) s^{n-k} h^k
    for (int k = 0; k <= n; ++k) {
      Integer binom, spow;
      mpz_bin_uiui(binom.get_mpz_t(), n, k);
      mpz_pow_ui(spow.get_mpz_t(), Integer(s).get_mpz_t(), n - k);
      Exp ek = e;
      ek[kH] = k;
      out += monomial(c * Rational(binom * spow), ek);
    }
  }
  return out;
}

LPoly LPoly::substitute(Var v, const LPoly& value) const {
  LPoly out;
  for (const auto& [e, c] : terms_) {
    Exp rest = e;
    rest[v] = 0;
    LPoly term = monomial(c, rest);
    int k = e[v];
    if (k < 0) {
      LPoly inv = value.inverse();
      for (int i = 0; i < -k; ++i) term = term * inv;
    } else {
      for (int i = 0; i < k; ++i) term = term * value;
    }
    out += term;
  }
  return out;
}

LPoly LPoly::substitute(const ParamValues& values) const {
  LPoly out;
  for (const auto& [e, c] : terms_) {
    Exp rest = e;
    Rational coeff = c;
    for (const auto& [v, val] : values) {
      int k = e[v];
      if (k == 0) continue;
      if (k < 0 && val == 0) throw std::domain_error("substituting 0 for an inverted variable");
      Rational p = 1;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), val.get_num_mpz_t(), std::abs(k));
      mpz_pow_ui(den.get_mpz_t(), val.get_den_mpz_t(), std::abs(k));
      p = k > 0 ? Rational(num, den) : Rational(den, num);
      p.canonicalize();
      coeff *= p;
      rest[v] = 0;
    }
    out += monomial(coeff, rest);
  }
  return out;
}

int LPoly::max_degree(Var v) const {
  int d = INT_MIN;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

LPoly LPoly::coeff_h(int k) const {
  LPoly out;
  for (const auto& [e, c] : terms_)
    if (e[kH] == k) {
      Exp rest = e;
      rest[kH] = 0;
      out.terms_.emplace(rest, c);
    }
  return out;
}

LPoly LPoly::primitive() const {
  if (terms_.empty()) return *this;
  Exp lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < kNumVars; ++v) lo[v] = std::min(lo[v], e[v]);
  for (int v = 0; v < kNumVars; ++v)
    if (v != kA) lo[v] = std::max(lo[v], 0);
  Rational lead = terms_.rbegin()->second;
  LPoly out;
  for (const auto& [e, c] : terms_) {
    Exp r;
    for (int v = 0; v < kNumVars; ++v) r[v] = e[v] - lo[v];
    out.terms_.emplace(r, c / lead);
  }
  return out;
}

std::string LPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[kNumVars] = {"h", "a", "b", "c", "d"};
  std::string out;
  // Highest h-degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit_monomial = e != Exp{};
    Rational mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    std::string mono;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    if (!unit_monomial) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

void RingTraits<LPoly>::normalize_row(std::vector<LPoly>& row) {
  // Divide by the monomial gcd of the row and scale the first entry monic.
  LPoly::Exp lo{};
  bool first = true;
  const LPoly* lead = nullptr;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    if (!lead) lead = &x;
    for (const auto& [e, c] : x.terms()) {
      if (first) {
        lo = e;
        first = false;
      }
      for (int v = 0; v < kNumVars; ++v) lo[v] = std::min(lo[v], e[v]);
    }
  }
  if (!lead) return;
  for (int v = 0; v < kNumVars; ++v)
    if (v != kA) lo[v] = std::max(lo[v], 0);
  LPoly::Exp neg;
  for (int v = 0; v < kNumVars; ++v) neg[v] = -lo[v];
  Rational scale = 1 / lead->terms().rbegin()->second;
  LPoly factor = LPoly::monomial(scale, neg);
  for (auto& x : row) x = x * factor;
}

}  // namespace whitt
