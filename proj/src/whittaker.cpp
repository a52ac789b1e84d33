#include "whitt/whittaker.hpp"

#include <algorithm>
#include <stdexcept>

#include "whitt/gl12_flags.hpp"

namespace whitt {

std::vector<int> WhittakerCharacter::support() const {
  std::vector<int> out;
  for (const auto& [k, v] : values)
    if (v != 0) out.push_back(k - 1);
  return out;
}

Integer CompositionSeries::length() const {
  Integer n = 0;
  for (const auto& f : factors) n += f.mult;
  return n;
}

WhittakerCharacter make_character(const RootSystem& rs, const std::map<int, Rational>& values) {
  WhittakerCharacter z;
  z.algebra = rs.algebra;
  const int k = static_cast<int>(rs.simple_roots_even.size());
  for (const auto& [idx, v] : values) {
    if (idx < 1 || idx > k)
      throw std::invalid_argument("zeta index " + std::to_string(idx) + " is not an even simple root of " +
                                  rs.algebra.name() + " (1.." + std::to_string(k) + ")");
    if (v != 0) z.values[idx] = v;
  }
  return z;
}

bool is_regular(const RootSystem& rs, const WhittakerCharacter& zeta) {
  return zeta.support().size() == rs.simple_roots_even.size();
}

WeylSubgroup zeta_group(const RootSystem& rs, const WhittakerCharacter& zeta) {
  return WeylSubgroup::levi(rs, zeta.support());
}

namespace {

void check_zeta(const RootSystem& rs, const WhittakerCharacter& z) {
  if (z.algebra.super() != rs.algebra.super())
    throw std::invalid_argument("character of " + z.algebra.name() + " used with " + rs.algebra.name());
}

bool is_gl12(const RootSystem& rs) { return rs.algebra.super() == AlgebraKind::gl(1, 2); }

}  // namespace

bool same_simple(const RootSystem& rs, const WhittakerParam& p, const WhittakerParam& q) {
  if (!(p.zeta == q.zeta)) throw std::invalid_argument("same_simple needs the same character");
  check_zeta(rs, p.zeta);
  return in_orbit(rs, zeta_group(rs, p.zeta), p.lambda, q.lambda);
}

std::vector<Weight> atypical_roots(const RootSystem& rs, const Weight& lambda) {
  std::vector<Weight> out;
  Weight shifted = lambda + rs.rho;
  for (const auto& a : rs.positive_odd)
    if (bilinear_form(rs, shifted, a.weight) == 0) out.push_back(a.weight);
  return out;
}

std::optional<std::vector<Factor>> verma_factors_super(const RootSystem& rs, const Weight& lambda) {
  if (rs.algebra.even_part) throw std::invalid_argument("super Verma modules need a superalgebra");
  rs.check(lambda);
  std::vector<Factor> out;
  if (is_typical(rs, lambda)) {
    BlockParams block = make_block(rs, lambda);
    for (const auto& mu : orbit(block.rs, block.integral, lambda)) {
      Integer m = verma_multiplicity_even(block, lambda, mu);
      if (m != 0) out.push_back({Weight(rs.algebra, mu.coords), m});
    }
    return out;
  }
  if (!is_gl12(rs)) return std::nullopt;
  if (auto placed = gl12::place(lambda)) {
    for (const auto& x : gl12::verma_factors(placed->label)) {
      Weight w = gl12::weight_of({placed->t, x});
      out.push_back({Weight(rs.algebra, w.coords), 1});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.weight < b.weight; });
    return out;
  }
  // Non-integral atypical: the block is equivalent to the principal block of
  // gl(1|1), so M(lambda) = [L(lambda)] + [L(lambda - alpha)].
  auto roots = atypical_roots(rs, lambda);
  if (roots.size() != 1) throw std::logic_error("non-integral atypical weight with " +
                                                std::to_string(roots.size()) + " atypical roots");
  out.push_back({lambda, 1});
  out.push_back({lambda - roots.front(), 1});
  return out;
}

MaybeCount verma_multiplicity_super(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  rs.check(mu);
  auto factors = verma_factors_super(rs, lambda);
  if (!factors) return std::nullopt;
  for (const auto& f : *factors)
    if (f.weight == mu) return f.mult;
  return Integer(0);
}

Weight canonical_representative(const RootSystem& rs, const WhittakerCharacter& zeta, const Weight& nu) {
  WeylSubgroup wz = zeta_group(rs, zeta);
  auto orb = orbit(rs, wz, nu);  // sorted
  for (const auto& w : orb)
    if (is_antidominant_in(rs, w, wz)) return Weight(nu.algebra, w.coords);
  return Weight(nu.algebra, orb.front().coords);
}

MaybeCount whittaker_multiplicity(const RootSystem& rs, const WhittakerParam& p, const Weight& mu) {
  check_zeta(rs, p.zeta);
  rs.check(mu);
  auto factors = verma_factors_super(rs, p.lambda);
  if (!factors) return std::nullopt;
  WeylSubgroup wz = zeta_group(rs, p.zeta);
  Integer total = 0;
  for (const auto& f : *factors)
    if (is_antidominant_in(rs, f.weight, wz) && in_orbit(rs, wz, f.weight, mu)) total += f.mult;
  return total;
}

std::optional<CompositionSeries> composition_series(const RootSystem& rs, const WhittakerParam& p) {
  check_zeta(rs, p.zeta);
  auto factors = verma_factors_super(rs, p.lambda);
  if (!factors) return std::nullopt;
  WeylSubgroup wz = zeta_group(rs, p.zeta);
  std::map<Weight, Integer> grouped;
  for (const auto& f : *factors)
    if (is_antidominant_in(rs, f.weight, wz)) grouped[canonical_representative(rs, p.zeta, f.weight)] += f.mult;
  CompositionSeries cs;
  for (const auto& [w, m] : grouped) cs.factors.push_back({w, m});
  return cs;
}

std::optional<bool> is_standard_simple(const RootSystem& rs, const WhittakerParam& p) {
  check_zeta(rs, p.zeta);
  const Weight& lambda = p.lambda;
  if (rs.algebra.series == Series::PE) {
    if (is_antidominant_in(rs, lambda, WeylSubgroup::full(rs))) return true;
    if (!is_typical(rs, lambda)) return std::nullopt;
    auto cs = composition_series(rs, p);
    if (!cs) return std::nullopt;
    return cs->length() == 1;
  }
  if (!is_typical(rs, lambda)) return false;
  const auto S = p.zeta.support();
  int count = 0;
  for (const auto& nu : orbit(rs, WeylSubgroup::full(rs), lambda))
    if (is_antidominant(rs, nu, S) && leq_weights(rs, nu, lambda)) ++count;
  return count == 1;
}

bool block_link(const RootSystem& rs, const WhittakerParam& p, const WhittakerParam& q) {
  if (!is_gl12(rs)) throw std::invalid_argument("block_link is only defined for gl(1|2)");
  if (!(p.zeta == q.zeta)) throw std::invalid_argument("block_link needs the same character");
  if (is_typical(rs, p.lambda) || is_typical(rs, q.lambda))
    throw std::invalid_argument("block_link needs atypical weights");
  const Weight& lambda = p.lambda;
  const Weight& mu = q.lambda;
  const WeylSubgroup W = WeylSubgroup::full(rs);
  for (const auto& alpha : atypical_roots(rs, mu))
    for (const auto& w : W.elements()) {
      Weight d = dot_action(rs, w, lambda) - mu;
      // d must be k * alpha with k an integer.
      std::optional<Rational> k;
      bool ok = true;
      for (std::size_t i = 0; i < d.size() && ok; ++i) {
        if (alpha[i] == 0) {
          ok = d[i] == 0;
        } else {
          Rational ki = d[i] / alpha[i];
          if (k && *k != ki) ok = false;
          k = ki;
        }
      }
      if (ok && k && is_integer(*k)) return true;
    }
  return false;
}

}  // namespace whitt
