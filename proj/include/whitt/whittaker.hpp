#pragma once

#include <map>
#include <optional>
#include <vector>

#include "whitt/klpoly.hpp"
#include "whitt/weyl.hpp"

namespace whitt {

/// A character of n vanishing on [n_0, n_0] and on n_1, stored by its values
/// on the even simple root vectors (1-based index -> nonzero value).
struct WhittakerCharacter {
  AlgebraKind algebra;
  std::map<int, Rational> values;

  /// Support as 0-based even simple root indices.
  std::vector<int> support() const;
  bool operator==(const WhittakerCharacter&) const = default;
};

/// Throws if an index is not an even simple root.  Zero values are dropped.
WhittakerCharacter make_character(const RootSystem& rs, const std::map<int, Rational>& values);
/// W_zeta = W.
bool is_regular(const RootSystem& rs, const WhittakerCharacter& zeta);
/// W_zeta, the Weyl group of the Levi generated by the support.
WeylSubgroup zeta_group(const RootSystem& rs, const WhittakerCharacter& zeta);

struct WhittakerParam {
  Weight lambda;
  WhittakerCharacter zeta;
};

struct Factor {
  Weight weight;
  Integer mult;
  bool operator==(const Factor&) const = default;
};

/// Composition factors of a standard Whittaker module, one per W_zeta orbit;
/// `weight` is the lexicographically smallest n_zeta-antidominant member.
struct CompositionSeries {
  std::vector<Factor> factors;
  Integer length() const;
  bool operator==(const CompositionSeries&) const = default;
};

/// nullopt stands for "Unsupported" throughout.
using MaybeCount = std::optional<Integer>;

/// W_zeta . lambda == W_zeta . mu.
bool same_simple(const RootSystem& rs, const WhittakerParam& p, const WhittakerParam& q);

/// All L(mu) occurring in the super Verma module M(lambda), with multiplicity.
/// Typical weights use the even KL data; atypical gl(1|2) weights use the
/// gl(2|1) flag table (integral) or the two-factor rule (non-integral).
std::optional<std::vector<Factor>> verma_factors_super(const RootSystem& rs, const Weight& lambda);
MaybeCount verma_multiplicity_super(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Sum of [M(lambda) : L(nu)] over n_zeta-antidominant nu with mu in W_zeta . nu.
MaybeCount whittaker_multiplicity(const RootSystem& rs, const WhittakerParam& p, const Weight& mu);
std::optional<CompositionSeries> composition_series(const RootSystem& rs, const WhittakerParam& p);

/// Lexicographically smallest n_zeta-antidominant weight of W_zeta . nu.
Weight canonical_representative(const RootSystem& rs, const WhittakerCharacter& zeta, const Weight& nu);

/// gl/osp: typical and exactly one n_zeta-antidominant nu in W . lambda with
/// nu <= lambda.  pe: true for antidominant lambda; typical lambda is decided
/// by the composition length; otherwise unsupported.
std::optional<bool> is_standard_simple(const RootSystem& rs, const WhittakerParam& p);

/// Positive odd roots alpha with (lambda + rho, alpha) = 0.
std::vector<Weight> atypical_roots(const RootSystem& rs, const Weight& lambda);

/// gl(1|2) only, both weights atypical: lambda in W . (mu + k alpha) for some
/// integer k, alpha an atypical root of mu.
bool block_link(const RootSystem& rs, const WhittakerParam& p, const WhittakerParam& q);

}  // namespace whitt
