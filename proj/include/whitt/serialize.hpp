#pragma once

#include <string>

#include <json.hpp>

#include "whitt/klpoly.hpp"
#include "whitt/whittaker.hpp"

namespace whitt {

using Json = nlohmann::ordered_json;

/// Weights are arrays of canonical rational strings, e.g. ["0","-1/2","3"].
Json to_json(const Weight& w);
Weight weight_from_json(const AlgebraKind& kind, const Json& j);

/// {"kind":"gl","m":1,"n":2}, {"kind":"osp","n":2}, {"kind":"pe","n":2};
/// "even": true marks the even part.
Json to_json(const AlgebraKind& kind);
AlgebraKind algebra_from_json(const Json& j);

/// {"1":"1"}: 1-based even simple root index -> value.
Json to_json(const WhittakerCharacter& zeta);
WhittakerCharacter character_from_json(const AlgebraKind& kind, const Json& j);

/// {"lambda", "zeta", "factors":[{"rep","mult"}], "status"}.
Json composition_json(const WhittakerParam& p, const std::optional<CompositionSeries>& cs);

/// CSV with header x,w,P.
std::string kl_csv(const KLTable& table);
/// CSV: first row "M\\L" then the weights, one row per Verma.
std::string decomposition_csv(const DecompositionMatrix& m);

}  // namespace whitt
