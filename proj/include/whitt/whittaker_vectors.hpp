#pragma once

#include <optional>
#include <string>
#include <vector>

#include "whitt/action_model.hpp"
#include "whitt/whittaker.hpp"

namespace whitt {

enum class Scope { EvenNilradical, FullNilradical };

struct WhittakerSpace {
  std::vector<ModuleElement> basis;
  /// "even", "odd" or "mixed" by exterior degree.
  std::vector<std::string> parity;
  int degree_bound = 0;
  /// Same dimension at degree_bound + 2.
  bool stable = false;
  /// Some pivot was not a unit: the basis is valid over the fraction field of
  /// the parameters but may not specialise.
  bool generic_only = false;
  std::size_t dim() const { return basis.size(); }
};

/// Solutions of x m = zeta(x) m over module elements of h-degree <= bound,
/// escalated once by 2 to report stability.
WhittakerSpace whittaker_vectors(const ActionModel& m, Scope scope, int degree_bound = 4);

/// Two stages: the n_0 Whittaker vectors are solved once symbolically (only
/// unit pivots allowed, so the basis specialises everywhere); the g_1
/// conditions are then imposed per parameter point over Q.
class WhittakerSolver {
 public:
  explicit WhittakerSolver(ActionModel symbolic, int degree_bound = 4);

  const ActionModel& model() const { return model_; }
  const WhittakerSpace& even_space() const { return even_; }
  /// Coordinates, relative to even_space(), of a basis of the full space.
  std::vector<std::vector<Rational>> full_coordinates(const ParamValues& values) const;
  WhittakerSpace full_space(const ParamValues& values) const;
  /// Images of the even basis under an operator, symbolic.
  std::vector<ModuleElement> images(const OpMatrix& op) const;
  ModuleElement combine(const std::vector<Rational>& coords, const ParamValues& values) const;

 private:
  ActionModel model_;
  WhittakerSpace even_;
  std::vector<std::vector<ModuleElement>> raised_;  // [g1 generator][basis vector]
};

/// v1 = v, v2 = F21 v, v3 = F21 F31 v, v4 = 2a F31 v + F21 h v.
std::vector<ModuleElement> gl12_reference_vectors(const ActionModel& m);

/// w = B v2 + C v3 + D v4 with E12 w = E13 w = 0, scaled so that B = 1 when
/// B != 0 and D = 1 otherwise.  nullopt when only w = 0 solves (typical).
struct SingularVector {
  Rational B, C, D;
  ModuleElement w;
};
std::optional<SingularVector> singular_vector_gl12(const ParamValues& values);

/// Composition series from Whittaker vectors for gl(1|2) or pe(2), regular zeta.
class PbwEngine {
 public:
  explicit PbwEngine(ModelKind kind, int degree_bound = 4);

  const WhittakerSolver& solver() const { return solver_; }
  ParamValues params(const Weight& lambda, const Rational& a) const;
  std::size_t whittaker_dimension(const Weight& lambda, const Rational& a = 1) const;

  /// Data read off the second Whittaker vector w (gl(1|2), atypical).
  struct Submodule {
    ModuleElement w;
    Rational e11, trace, omega, z;
    Weight mu;
  };
  std::optional<Submodule> submodule(const Weight& lambda, const Rational& a = 1) const;

  /// nullopt when zeta is not regular or the model has no reading for dim Wh.
  std::optional<CompositionSeries> composition_series(const RootSystem& rs, const WhittakerParam& p) const;

 private:
  ModelKind kind_;
  WhittakerSolver solver_;
  std::vector<ModuleElement> e11_, trace_, omega_, z_;
};

}  // namespace whitt
