#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whitt/rootdata.hpp"

namespace whitt {

/// Signed permutation: w(e_i) = sign[i] * e_{image[i]}.  Types A and P only
/// ever produce sign +1.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);
  /// Reflection in an even root, read off from s(e_i) = e_i - <e_i, beta^vee> beta.
  static WeylElement reflection(const Weight& beta);

  int rank() const { return static_cast<int>(image_.size()); }
  int image(int i) const { return image_[i]; }
  int sign(int i) const { return sign_[i]; }

  /// (this * other)(x) = this(other(x)).
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  Weight apply(const Weight& w) const;

  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;

 private:
  std::vector<int> image_;
  std::vector<int> sign_;
};

/// A reflection subgroup of the Weyl group of g_0, given by a set of ambient
/// positive even roots closed under its own reflections (a Levi, the integral
/// roots of a weight, a stabiliser, ...).
class WeylSubgroup {
 public:
  WeylSubgroup() = default;
  WeylSubgroup(const RootSystem& rs, std::vector<Weight> positive_roots);

  /// The full Weyl group of g_0.
  static WeylSubgroup full(const RootSystem& rs);
  /// Parabolic subgroup generated by the listed even simple roots (0-based).
  static WeylSubgroup levi(const RootSystem& rs, const std::vector<int>& simple_indices);
  /// Subgroup generated by reflections in the given roots (closure computed).
  static WeylSubgroup generated_by(const RootSystem& rs, const std::vector<Weight>& roots);

  const std::vector<Weight>& positive_roots() const { return d_->positive; }
  const std::vector<Weight>& simple_roots() const { return d_->simple; }
  const std::vector<WeylElement>& generators() const { return d_->gens; }
  int rank() const { return d_->rank; }

  /// All elements, sorted by length (BFS order).  Enumerated on first use.
  const std::vector<WeylElement>& elements() const;
  std::size_t size() const { return elements().size(); }
  /// Position in elements(), or -1.
  int index_of(const WeylElement& w) const;
  bool contains(const WeylElement& w) const { return index_of(w) >= 0; }
  int length(const WeylElement& w) const;
  const std::vector<int>& lengths() const;

  /// w(alpha_s) is negative.
  bool is_right_descent(const WeylElement& w, int s) const;
  /// Generator indices, 0-based, leftmost first.
  std::vector<int> reduced_word(const WeylElement& w) const;
  WeylElement from_word(const std::vector<int>& word) const;
  WeylElement longest() const;
  bool bruhat_leq(const WeylElement& x, const WeylElement& w) const;

  /// Canonical description used as a cache key.
  const std::string& key() const { return d_->key; }
  bool is_positive(const Weight& root) const;

 private:
  struct Data {
    int rank = 0;
    std::vector<Rational> height;  // functional positive on ambient positive roots
    std::vector<Weight> positive;
    std::vector<Weight> simple;
    std::vector<WeylElement> gens;
    std::string key;
    mutable std::once_flag once;
    mutable std::vector<WeylElement> elements;
    mutable std::vector<int> lengths;
    mutable std::vector<std::pair<WeylElement, int>> index;  // sorted
  };
  std::shared_ptr<Data> d_;
  void enumerate() const;
};

/// w . lambda = w(lambda + rho_0) - rho_0.
Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

/// <lambda + rho_0, beta^vee>.
Rational shifted_pairing(const RootSystem& rs, const Weight& lambda, const Weight& beta);

/// Reflections of W fixing lambda under the dot action.  The stabiliser of a
/// point in a finite reflection group is generated by the reflections it
/// contains, so this is the whole stabiliser.
WeylSubgroup stabilizer(const RootSystem& rs, const Weight& lambda, const WeylSubgroup& group);

/// Reflections s_beta of W with <lambda + rho_0, beta^vee> integral.
WeylSubgroup integral_weyl_group(const RootSystem& rs, const Weight& lambda);
WeylSubgroup integral_subgroup(const RootSystem& rs, const Weight& lambda, const WeylSubgroup& group);

/// No positive root of the group pairs with lambda + rho_0 to a positive integer.
bool is_antidominant_in(const RootSystem& rs, const Weight& lambda, const WeylSubgroup& group);

/// Levi version: S lists even simple roots (0-based).  Every positive root of
/// the Levi is checked, not only the simple ones.
bool is_antidominant(const RootSystem& rs, const Weight& lambda, const std::vector<int>& S);

/// The antidominant weight in the orbit of lambda under the integral part of
/// `group`, with a minimal length element carrying lambda to it.
std::pair<Weight, WeylElement> antidominant_in(const RootSystem& rs, const Weight& lambda,
                                               const WeylSubgroup& group);
std::pair<Weight, WeylElement> antidominant_representative(const RootSystem& rs, const Weight& lambda,
                                                           const std::vector<int>& S);

/// Dot orbit, sorted and without repeats.
std::vector<Weight> orbit(const RootSystem& rs, const WeylSubgroup& group, const Weight& lambda);
bool in_orbit(const RootSystem& rs, const WeylSubgroup& group, const Weight& lambda, const Weight& mu);

/// mu <= lambda: lambda - mu is a nonnegative integer combination of the
/// simple roots of the (super) positive system.
bool leq_weights(const RootSystem& rs, const Weight& mu, const Weight& lambda);

/// "s1 s3 s2" (1-based generator labels); "e" for the identity.
std::string word_string(const std::vector<int>& word);
/// Accepts "s1s3s2", "s1 s3 s2", "1,3,2" or "e"; returns 0-based indices.
std::vector<int> parse_word(const std::string& text);

}  // namespace whitt
