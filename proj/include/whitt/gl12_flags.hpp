#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "whitt/rootdata.hpp"

// Principal block of gl(2|1) in rho-shifted coordinates (y1, y2 | y3).  Every
// weight of the block is one of
//   A_j = (0, j | -j)   or   B_j = (j, 0 | -j),   j in Z,   A_0 = B_0.
// gl(1|2) weights reach it through the isomorphism X -> -X^{st} followed by
// reversing the index order, after a twist by a multiple of the supertrace.
namespace whitt::gl12 {

enum class Family { A, B };

struct Label {
  Family family = Family::A;
  long j = 0;

  static Label A(long j) { return {Family::A, j}; }
  /// B_0 is stored as A_0.
  static Label B(long j) { return j == 0 ? Label{Family::A, 0} : Label{Family::B, j}; }
  std::array<long, 3> coords() const;
  std::string str() const;
  bool operator==(const Label&) const = default;
  auto operator<=>(const Label&) const = default;
};

/// Verma flag of the projective cover P(label); every multiplicity is 1.
std::vector<Label> projective_flag(const Label& p);

/// Composition factors of M(label), read off the flags by BGG reciprocity
/// [M(y) : L(x)] = (P(x) : M(y)).
std::vector<Label> verma_factors(const Label& y);

/// y1 <= y2, i.e. no positive integral pairing with the even root.
bool is_antidominant(const Label& y);

/// gl(1|2) weight -> gl(2|1) rho-shifted coordinates, and back.
std::array<Rational, 3> to_gl21_shifted(const Weight& lambda);
Weight from_gl21_shifted(const std::array<Rational, 3>& y);

/// Position of an atypical gl(1|2) weight with lambda_2 - lambda_3 integral:
/// the weight equals twist(t) applied to the block weight `label`.
struct Placement {
  Rational t;
  Label label;
};
std::optional<Placement> place(const Weight& lambda);
Weight weight_of(const Placement& p);

}  // namespace whitt::gl12
