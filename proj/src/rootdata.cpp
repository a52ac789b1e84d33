#include "whitt/rootdata.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace whitt {

AlgebraKind AlgebraKind::gl(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("gl(m|n) needs m >= 1 and n >= 1");
  return {Series::GL, m, n, false};
}

AlgebraKind AlgebraKind::osp(int n) {
  if (n < 1) throw std::invalid_argument("osp(2|2n) needs n >= 1");
  return {Series::OSP, 0, n, false};
}

AlgebraKind AlgebraKind::pe(int n) {
  if (n < 1) throw std::invalid_argument("pe(n) needs n >= 1");
  return {Series::PE, 0, n, false};
}

AlgebraKind AlgebraKind::even() const {
  AlgebraKind k = *this;
  k.even_part = true;
  return k;
}

AlgebraKind AlgebraKind::super() const {
  AlgebraKind k = *this;
  k.even_part = false;
  return k;
}

int AlgebraKind::rank() const {
  switch (series) {
    case Series::GL: return m + n;
    case Series::OSP: return n + 1;
    case Series::PE: return n;
  }
  return 0;
}

std::string AlgebraKind::name() const {
  std::string base;
  switch (series) {
    case Series::GL: base = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")"; break;
    case Series::OSP: base = "osp(2|" + std::to_string(2 * n) + ")"; break;
    case Series::PE: base = "pe(" + std::to_string(n) + ")"; break;
  }
  return even_part ? "even(" + base + ")" : base;
}

Weight::Weight(AlgebraKind kind, std::vector<Rational> c) : algebra(kind), coords(std::move(c)) {
  if (static_cast<int>(coords.size()) != algebra.rank())
    throw std::invalid_argument("weight of length " + std::to_string(coords.size()) + " for " +
                                algebra.name() + " (rank " + std::to_string(algebra.rank()) + ")");
  for (auto& x : coords) x.canonicalize();
}

bool Weight::same_space(const Weight& other) const {
  return algebra.super() == other.algebra.super() && coords.size() == other.coords.size();
}

Weight& Weight::operator+=(const Weight& other) {
  if (!same_space(other)) throw std::invalid_argument("adding weights of different algebras");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (!same_space(other)) throw std::invalid_argument("subtracting weights of different algebras");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

Weight operator*(const Rational& s, Weight w) {
  for (auto& c : w.coords) c *= s;
  return w;
}

Weight Weight::operator-() const { return Rational(-1) * *this; }

bool Weight::operator==(const Weight& other) const {
  return same_space(other) && coords == other.coords;
}

bool Weight::operator<(const Weight& other) const {
  return std::lexicographical_compare(coords.begin(), coords.end(), other.coords.begin(),
                                      other.coords.end());
}

std::string Weight::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) os << ',';
    os << to_string(w.coords[i]);
  }
  return os << ')';
}

Weight RootSystem::zero() const {
  return Weight(algebra, std::vector<Rational>(rank()));
}

Weight RootSystem::epsilon(int i) const {
  Weight w = zero();
  w.coords.at(i) = 1;
  return w;
}

Weight RootSystem::make(std::vector<Rational> coords) const { return Weight(algebra, std::move(coords)); }

std::vector<Root> RootSystem::odd_roots() const {
  std::vector<Root> out = positive_odd;
  out.insert(out.end(), negative_odd.begin(), negative_odd.end());
  return out;
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positive_even;
  for (const auto& r : positive_even) out.push_back({-r.weight, Parity::Even});
  auto odd = odd_roots();
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

void RootSystem::check(const Weight& w) const {
  if (w.algebra.super() != algebra.super() || static_cast<int>(w.size()) != rank())
    throw std::invalid_argument("weight " + w.str() + " of " + w.algebra.name() +
                                " used with " + algebra.name());
}

namespace {

Weight combo(const AlgebraKind& kind, std::initializer_list<std::pair<int, int>> terms) {
  Weight w(kind, std::vector<Rational>(kind.rank()));
  for (auto [index, coeff] : terms) w.coords[index] += coeff;
  return w;
}

Weight half_sum(const AlgebraKind& kind, const std::vector<Root>& roots) {
  Weight w(kind, std::vector<Rational>(kind.rank()));
  for (const auto& r : roots) w += r.weight;
  return Rational(1, 2) * w;
}

}  // namespace

RootSystem build_algebra(AlgebraKind kind) {
  // Validate through the factories.
  switch (kind.series) {
    case Series::GL: (void)AlgebraKind::gl(kind.m, kind.n); break;
    case Series::OSP: (void)AlgebraKind::osp(kind.n); break;
    case Series::PE: (void)AlgebraKind::pe(kind.n); break;
  }
  RootSystem rs;
  rs.algebra = kind;
  const int r = kind.rank();
  rs.form_signature.assign(r, 1);
  const bool even = kind.even_part;

  switch (kind.series) {
    case Series::GL: {
      const int m = kind.m;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          bool odd = i < m && j >= m;
          Root root{combo(kind, {{i, 1}, {j, -1}}), odd ? Parity::Odd : Parity::Even};
          if (odd) {
            rs.positive_odd.push_back(root);
            rs.negative_odd.push_back({-root.weight, Parity::Odd});
          } else {
            rs.positive_even.push_back(root);
          }
        }
      for (int i = 0; i + 1 < r; ++i) {
        Root root{combo(kind, {{i, 1}, {i + 1, -1}}), i == m - 1 ? Parity::Odd : Parity::Even};
        if (root.parity == Parity::Even) rs.simple_roots_even.push_back(root);
        rs.simple_roots.push_back(root);
      }
      if (!even)
        for (int i = m; i < r; ++i) rs.form_signature[i] = -1;
      break;
    }
    case Series::OSP: {
      const int n = kind.n;
      // coordinate 0 = epsilon, 1..n = delta_k
      for (int k = 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          rs.positive_even.push_back({combo(kind, {{k, 1}, {l, -1}}), Parity::Even});
          rs.positive_even.push_back({combo(kind, {{k, 1}, {l, 1}}), Parity::Even});
        }
        rs.positive_even.push_back({combo(kind, {{k, 2}}), Parity::Even});
      }
      for (int k = 1; k <= n; ++k) {
        for (int sign : {-1, 1}) {
          Root root{combo(kind, {{0, 1}, {k, sign}}), Parity::Odd};
          rs.positive_odd.push_back(root);
          rs.negative_odd.push_back({-root.weight, Parity::Odd});
        }
      }
      rs.simple_roots.push_back({combo(kind, {{0, 1}, {1, -1}}), Parity::Odd});
      for (int k = 1; k < n; ++k) {
        Root root{combo(kind, {{k, 1}, {k + 1, -1}}), Parity::Even};
        rs.simple_roots_even.push_back(root);
        rs.simple_roots.push_back(root);
      }
      rs.simple_roots_even.push_back({combo(kind, {{n, 2}}), Parity::Even});
      rs.simple_roots.push_back(rs.simple_roots_even.back());
      if (!even)
        for (int k = 1; k <= n; ++k) rs.form_signature[k] = -1;
      break;
    }
    case Series::PE: {
      const int n = kind.n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          rs.positive_even.push_back({combo(kind, {{i, 1}, {j, -1}}), Parity::Even});
      // g_1: symmetric block, epsilon_i + epsilon_j with i <= j.
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Weight w = combo(kind, {{i, 1}, {j, 1}});
          rs.positive_odd.push_back({w, Parity::Odd});
        }
      // g_{-1}: antisymmetric block, -epsilon_i - epsilon_j with i < j.
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          rs.negative_odd.push_back({combo(kind, {{i, -1}, {j, -1}}), Parity::Odd});
      for (int i = 0; i + 1 < n; ++i) {
        Root root{combo(kind, {{i, 1}, {i + 1, -1}}), Parity::Even};
        rs.simple_roots_even.push_back(root);
        rs.simple_roots.push_back(root);
      }
      rs.simple_roots.push_back({combo(kind, {{n - 1, 2}}), Parity::Odd});
      break;
    }
  }

  if (even) {
    rs.positive_odd.clear();
    rs.negative_odd.clear();
    rs.simple_roots = rs.simple_roots_even;
  }
  rs.rho_even = half_sum(kind, rs.positive_even);
  rs.rho = rs.rho_even - half_sum(kind, rs.positive_odd);
  return rs;
}

Rational bilinear_form(const RootSystem& rs, const Weight& a, const Weight& b) {
  rs.check(a);
  rs.check(b);
  Rational sum = 0;
  for (int i = 0; i < rs.rank(); ++i) sum += rs.form_signature[i] * a[i] * b[i];
  return sum;
}

Rational coroot_pairing(const Weight& lambda, const Weight& alpha) {
  Rational num = 0, den = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    num += lambda[i] * alpha[i];
    den += alpha[i] * alpha[i];
  }
  return 2 * num / den;
}

bool is_typical(const RootSystem& rs, const Weight& lambda) {
  if (rs.algebra.even_part)
    throw std::invalid_argument("typicality is not defined for the even part " + rs.algebra.name());
  rs.check(lambda);
  if (rs.algebra.series == Series::PE) {
    const int n = rs.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && lambda[i] - lambda[j] + (j - i) - 1 == 0) return false;
    return true;
  }
  Weight shifted = lambda + rs.rho;
  for (const auto& alpha : rs.positive_odd)
    if (bilinear_form(rs, shifted, alpha.weight) == 0) return false;
  return true;
}

}  // namespace whitt
