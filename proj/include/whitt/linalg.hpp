#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "whitt/rational.hpp"

namespace whitt {

/// Ring hooks for fraction-free elimination.  A field specialisation treats
/// every nonzero element as a unit.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_unit(const Rational& x) { return x != 0; }
  static Rational inverse(const Rational& x) { return 1 / x; }
  static std::size_t weight(const Rational&) { return 1; }
  static void normalize_row(std::vector<Rational>&) {}
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Row echelon data: pivot columns and the reduced rows.  Rows are reduced so
/// that each pivot column has a single nonzero entry.
template <class T>
struct Echelon {
  Matrix<T> rows;
  std::vector<std::size_t> pivot_cols;
  /// False when some pivot had to be used without being a unit; the result is
  /// then valid over the fraction field only.
  bool unit_pivots = true;
};

template <class T>
Echelon<T> echelon(Matrix<T> m, std::size_t cols) {
  using R = RingTraits<T>;
  Echelon<T> out;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < m.size(); ++col) {
    // Prefer unit pivots, then the lightest entry.
    std::size_t best = m.size();
    for (std::size_t r = top; r < m.size(); ++r) {
      if (R::is_zero(m[r][col])) continue;
      if (best == m.size()) {
        best = r;
        continue;
      }
      bool bu = R::is_unit(m[best][col]), ru = R::is_unit(m[r][col]);
      if ((ru && !bu) || (ru == bu && R::weight(m[r][col]) < R::weight(m[best][col]))) best = r;
    }
    if (best == m.size()) continue;
    std::swap(m[top], m[best]);
    auto& prow = m[top];
    if (R::is_unit(prow[col])) {
      T inv = R::inverse(prow[col]);
      for (auto& x : prow) x = x * inv;
    } else {
      out.unit_pivots = false;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == top || R::is_zero(m[r][col])) continue;
      T factor = m[r][col];
      if (R::is_unit(prow[col]) && prow[col] == T(1)) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] - factor * prow[c];
      } else {
        T p = prow[col];
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = p * m[r][c] - factor * prow[c];
      }
      R::normalize_row(m[r]);
    }
    out.pivot_cols.push_back(col);
    ++top;
  }
  m.resize(top);
  out.rows = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m, std::size_t cols) {
  return echelon(m, cols).pivot_cols.size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m, std::size_t cols) {
  using R = RingTraits<T>;
  Echelon<T> e = echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  Matrix<T> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // x_f = prod of pivots, x_{c_r} = -row_r[f] * prod_{s != r} pivots.
    std::vector<T> x(cols, T(0));
    T all(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) all = all * e.rows[r][e.pivot_cols[r]];
    x[f] = all;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (R::is_zero(e.rows[r][f])) continue;
      T others(1);
      for (std::size_t s = 0; s < e.rows.size(); ++s)
        if (s != r) others = others * e.rows[s][e.pivot_cols[s]];
      x[e.pivot_cols[r]] = T(0) - e.rows[r][f] * others;
    }
    R::normalize_row(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace whitt
