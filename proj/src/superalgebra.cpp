#include "whitt/superalgebra.hpp"

#include <map>
#include <stdexcept>

namespace whitt {

namespace {

using Mat = Matrix<Rational>;

Mat zeros(std::size_t n) { return Mat(n, std::vector<Rational>(n)); }

Mat mul(const Mat& x, const Mat& y) {
  const std::size_t n = x.size();
  Mat out = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

// Add (k, c) into a combo, dropping zeros.
void accumulate(GenCombo& combo, int k, const Rational& c) {
  for (auto it = combo.begin(); it != combo.end(); ++it)
    if (it->first == k) {
      it->second += c;
      if (it->second == 0) combo.erase(it);
      return;
    }
  if (c != 0) combo.emplace_back(k, c);
}

int sign(bool a, bool b) { return a && b ? -1 : 1; }

}  // namespace

SuperStructure SuperStructure::from_matrices(std::vector<Generator> gens, const std::vector<Mat>& mats,
                                             const std::vector<bool>& odd_index) {
  const std::size_t n = odd_index.size();
  const std::size_t g = gens.size();
  if (mats.size() != g) throw std::invalid_argument("one matrix per generator expected");
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (mats[i][r][c] != 0 && (odd_index[r] != odd_index[c]) != (gens[i].parity == Parity::Odd))
          throw std::invalid_argument("matrix of " + gens[i].name + " has the wrong parity");

  std::vector<std::vector<GenCombo>> table(g, std::vector<GenCombo>(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      Mat xy = mul(mats[i], mats[j]), yx = mul(mats[j], mats[i]);
      int s = sign(gens[i].parity == Parity::Odd, gens[j].parity == Parity::Odd);
      // Solve bracket = sum_k c_k mats[k] over the n*n entries.
      Mat sys(n * n, std::vector<Rational>(g + 1));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          auto& row = sys[r * n + c];
          for (std::size_t k = 0; k < g; ++k) row[k] = mats[k][r][c];
          row[g] = xy[r][c] - s * yx[r][c];
        }
      auto e = echelon(sys, g + 1);
      if (e.pivot_cols.size() != g && (e.pivot_cols.empty() || e.pivot_cols.back() != g))
        throw std::invalid_argument("generator matrices are linearly dependent");
      for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivot_cols[r] == g)
          throw std::invalid_argument("[" + gens[i].name + "," + gens[j].name + "] leaves the span");
        accumulate(table[i][j], static_cast<int>(e.pivot_cols[r]), e.rows[r][g]);
      }
    }
  return from_table(std::move(gens), std::move(table), true);
}

SuperStructure SuperStructure::from_table(std::vector<Generator> gens, std::vector<std::vector<GenCombo>> table,
                                          bool verify) {
  SuperStructure s;
  s.gens_ = std::move(gens);
  s.table_ = std::move(table);
  if (verify) {
    if (!s.check_antisymmetry()) throw std::invalid_argument("bracket table is not super-antisymmetric");
    if (!s.check_jacobi()) throw std::invalid_argument("bracket table violates the super Jacobi identity");
  }
  return s;
}

int SuperStructure::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  throw std::invalid_argument("no generator named " + name);
}

bool SuperStructure::check_antisymmetry() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      // [x,y] = -(-1)^{|x||y|} [y,x]
      int s = -sign(odd(i), odd(j));
      std::map<int, Rational> diff;
      for (const auto& [k, c] : table_[i][j]) diff[k] += c;
      for (const auto& [k, c] : table_[j][i]) diff[k] -= s * c;
      for (const auto& [k, c] : diff)
        if (c != 0) return false;
    }
  return true;
}

bool SuperStructure::check_jacobi() const {
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  auto br = [&](int a, const GenCombo& combo, bool left) {
    std::map<int, Rational> out;
    for (const auto& [k, c] : combo)
      for (const auto& [m, d] : left ? table_[a][k] : table_[k][a]) out[m] += c * d;
    return out;
  };
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto lhs = br(x, table_[y][z], true);
        auto t1 = br(z, table_[x][y], false);
        auto t2 = br(y, table_[x][z], true);
        int s = sign(odd(x), odd(y));
        for (const auto& [k, c] : t1) lhs[k] -= c;
        for (const auto& [k, c] : t2) lhs[k] -= s * c;
        for (const auto& [k, c] : lhs)
          if (c != 0) return false;
      }
  return true;
}

namespace {

Mat unit(std::size_t n, std::initializer_list<std::tuple<int, int, int>> entries) {
  Mat m = zeros(n);
  for (auto [r, c, v] : entries) m[r - 1][c - 1] += v;
  return m;
}

}  // namespace

SuperStructure gl12_structure() {
  const std::size_t n = 3;
  std::vector<Generator> gens = {
      {"F21", Parity::Odd, -1}, {"F31", Parity::Odd, -1}, {"f", Parity::Even, 0},
      {"E11", Parity::Even, 0}, {"E22", Parity::Even, 0}, {"E33", Parity::Even, 0},
      {"e", Parity::Even, 0},   {"E12", Parity::Odd, 1},  {"E13", Parity::Odd, 1},
  };
  std::vector<Mat> mats = {
      unit(n, {{2, 1, 1}}), unit(n, {{3, 1, 1}}), unit(n, {{3, 2, 1}}), unit(n, {{1, 1, 1}}), unit(n, {{2, 2, 1}}),
      unit(n, {{3, 3, 1}}), unit(n, {{2, 3, 1}}), unit(n, {{1, 2, 1}}), unit(n, {{1, 3, 1}}),
  };
  return SuperStructure::from_matrices(std::move(gens), mats, {false, true, true});
}

SuperStructure pe2_structure() {
  const std::size_t n = 4;
  std::vector<Generator> gens = {
      {"Y12", Parity::Odd, -1},  {"f'", Parity::Even, 0}, {"H1", Parity::Even, 0},  {"H2", Parity::Even, 0},
      {"e'", Parity::Even, 0},   {"X11", Parity::Odd, 1}, {"X12", Parity::Odd, 1}, {"X22", Parity::Odd, 1},
  };
  std::vector<Mat> mats = {
      unit(n, {{3, 2, 1}, {4, 1, -1}}), unit(n, {{2, 1, 1}, {3, 4, -1}}), unit(n, {{1, 1, 1}, {3, 3, -1}}),
      unit(n, {{2, 2, 1}, {4, 4, -1}}), unit(n, {{1, 2, 1}, {4, 3, -1}}), unit(n, {{1, 3, 1}}),
      unit(n, {{1, 4, 1}, {2, 3, 1}}),  unit(n, {{2, 4, 1}}),
  };
  return SuperStructure::from_matrices(std::move(gens), mats, {false, false, true, true});
}

}  // namespace whitt
