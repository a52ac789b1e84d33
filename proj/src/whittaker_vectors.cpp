#include "whitt/whittaker_vectors.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>

namespace whitt {

namespace {

LPoly hpow(int k) { return LPoly::var(kH, k); }

ModuleElement unit_element(std::size_t rank, std::size_t S, int k) {
  ModuleElement v(rank);
  v[S] = hpow(k);
  return v;
}

// Rows: coefficient of h^j in component T of the image under generator x.
Matrix<LPoly> build_system(const ActionModel& m, const std::vector<int>& gens, int bound) {
  const std::size_t n = m.rank();
  const std::size_t cols = n * (bound + 1);
  std::map<std::tuple<int, std::size_t, int>, std::size_t> row_of;
  Matrix<LPoly> rows;
  for (std::size_t S = 0; S < n; ++S)
    for (int k = 0; k <= bound; ++k) {
      const std::size_t col = S * (bound + 1) + k;
      ModuleElement e = unit_element(n, S, k);
      for (int x : gens) {
        ModuleElement img = act(m.action[x], e);
        img[S] -= m.zeta(x) * e[S];
        for (std::size_t T = 0; T < n; ++T) {
          if (img[T].is_zero()) continue;
          const int top = img[T].max_degree(kH);
          for (int j = 0; j <= top; ++j) {
            LPoly c = img[T].coeff_h(j);
            if (c.is_zero()) continue;
            auto key = std::make_tuple(x, T, j);
            auto it = row_of.find(key);
            if (it == row_of.end()) {
              it = row_of.emplace(key, rows.size()).first;
              rows.emplace_back(cols);
            }
            rows[it->second][col] = c;
          }
        }
      }
    }
  return rows;
}

bool all_constant(const Matrix<LPoly>& m) {
  for (const auto& r : m)
    for (const auto& x : r)
      if (!x.is_constant()) return false;
  return true;
}

std::string parity_of(const ModuleElement& v) {
  bool even = false, odd = false;
  for (std::size_t T = 0; T < v.size(); ++T)
    if (!v[T].is_zero()) (std::popcount(T) % 2 ? odd : even) = true;
  return even && odd ? "mixed" : odd ? "odd" : "even";
}

struct Solved {
  std::vector<ModuleElement> basis;
  bool generic_only = false;
};

Solved solve(const ActionModel& m, const std::vector<int>& gens, int bound) {
  Matrix<LPoly> sys = build_system(m, gens, bound);
  const std::size_t n = m.rank();
  const std::size_t cols = n * (bound + 1);
  Solved out;
  auto to_element = [&](auto&& coeff) {
    ModuleElement v(n);
    for (std::size_t col = 0; col < cols; ++col) {
      LPoly c = coeff(col);
      if (!c.is_zero()) v[col / (bound + 1)] += c * hpow(static_cast<int>(col % (bound + 1)));
    }
    return v;
  };
  if (all_constant(sys)) {
    Matrix<Rational> q(sys.size(), std::vector<Rational>(cols));
    for (std::size_t r = 0; r < sys.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) q[r][c] = sys[r][c].constant_term();
    for (const auto& x : nullspace(q, cols)) out.basis.push_back(to_element([&](std::size_t c) { return LPoly(x[c]); }));
    return out;
  }
  out.generic_only = !echelon(sys, cols).unit_pivots;
  for (const auto& x : nullspace(sys, cols)) out.basis.push_back(to_element([&](std::size_t c) { return x[c]; }));
  return out;
}

}  // namespace

WhittakerSpace whittaker_vectors(const ActionModel& m, Scope scope, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
  auto gens = scope == Scope::EvenNilradical ? m.even_nilradical() : m.full_nilradical();
  Solved s = solve(m, gens, degree_bound);
  Solved wider = solve(m, gens, degree_bound + 2);
  WhittakerSpace w;
  w.basis = std::move(s.basis);
  for (const auto& v : w.basis) w.parity.push_back(parity_of(v));
  w.degree_bound = degree_bound;
  w.stable = wider.basis.size() == w.basis.size();
  w.generic_only = s.generic_only || wider.generic_only;
  return w;
}

WhittakerSolver::WhittakerSolver(ActionModel symbolic, int degree_bound) : model_(std::move(symbolic)) {
  even_ = whittaker_vectors(model_, Scope::EvenNilradical, degree_bound);
  if (!even_.stable) throw std::logic_error("n_0 Whittaker space is not stable under degree escalation");
  if (even_.generic_only) throw std::logic_error("n_0 Whittaker space needed a non-unit pivot");
  for (int x : model_.full_nilradical()) {
    if (x == model_.zeta_generator) continue;
    raised_.push_back(images(model_.action[x]));
  }
}

std::vector<ModuleElement> WhittakerSolver::images(const OpMatrix& op) const {
  std::vector<ModuleElement> out;
  for (const auto& v : even_.basis) out.push_back(act(op, v));
  return out;
}

ModuleElement WhittakerSolver::combine(const std::vector<Rational>& coords, const ParamValues& values) const {
  ModuleElement out(model_.rank());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    ModuleElement v = substitute(even_.basis[i], values);
    for (std::size_t T = 0; T < out.size(); ++T) out[T] += v[T] * coords[i];
  }
  return out;
}

std::vector<std::vector<Rational>> WhittakerSolver::full_coordinates(const ParamValues& values) const {
  const std::size_t k = even_.basis.size();
  std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> row_of;
  Matrix<Rational> rows;
  for (std::size_t x = 0; x < raised_.size(); ++x)
    for (std::size_t i = 0; i < k; ++i) {
      ModuleElement img = substitute(raised_[x][i], values);
      for (std::size_t T = 0; T < img.size(); ++T)
        for (const auto& [e, c] : img[T].terms()) {
          for (int v = 1; v < kNumVars; ++v)
            if (e[v] != 0) throw std::invalid_argument("parameter left unsubstituted");
          auto key = std::make_tuple(x, T, e[kH]);
          auto it = row_of.find(key);
          if (it == row_of.end()) {
            it = row_of.emplace(key, rows.size()).first;
            rows.emplace_back(k);
          }
          rows[it->second][i] = c;
        }
    }
  return nullspace(rows, k);
}

WhittakerSpace WhittakerSolver::full_space(const ParamValues& values) const {
  WhittakerSpace w;
  for (const auto& c : full_coordinates(values)) {
    w.basis.push_back(combine(c, values));
    w.parity.push_back(parity_of(w.basis.back()));
  }
  w.degree_bound = even_.degree_bound;
  w.stable = even_.stable;
  return w;
}

std::vector<ModuleElement> gl12_reference_vectors(const ActionModel& m) {
  if (m.kind != ModelKind::GL12) throw std::invalid_argument("gl(1|2) model expected");
  // bit 0 = F21, bit 1 = F31
  ModuleElement v1(4), v2(4), v3(4), v4(4);
  v1[0] = 1;
  v2[1] = 1;
  v3[3] = 1;
  v4[2] = LPoly(2) * m.param(kA);
  v4[1] = hpow(1);
  return {v1, v2, v3, v4};
}

std::optional<SingularVector> singular_vector_gl12(const ParamValues& values) {
  ActionModel m = specialize(realize_gl12(), values);
  auto refs = gl12_reference_vectors(m);
  std::vector<ModuleElement> cand = {refs[1], refs[2], refs[3]};
  std::map<std::tuple<int, std::size_t, int>, std::size_t> row_of;
  Matrix<Rational> rows;
  for (const char* name : {"E12", "E13"}) {
    const int x = m.structure.index(name);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      ModuleElement img = act(m.action[x], cand[i]);
      for (std::size_t T = 0; T < img.size(); ++T)
        for (const auto& [e, c] : img[T].terms()) {
          auto key = std::make_tuple(x, T, e[kH]);
          auto it = row_of.find(key);
          if (it == row_of.end()) {
            it = row_of.emplace(key, rows.size()).first;
            rows.emplace_back(cand.size());
          }
          for (int v = 1; v < kNumVars; ++v)
            if (e[v] != 0) throw std::invalid_argument("parameter left unsubstituted");
          rows[it->second][i] = c;
        }
    }
  }
  auto ns = nullspace(rows, cand.size());
  if (ns.empty()) return std::nullopt;
  if (ns.size() > 1) throw std::logic_error("singular vector space of dimension > 1");
  auto x = ns.front();
  Rational scale = x[0] != 0 ? x[0] : x[2];
  for (auto& c : x) c /= scale;
  SingularVector sv{x[0], x[1], x[2], ModuleElement(4)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t T = 0; T < 4; ++T) sv.w[T] += cand[i][T] * x[i];
  return sv;
}

PbwEngine::PbwEngine(ModelKind kind, int degree_bound)
    : kind_(kind), solver_(kind == ModelKind::GL12 ? realize_gl12() : realize_pe2(), degree_bound) {
  if (kind_ == ModelKind::GL12) {
    const auto& m = solver_.model();
    const auto& s = m.structure;
    e11_ = solver_.images(m.op("E11"));
    trace_ = solver_.images(m.op("E22") + m.op("E33"));
    omega_ = solver_.images(operator_of(m, gl12_casimir(s)));
    z_ = solver_.images(operator_of(m, gl12_center(s)));
  }
}

ParamValues PbwEngine::params(const Weight& lambda, const Rational& a) const {
  return kind_ == ModelKind::GL12 ? gl12_params(lambda, a) : pe2_params(lambda, a);
}

std::size_t PbwEngine::whittaker_dimension(const Weight& lambda, const Rational& a) const {
  return solver_.full_coordinates(params(lambda, a)).size();
}

namespace {

ModuleElement combine_images(const std::vector<ModuleElement>& imgs, const std::vector<Rational>& coords,
                             const ParamValues& values) {
  ModuleElement out(imgs.front().size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    ModuleElement v = substitute(imgs[i], values);
    for (std::size_t T = 0; T < out.size(); ++T) out[T] += v[T] * coords[i];
  }
  return out;
}

// s with image == s * w, or throws.
Rational eigenvalue(const ModuleElement& image, const ModuleElement& w) {
  for (std::size_t T = 0; T < w.size(); ++T) {
    if (w[T].is_zero()) continue;
    const auto& [e, c] = *w[T].terms().rbegin();
    Rational s = image[T].coeff_h(e[kH]).constant_term() / c;
    for (std::size_t U = 0; U < w.size(); ++U)
      if (!(image[U] == w[U] * s)) throw std::logic_error("Whittaker vector is not an eigenvector");
    return s;
  }
  throw std::logic_error("zero Whittaker vector");
}

}  // namespace

std::optional<PbwEngine::Submodule> PbwEngine::submodule(const Weight& lambda, const Rational& a) const {
  if (kind_ != ModelKind::GL12) return std::nullopt;
  ParamValues values = params(lambda, a);
  auto coords = solver_.full_coordinates(values);
  if (coords.size() != 2) return std::nullopt;
  // Combination with no bottom-layer component.
  ModuleElement w0 = solver_.combine(coords[0], values), w1 = solver_.combine(coords[1], values);
  Matrix<Rational> rows;
  const int top = std::max(w0[0].is_zero() ? 0 : w0[0].max_degree(kH), w1[0].is_zero() ? 0 : w1[0].max_degree(kH));
  for (int j = 0; j <= top; ++j) rows.push_back({w0[0].coeff_h(j).constant_term(), w1[0].coeff_h(j).constant_term()});
  auto ns = nullspace(rows, 2);
  if (ns.size() != 1) throw std::logic_error("no unique Whittaker vector off the bottom layer");
  std::vector<Rational> c(coords[0].size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ns[0][0] * coords[0][i] + ns[0][1] * coords[1][i];

  Submodule sub;
  sub.w = solver_.combine(c, values);
  sub.e11 = eigenvalue(combine_images(e11_, c, values), sub.w);
  sub.trace = eigenvalue(combine_images(trace_, c, values), sub.w);
  sub.omega = eigenvalue(combine_images(omega_, c, values), sub.w);
  sub.z = eigenvalue(combine_images(z_, c, values), sub.w);
  // Omega = r(r+2) with r = mu_2 - mu_3.
  auto root = exact_sqrt(sub.omega + 1);
  if (!root) throw std::logic_error("Casimir eigenvalue on w is not of the form r(r+2)");
  Rational r = *root - 1;
  sub.mu = Weight(AlgebraKind::gl(1, 2), {sub.e11, (sub.trace + r) / 2, (sub.trace - r) / 2});
  return sub;
}

std::optional<CompositionSeries> PbwEngine::composition_series(const RootSystem& rs, const WhittakerParam& p) const {
  if (!is_regular(rs, p.zeta) || p.zeta.values.empty()) return std::nullopt;
  const Rational a = p.zeta.values.begin()->second;
  const std::size_t dim = whittaker_dimension(p.lambda, a);
  std::map<Weight, Integer> grouped;
  grouped[canonical_representative(rs, p.zeta, p.lambda)] += 1;
  if (dim == 2) {
    auto sub = submodule(p.lambda, a);
    if (!sub) return std::nullopt;
    grouped[canonical_representative(rs, p.zeta, Weight(rs.algebra, sub->mu.coords))] += 1;
  } else if (dim != 1) {
    return std::nullopt;
  }
  CompositionSeries cs;
  for (const auto& [w, m] : grouped) cs.factors.push_back({w, m});
  return cs;
}

}  // namespace whitt
