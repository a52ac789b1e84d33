#include "whitt/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "whitt/linalg.hpp"

namespace whitt {

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.image_.resize(rank);
  for (int i = 0; i < rank; ++i) w.image_[i] = i;
  w.sign_.assign(rank, 1);
  return w;
}

WeylElement WeylElement::reflection(const Weight& beta) {
  const int r = static_cast<int>(beta.size());
  Rational norm = 0;
  for (int i = 0; i < r; ++i) norm += beta[i] * beta[i];
  if (norm == 0) throw std::invalid_argument("reflection in the zero vector");
  WeylElement w;
  w.image_.assign(r, -1);
  w.sign_.assign(r, 0);
  for (int i = 0; i < r; ++i) {
    // s(e_i) = e_i - (2 beta_i / |beta|^2) beta
    Rational k = 2 * beta[i] / norm;
    int found = -1, sign = 0;
    for (int j = 0; j < r; ++j) {
      Rational c = (i == j ? Rational(1) : Rational(0)) - k * beta[j];
      if (c == 0) continue;
      if (found >= 0 || (c != 1 && c != -1))
        throw std::invalid_argument("reflection in " + beta.str() + " is not a signed permutation");
      found = j;
      sign = c > 0 ? 1 : -1;
    }
    w.image_[i] = found;
    w.sign_[i] = sign;
  }
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  WeylElement out;
  const int r = rank();
  out.image_.resize(r);
  out.sign_.resize(r);
  for (int i = 0; i < r; ++i) {
    int j = other.image_[i];
    out.image_[i] = image_[j];
    out.sign_[i] = other.sign_[i] * sign_[j];
  }
  return out;
}

WeylElement WeylElement::inverse() const {
  WeylElement out;
  const int r = rank();
  out.image_.resize(r);
  out.sign_.resize(r);
  for (int i = 0; i < r; ++i) {
    out.image_[image_[i]] = i;
    out.sign_[image_[i]] = sign_[i];
  }
  return out;
}

std::vector<Rational> WeylElement::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[image_[i]] = sign_[i] * v[i];
  return out;
}

Weight WeylElement::apply(const Weight& w) const { return Weight(w.algebra, apply(w.coords)); }

namespace {

std::vector<Rational> height_functional(const RootSystem& rs) {
  const int r = rs.rank();
  std::vector<Rational> h(r);
  if (rs.algebra.series == Series::OSP) {
    for (int k = 1; k < r; ++k) h[k] = r - k;
  } else {
    for (int i = 0; i < r; ++i) h[i] = r - i;
  }
  return h;
}

Rational dot(const std::vector<Rational>& a, const Weight& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight reflect(const Weight& beta, const Weight& v) {
  return v - coroot_pairing(v, beta) * beta;
}

bool contains_pm(const std::vector<Weight>& set, const Weight& w) {
  Weight neg = -w;
  for (const auto& x : set)
    if (x.coords == w.coords || x.coords == neg.coords) return true;
  return false;
}

}  // namespace

WeylSubgroup::WeylSubgroup(const RootSystem& rs, std::vector<Weight> positive_roots)
    : d_(std::make_shared<Data>()) {
  d_->rank = rs.rank();
  d_->height = height_functional(rs);
  for (auto& b : positive_roots) {
    if (dot(d_->height, b) <= 0) throw std::invalid_argument("root " + b.str() + " is not positive");
    b.algebra = rs.algebra;
  }
  for (const auto& b : positive_roots)
    for (const auto& g : positive_roots)
      if (!contains_pm(positive_roots, reflect(b, g)))
        throw std::invalid_argument("root set is not closed under its reflections");
  d_->positive = std::move(positive_roots);

  // beta is simple iff s_beta makes no other positive root negative.
  for (const auto& b : d_->positive) {
    bool simple = true;
    for (const auto& g : d_->positive) {
      if (g.coords == b.coords) continue;
      if (dot(d_->height, reflect(b, g)) < 0) {
        simple = false;
        break;
      }
    }
    if (simple) {
      d_->simple.push_back(b);
      d_->gens.push_back(WeylElement::reflection(b));
    }
  }

  std::ostringstream key;
  key << rs.algebra.super().name() << ':';
  for (const auto& b : d_->positive) key << b;
  d_->key = key.str();
}

WeylSubgroup WeylSubgroup::full(const RootSystem& rs) {
  std::vector<Weight> pos;
  for (const auto& r : rs.positive_even) pos.push_back(r.weight);
  return WeylSubgroup(rs, pos);
}

WeylSubgroup WeylSubgroup::levi(const RootSystem& rs, const std::vector<int>& simple_indices) {
  std::vector<Weight> roots;
  for (int i : simple_indices) {
    if (i < 0 || i >= static_cast<int>(rs.simple_roots_even.size()))
      throw std::invalid_argument("even simple root index " + std::to_string(i + 1) + " out of range");
    roots.push_back(rs.simple_roots_even[i].weight);
  }
  return generated_by(rs, roots);
}

WeylSubgroup WeylSubgroup::generated_by(const RootSystem& rs, const std::vector<Weight>& roots) {
  std::vector<Weight> closure;
  for (const auto& r : roots)
    if (!contains_pm(closure, r)) closure.push_back(r);
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = closure.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Weight g = reflect(closure[i], closure[j]);
        if (!contains_pm(closure, g)) {
          closure.push_back(g);
          grew = true;
        }
      }
  }
  std::vector<Weight> pos;
  for (const auto& r : rs.positive_even)
    if (contains_pm(closure, r.weight)) pos.push_back(r.weight);
  return WeylSubgroup(rs, pos);
}

void WeylSubgroup::enumerate() const {
  std::call_once(d_->once, [this] {
    auto& el = d_->elements;
    auto& len = d_->lengths;
    std::map<WeylElement, int> seen;
    WeylElement e = WeylElement::identity(d_->rank);
    el.push_back(e);
    len.push_back(0);
    seen.emplace(e, 0);
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (const auto& s : d_->gens) {
        WeylElement ws = el[i] * s;
        if (seen.count(ws)) continue;
        seen.emplace(ws, static_cast<int>(el.size()));
        el.push_back(ws);
        len.push_back(len[i] + 1);
      }
    }
    d_->index.assign(seen.begin(), seen.end());
  });
}

const std::vector<WeylElement>& WeylSubgroup::elements() const {
  enumerate();
  return d_->elements;
}

const std::vector<int>& WeylSubgroup::lengths() const {
  enumerate();
  return d_->lengths;
}

int WeylSubgroup::index_of(const WeylElement& w) const {
  enumerate();
  const auto& idx = d_->index;
  auto it = std::lower_bound(idx.begin(), idx.end(), w,
                             [](const auto& p, const WeylElement& x) { return p.first < x; });
  if (it == idx.end() || !(it->first == w)) return -1;
  return it->second;
}

int WeylSubgroup::length(const WeylElement& w) const {
  int n = 0;
  for (const auto& b : d_->positive)
    if (dot(d_->height, w.apply(b)) < 0) ++n;
  return n;
}

bool WeylSubgroup::is_positive(const Weight& root) const { return dot(d_->height, root) > 0; }

bool WeylSubgroup::is_right_descent(const WeylElement& w, int s) const {
  return dot(d_->height, w.apply(d_->simple[s])) < 0;
}

std::vector<int> WeylSubgroup::reduced_word(const WeylElement& w) const {
  std::vector<int> word;
  WeylElement x = w;
  const WeylElement e = WeylElement::identity(d_->rank);
  while (!(x == e)) {
    int s = 0;
    while (s < static_cast<int>(d_->gens.size()) && !is_right_descent(x, s)) ++s;
    if (s == static_cast<int>(d_->gens.size()))
      throw std::invalid_argument("element is not in this subgroup");
    word.push_back(s);
    x = x * d_->gens[s];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement WeylSubgroup::from_word(const std::vector<int>& word) const {
  WeylElement w = WeylElement::identity(d_->rank);
  for (int s : word) {
    if (s < 0 || s >= static_cast<int>(d_->gens.size()))
      throw std::invalid_argument("generator s" + std::to_string(s + 1) + " out of range");
    w = w * d_->gens[s];
  }
  return w;
}

WeylElement WeylSubgroup::longest() const { return elements().back(); }

bool WeylSubgroup::bruhat_leq(const WeylElement& x0, const WeylElement& w0) const {
  WeylElement x = x0, w = w0;
  const WeylElement e = WeylElement::identity(d_->rank);
  // If s is a right descent of w: x <= w iff min(x, xs) <= ws.
  while (true) {
    if (w == e) return x == e;
    if (length(x) > length(w)) return false;
    int s = 0;
    while (!is_right_descent(w, s)) ++s;
    if (is_right_descent(x, s)) x = x * d_->gens[s];
    w = w * d_->gens[s];
  }
}

Rational shifted_pairing(const RootSystem& rs, const Weight& lambda, const Weight& beta) {
  return coroot_pairing(lambda + rs.rho_even, beta);
}

Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  rs.check(lambda);
  if (w.rank() != rs.rank()) throw std::invalid_argument("Weyl element of the wrong rank");
  return w.apply(lambda + rs.rho_even) - rs.rho_even;
}

WeylSubgroup stabilizer(const RootSystem& rs, const Weight& lambda, const WeylSubgroup& group) {
  std::vector<Weight> roots;
  for (const auto& b : group.positive_roots())
    if (shifted_pairing(rs, lambda, b) == 0) roots.push_back(b);
  return WeylSubgroup(rs, roots);
}

WeylSubgroup integral_subgroup(const RootSystem& rs, const Weight& lambda, const WeylSubgroup& group) {
  std::vector<Weight> roots;
  for (const auto& b : group.positive_roots())
    if (is_integer(shifted_pairing(rs, lambda, b))) roots.push_back(b);
  return WeylSubgroup(rs, roots);
}

WeylSubgroup integral_weyl_group(const RootSystem& rs, const Weight& lambda) {
  return integral_subgroup(rs, lambda, WeylSubgroup::full(rs));
}

bool is_antidominant_in(const RootSystem& rs, const Weight& lambda, const WeylSubgroup& group) {
  for (const auto& b : group.positive_roots()) {
    Rational p = shifted_pairing(rs, lambda, b);
    if (is_integer(p) && p > 0) return false;
  }
  return true;
}

bool is_antidominant(const RootSystem& rs, const Weight& lambda, const std::vector<int>& S) {
  if (S.empty()) return true;
  return is_antidominant_in(rs, lambda, WeylSubgroup::levi(rs, S));
}

std::pair<Weight, WeylElement> antidominant_in(const RootSystem& rs, const Weight& lambda,
                                               const WeylSubgroup& group) {
  WeylSubgroup integral = integral_subgroup(rs, lambda, group);
  Weight nu = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& b : integral.positive_roots()) {
      Rational p = shifted_pairing(rs, nu, b);
      if (p > 0) {
        nu = dot_action(rs, WeylElement::reflection(b), nu);
        moved = true;
      }
    }
  }
  for (const auto& w : integral.elements())
    if (dot_action(rs, w, lambda) == nu) return {nu, w};
  throw std::logic_error("antidominant weight not reached from " + lambda.str());
}

std::pair<Weight, WeylElement> antidominant_representative(const RootSystem& rs, const Weight& lambda,
                                                           const std::vector<int>& S) {
  return antidominant_in(rs, lambda, WeylSubgroup::levi(rs, S));
}

std::vector<Weight> orbit(const RootSystem& rs, const WeylSubgroup& group, const Weight& lambda) {
  std::vector<Weight> out;
  for (const auto& w : group.elements()) out.push_back(dot_action(rs, w, lambda));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_orbit(const RootSystem& rs, const WeylSubgroup& group, const Weight& lambda, const Weight& mu) {
  for (const auto& w : group.elements())
    if (dot_action(rs, w, lambda) == mu) return true;
  return false;
}

bool leq_weights(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  rs.check(mu);
  rs.check(lambda);
  Weight diff = lambda - mu;
  const std::size_t k = rs.simple_roots.size();
  Matrix<Rational> m(rs.rank(), std::vector<Rational>(k + 1));
  for (int i = 0; i < rs.rank(); ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = rs.simple_roots[j].weight[i];
    m[i][k] = diff[i];
  }
  auto e = echelon(m, k + 1);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivot_cols[r] == k) return false;
    const Rational& c = e.rows[r][k];
    if (!is_integer(c) || c < 0) return false;
  }
  return true;
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += "s" + std::to_string(word[i] + 1);
  }
  return out;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == 's' || text[i] == '*')) ++i;
  };
  if (text == "e" || text.empty()) return word;
  skip();
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad Weyl word '" + text + "'");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    if (v < 1) throw std::invalid_argument("generator index must be >= 1 in '" + text + "'");
    word.push_back(v - 1);
    skip();
  }
  return word;
}

}  // namespace whitt
