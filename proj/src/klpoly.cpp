#include "whitt/klpoly.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace whitt {

IntPoly IntPoly::monomial(Integer c, int degree) {
  IntPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(degree + 1, Integer(0));
  p.coeffs_[degree] = c;
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  out.trim();
  return out;
}

IntPoly IntPoly::shifted(int k) const {
  IntPoly out;
  if (is_zero()) return out;
  out.coeffs_.assign(k, Integer(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

IntPoly IntPoly::truncated(int bound) const {
  IntPoly out = *this;
  if (bound < 0) bound = 0;
  if (static_cast<int>(out.coeffs_.size()) > bound) out.coeffs_.resize(bound);
  out.trim();
  return out;
}

Integer IntPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    Integer a = abs(c);
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

KLTable::KLTable(WeylSubgroup group) : group_(std::move(group)) { build(); }

KLTable::KLTable(WeylSubgroup group, std::vector<IntPoly> cells)
    : group_(std::move(group)), n_(static_cast<int>(group_.size())), cells_(std::move(cells)) {
  if (static_cast<int>(cells_.size()) != n_ * n_) throw std::invalid_argument("KL table of wrong size");
}

const IntPoly& KLTable::P(const WeylElement& x, const WeylElement& w) const {
  int i = group_.index_of(x), j = group_.index_of(w);
  if (i < 0 || j < 0) throw std::invalid_argument("element outside the KL table's group");
  return P(i, j);
}

Integer KLTable::mu(int x, int w) const {
  const auto& len = group_.lengths();
  int d = len[w] - len[x];
  if (d <= 0 || d % 2 == 0) return 0;
  return P(x, w)[(d - 1) / 2];
}

void KLTable::build() {
  const auto& el = group_.elements();
  const auto& len = group_.lengths();
  n_ = static_cast<int>(el.size());
  const int ngens = static_cast<int>(group_.generators().size());

  std::vector<std::vector<int>> rmul(n_, std::vector<int>(ngens));
  std::vector<std::vector<bool>> desc(n_, std::vector<bool>(ngens));
  for (int i = 0; i < n_; ++i)
    for (int s = 0; s < ngens; ++s) {
      rmul[i][s] = group_.index_of(el[i] * group_.generators()[s]);
      desc[i][s] = len[rmul[i][s]] < len[i];
    }
  leq_.assign(n_, std::vector<bool>(n_));
  for (int x = 0; x < n_; ++x)
    for (int w = 0; w < n_; ++w) leq_[x][w] = len[x] <= len[w] && group_.bruhat_leq(el[x], el[w]);

  cells_.assign(static_cast<std::size_t>(n_) * n_, IntPoly());
  // Elements are sorted by length, so every cell P(., v) with l(v) < l(w) is
  // final before column w is started.
  for (int w = 0; w < n_; ++w) {
    if (len[w] == 0) {
      cells_[w * n_ + w] = IntPoly(1);
      continue;
    }
    int s = 0;
    while (!desc[w][s]) ++s;
    const int v = rmul[w][s];
    std::vector<std::pair<int, Integer>> mus;
    for (int z = 0; z < n_; ++z)
      if (z != v && leq_[z][v] && desc[z][s]) {
        Integer m = mu(z, v);
        if (m != 0) mus.emplace_back(z, m);
      }
    for (int x = 0; x < n_; ++x) {
      if (!leq_[x][w]) continue;
      const int c = desc[x][s] ? 1 : 0;
      const int xs = rmul[x][s];
      IntPoly p = P(xs, v).shifted(1 - c) + P(x, v).shifted(c);
      for (const auto& [z, m] : mus) {
        const IntPoly& pxz = P(x, z);
        if (pxz.is_zero()) continue;
        p -= IntPoly::monomial(m, (len[w] - len[z]) / 2) * pxz;
      }
      const int bound = x == w ? 0 : (len[w] - len[x] - 1) / 2;
      if (p[0] != 1 || p.degree() > bound)
        throw std::logic_error("KL invariant violated at a cell: " + p.str());
      for (const auto& coeff : p.coeffs())
        if (coeff < 0) throw std::logic_error("negative KL coefficient: " + p.str());
      cells_[x * n_ + w] = std::move(p);
    }
  }
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

nlohmann::json payload(const KLTable& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& p : t.cells()) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& k : p.coeffs()) c.push_back(k.get_str());
    cells.push_back(std::move(c));
  }
  return {{"key", t.group().key()}, {"n", t.size()}, {"cells", std::move(cells)}};
}

}  // namespace

std::shared_ptr<const KLTable> load_kl_cache(const std::filesystem::path& file, const WeylSubgroup& g) {
  std::ifstream in(file);
  if (!in) return nullptr;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    const nlohmann::json& body = doc.at("payload");
    if (doc.at("checksum").get<std::string>() != hex(fnv1a(body.dump()))) return nullptr;
    if (body.at("key").get<std::string>() != g.key()) return nullptr;
    const int n = body.at("n").get<int>();
    if (n != static_cast<int>(g.size())) return nullptr;
    std::vector<IntPoly> cells;
    for (const auto& c : body.at("cells")) {
      IntPoly p;
      int deg = 0;
      for (const auto& k : c) p += IntPoly::monomial(Integer(k.get<std::string>()), deg++);
      cells.push_back(std::move(p));
    }
    return std::make_shared<KLTable>(g, std::move(cells));
  } catch (const std::exception&) {
    return nullptr;  // corrupt or foreign file: recompute
  }
}

void store_kl_cache(const std::filesystem::path& file, const KLTable& t) {
  nlohmann::json body = payload(t);
  nlohmann::json doc = {{"checksum", hex(fnv1a(body.dump()))}, {"payload", body}};
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
}

std::shared_ptr<const KLTable> kl_table(const WeylSubgroup& group) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const KLTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(group.key());
  if (it != tables.end()) return it->second;

  std::shared_ptr<const KLTable> table;
  std::filesystem::path file;
  if (const char* dir = std::getenv("WHITTAKER_KL_CACHE"); dir && *dir) {
    file = std::filesystem::path(dir) / ("kl_" + hex(fnv1a(group.key())) + ".json");
    table = load_kl_cache(file, group);
  }
  if (!table) {
    auto built = std::make_shared<KLTable>(group);
    if (!file.empty()) store_kl_cache(file, *built);
    table = built;
  }
  tables.emplace(group.key(), table);
  return table;
}

BlockParams make_block(const RootSystem& rs, const Weight& lambda) {
  RootSystem even = rs.algebra.even_part ? rs : build_algebra(rs.algebra.even());
  even.check(lambda);
  WeylSubgroup integral = integral_weyl_group(even, lambda);
  Weight base = antidominant_in(even, lambda, integral).first;
  WeylSubgroup stab = stabilizer(even, base, integral);
  return {std::move(even), std::move(base), std::move(integral), std::move(stab)};
}

namespace {

// Longest element of {w in the integral group : w.base = lambda}, or -1.
int longest_carrier(const BlockParams& b, const Weight& lambda) {
  const auto& el = b.integral.elements();
  for (int i = static_cast<int>(el.size()) - 1; i >= 0; --i)
    if (dot_action(b.rs, el[i], b.base) == lambda) return i;
  return -1;
}

}  // namespace

Integer verma_multiplicity_even(const BlockParams& block, const Weight& lambda, const Weight& mu) {
  int x = longest_carrier(block, lambda);
  if (x < 0) throw std::invalid_argument("weight " + lambda.str() + " is not in the block of " + block.base.str());
  int y = longest_carrier(block, mu);
  if (y < 0) return 0;
  return kl_table(block.integral)->P(y, x).at_one();
}

DecompositionMatrix decomposition_matrix(const BlockParams& block) {
  const auto& el = block.integral.elements();
  const auto& len = block.integral.lengths();
  // weight -> (min length, longest carrier)
  std::map<Weight, std::pair<int, int>> info;
  for (int i = 0; i < static_cast<int>(el.size()); ++i) {
    Weight w = dot_action(block.rs, el[i], block.base);
    auto [it, fresh] = info.emplace(w, std::make_pair(len[i], i));
    if (!fresh) it->second.second = i;
  }
  std::vector<std::pair<std::pair<int, Weight>, int>> order;
  for (const auto& [w, p] : info) order.push_back({{p.first, w}, p.second});
  std::sort(order.begin(), order.end());
  auto table = kl_table(block.integral);
  DecompositionMatrix d;
  for (const auto& o : order) d.weights.push_back(o.first.second);
  const std::size_t n = order.size();
  d.entries.assign(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.entries[i][j] = table->P(order[j].second, order[i].second).at_one();
  return d;
}

RootSystem even_root_system_for_group(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("group label like A3 or B2 expected, got '" + label + "'");
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad group rank in '" + label + "'");
  }
  if (r < 1) throw std::invalid_argument("group rank must be >= 1");
  switch (label[0]) {
    case 'A': return build_algebra(AlgebraKind::gl(r + 1, 1).even());
    case 'B':
    case 'C': return build_algebra(AlgebraKind::osp(r).even());
    default: throw std::invalid_argument("unsupported group type '" + label.substr(0, 1) + "'");
  }
}

}  // namespace whitt
