#include "whitt/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace whitt {

Json to_json(const Weight& w) {
  Json j = Json::array();
  for (const auto& c : w.coords) j.push_back(to_string(c));
  return j;
}

Weight weight_from_json(const AlgebraKind& kind, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array");
  std::vector<Rational> c;
  for (const auto& x : j) {
    if (x.is_string()) c.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) c.push_back(Rational(x.get<long>()));
    else throw std::invalid_argument("weight entries must be strings or integers");
  }
  if (static_cast<int>(c.size()) != kind.rank())
    throw std::invalid_argument("weight has " + std::to_string(c.size()) + " coordinates, " + kind.name() +
                                " needs " + std::to_string(kind.rank()));
  return Weight(kind, std::move(c));
}

Json to_json(const AlgebraKind& kind) {
  Json j;
  switch (kind.series) {
    case Series::GL: j = {{"kind", "gl"}, {"m", kind.m}, {"n", kind.n}}; break;
    case Series::OSP: j = {{"kind", "osp"}, {"n", kind.n}}; break;
    case Series::PE: j = {{"kind", "pe"}, {"n", kind.n}}; break;
  }
  if (kind.even_part) j["even"] = true;
  return j;
}

AlgebraKind algebra_from_json(const Json& j) {
  const std::string k = j.at("kind").get<std::string>();
  AlgebraKind a;
  if (k == "gl") a = AlgebraKind::gl(j.at("m").get<int>(), j.at("n").get<int>());
  else if (k == "osp") a = AlgebraKind::osp(j.at("n").get<int>());
  else if (k == "pe") a = AlgebraKind::pe(j.at("n").get<int>());
  else throw std::invalid_argument("unknown algebra kind '" + k + "'");
  if (j.value("even", false)) a = a.even();
  return a;
}

Json to_json(const WhittakerCharacter& zeta) {
  Json j = Json::object();
  for (const auto& [i, v] : zeta.values) j[std::to_string(i)] = to_string(v);
  return j;
}

WhittakerCharacter character_from_json(const AlgebraKind& kind, const Json& j) {
  std::map<int, Rational> values;
  for (const auto& [k, v] : j.items()) values[std::stoi(k)] = parse_rational(v.get<std::string>());
  return make_character(build_algebra(kind), values);
}

Json composition_json(const WhittakerParam& p, const std::optional<CompositionSeries>& cs) {
  Json j;
  j["lambda"] = to_json(p.lambda);
  j["zeta"] = to_json(p.zeta);
  j["factors"] = Json::array();
  if (cs)
    for (const auto& f : cs->factors) j["factors"].push_back({{"rep", to_json(f.weight)}, {"mult", f.mult.get_str()}});
  j["status"] = cs ? "ok" : "unsupported";
  return j;
}

std::string kl_csv(const KLTable& table) {
  const auto& g = table.group();
  std::ostringstream os;
  os << "x,w,P\n";
  for (int x = 0; x < table.size(); ++x)
    for (int w = 0; w < table.size(); ++w) {
      if (table.P(x, w).is_zero()) continue;
      os << word_string(g.reduced_word(g.elements()[x])) << ',' << word_string(g.reduced_word(g.elements()[w])) << ','
         << table.P(x, w).str() << '\n';
    }
  return os.str();
}

std::string decomposition_csv(const DecompositionMatrix& m) {
  std::ostringstream os;
  auto quoted = [](const Weight& w) { return "\"" + w.str() + "\""; };
  os << "M\\L";
  for (const auto& w : m.weights) os << ',' << quoted(w);
  os << '\n';
  for (std::size_t i = 0; i < m.weights.size(); ++i) {
    os << quoted(m.weights[i]);
    for (const auto& e : m.entries[i]) os << ',' << e.get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace whitt
