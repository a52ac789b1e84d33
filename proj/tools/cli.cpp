#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "verify/criteria.hpp"
#include "whitt/whittaker_vectors.hpp"

namespace whitt::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

int to_int(const std::string& s, const std::string& field) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(field + ": '" + s + "' is not an integer");
  }
}

struct Unsupported {};

}  // namespace

AlgebraKind parse_algebra(const std::string& text) {
  auto parts = split(text, ',');
  bool even = !parts.empty() && parts.back() == "even";
  if (even) parts.pop_back();
  if (parts.empty()) throw std::invalid_argument("--algebra: empty");
  AlgebraKind a;
  if (parts[0] == "gl" && parts.size() == 3)
    a = AlgebraKind::gl(to_int(parts[1], "--algebra"), to_int(parts[2], "--algebra"));
  else if (parts[0] == "osp" && parts.size() == 2)
    a = AlgebraKind::osp(to_int(parts[1], "--algebra"));
  else if (parts[0] == "pe" && parts.size() == 2)
    a = AlgebraKind::pe(to_int(parts[1], "--algebra"));
  else
    throw std::invalid_argument("--algebra: expected gl,m,n | osp,n | pe,n, got '" + text + "'");
  build_algebra(a);  // validates the ranks
  return even ? a.even() : a;
}

std::map<int, Rational> parse_zeta(const std::string& text) {
  std::map<int, Rational> values;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--zeta: expected index:value, got '" + item + "'");
    int idx = to_int(item.substr(0, colon), "--zeta");
    try {
      values[idx] = parse_rational(item.substr(colon + 1));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("--zeta: bad value in '" + item + "'");
    }
  }
  return values;
}

Json to_json(const QueryRequest& r) {
  Json j;
  j["subcommand"] = r.subcommand;
  if (r.algebra) j["algebra"] = whitt::to_json(*r.algebra);
  if (r.lambda) j["lambda"] = whitt::to_json(*r.lambda);
  if (r.mu) j["mu"] = whitt::to_json(*r.mu);
  if (r.zeta) j["zeta"] = whitt::to_json(*r.zeta);
  if (!r.group.empty()) j["group"] = r.group;
  if (!r.x.empty()) j["x"] = r.x;
  if (!r.w.empty()) j["w"] = r.w;
  if (r.subcommand == "whvec") j["scope"] = r.scope;
  if (r.criterion) j["criterion"] = r.criterion;
  j["format"] = r.format;
  j["strict"] = r.strict;
  return j;
}

QueryRequest request_from_json(const Json& j) {
  QueryRequest r;
  r.subcommand = j.at("subcommand").get<std::string>();
  if (j.contains("algebra")) r.algebra = algebra_from_json(j["algebra"]);
  if (j.contains("lambda")) r.lambda = weight_from_json(*r.algebra, j["lambda"]);
  if (j.contains("mu")) r.mu = weight_from_json(*r.algebra, j["mu"]);
  if (j.contains("zeta")) r.zeta = character_from_json(*r.algebra, j["zeta"]);
  r.group = j.value("group", "");
  r.x = j.value("x", "");
  r.w = j.value("w", "");
  r.scope = j.value("scope", "even");
  r.criterion = j.value("criterion", 0);
  r.format = j.at("format").get<std::string>();
  r.strict = j.at("strict").get<bool>();
  return r;
}

namespace {

struct Raw {
  std::string algebra, lambda, mu, zeta;
};

RootSystem need_algebra(const QueryRequest& r) {
  if (!r.algebra) throw std::invalid_argument("--algebra is required");
  return build_algebra(*r.algebra);
}

const Weight& need_lambda(const QueryRequest& r) {
  if (!r.lambda) throw std::invalid_argument("--lambda is required");
  return *r.lambda;
}

WhittakerParam param_of(const QueryRequest& r) {
  return {need_lambda(r), r.zeta ? *r.zeta : WhittakerCharacter{*r.algebra, {}}};
}

Json result_json(const QueryRequest& r) {
  Json j;
  j["request"] = to_json(r);
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json weights_json(const std::vector<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(whitt::to_json(w));
  return a;
}

int cmd_orbit(const QueryRequest& r, std::ostream& out) {
  auto rs = need_algebra(r);
  auto p = param_of(r);
  auto orb = orbit(rs, zeta_group(rs, p.zeta), p.lambda);
  Json j = result_json(r);
  j["orbit"] = weights_json(orb);
  j["canonical"] = whitt::to_json(canonical_representative(rs, p.zeta, p.lambda));
  j["status"] = "ok";
  emit(out, j);
  return kOk;
}

int cmd_typical(const QueryRequest& r, std::ostream& out) {
  auto rs = need_algebra(r);
  Json j = result_json(r);
  j["typical"] = is_typical(rs, need_lambda(r));
  if (rs.algebra.series != Series::PE) j["atypical_roots"] = weights_json(atypical_roots(rs, *r.lambda));
  j["status"] = "ok";
  emit(out, j);
  return kOk;
}

int cmd_simple(const QueryRequest& r, std::ostream& out) {
  auto rs = need_algebra(r);
  auto res = is_standard_simple(rs, param_of(r));
  Json j = result_json(r);
  j["simple"] = res ? Json(*res) : Json(nullptr);
  j["status"] = res ? "ok" : "unsupported";
  emit(out, j);
  if (!res) throw Unsupported{};
  return kOk;
}

int cmd_mult(const QueryRequest& r, std::ostream& out) {
  auto rs = need_algebra(r);
  auto p = param_of(r);
  Json j = result_json(r);
  bool ok;
  if (r.mu) {
    auto m = whittaker_multiplicity(rs, p, *r.mu);
    j["multiplicity"] = m ? Json(m->get_str()) : Json(nullptr);
    j["status"] = m ? "ok" : "unsupported";
    ok = m.has_value();
  } else {
    auto cs = composition_series(rs, p);
    Json body = composition_json(p, cs);
    for (const auto& [k, v] : body.items()) j[k] = v;
    j["length"] = cs ? Json(cs->length().get_str()) : Json(nullptr);
    ok = cs.has_value();
  }
  emit(out, j);
  if (!ok) throw Unsupported{};
  return kOk;
}

int cmd_kl(const QueryRequest& r, std::ostream& out) {
  if (r.group.empty()) {
    // Decomposition matrix of the integral block of lambda.
    auto rs = need_algebra(r);
    auto m = decomposition_matrix(make_block(rs, need_lambda(r)));
    if (r.format == "csv") {
      out << decomposition_csv(m);
      return kOk;
    }
    Json j = result_json(r);
    j["weights"] = weights_json(m.weights);
    j["entries"] = Json::array();
    for (const auto& row : m.entries) {
      Json a = Json::array();
      for (const auto& e : row) a.push_back(e.get_str());
      j["entries"].push_back(a);
    }
    j["status"] = "ok";
    emit(out, j);
    return kOk;
  }
  auto rs = even_root_system_for_group(r.group);
  auto table = kl_table(WeylSubgroup::full(rs));
  const auto& g = table->group();
  if (r.x.empty() != r.w.empty()) throw std::invalid_argument("--x and --w go together");
  if (r.x.empty()) {
    if (r.format == "csv") {
      out << kl_csv(*table);
      return kOk;
    }
    Json j = result_json(r);
    j["cells"] = Json::array();
    for (int x = 0; x < table->size(); ++x)
      for (int w = 0; w < table->size(); ++w)
        if (!table->P(x, w).is_zero())
          j["cells"].push_back({{"x", word_string(g.reduced_word(g.elements()[x]))},
                                {"w", word_string(g.reduced_word(g.elements()[w]))},
                                {"P", table->P(x, w).str()}});
    j["status"] = "ok";
    emit(out, j);
    return kOk;
  }
  auto x = g.from_word(parse_word(r.x));
  auto w = g.from_word(parse_word(r.w));
  const auto& poly = table->P(x, w);
  if (r.format == "text") {
    out << poly.str() << '\n';
    return kOk;
  }
  Json j = result_json(r);
  j["P"] = poly.str();
  j["mu"] = table->mu(g.index_of(x), g.index_of(w)).get_str();
  j["status"] = "ok";
  emit(out, j);
  return kOk;
}

int cmd_whvec(const QueryRequest& r, std::ostream& out) {
  if (!r.algebra) throw std::invalid_argument("--algebra is required");
  ModelKind kind;
  if (*r.algebra == AlgebraKind::gl(1, 2)) kind = ModelKind::GL12;
  else if (*r.algebra == AlgebraKind::pe(2)) kind = ModelKind::PE2;
  else throw std::invalid_argument("--algebra: whvec supports gl,1,2 and pe,2 only");
  if (r.scope != "even" && r.scope != "full") throw std::invalid_argument("--scope: expected even or full");

  Rational a = 1;
  if (r.zeta) {
    if (!r.zeta->values.count(1)) throw std::invalid_argument("--zeta: whvec needs a regular character (1:a, a != 0)");
    a = r.zeta->values.at(1);
  }
  PbwEngine engine(kind);
  const ActionModel& sym = engine.solver().model();
  WhittakerSpace space;
  ActionModel shown = sym;
  if (r.lambda) {
    ParamValues values = engine.params(*r.lambda, a);
    shown = specialize(sym, values);
    space = r.scope == "even" ? whittaker_vectors(shown, Scope::EvenNilradical) : engine.solver().full_space(values);
  } else {
    if (r.scope == "full") throw std::invalid_argument("--lambda is required for --scope full");
    space = engine.solver().even_space();
  }
  Json j = result_json(r);
  j["dimension"] = space.dim();
  j["basis"] = Json::array();
  for (std::size_t i = 0; i < space.basis.size(); ++i)
    j["basis"].push_back({{"element", shown.element_string(space.basis[i])}, {"parity", space.parity[i]}});
  j["stable"] = space.stable;
  j["status"] = "ok";
  if (r.format == "text") {
    for (const auto& b : j["basis"]) out << b["element"].get<std::string>() << '\n';
    out << "# json\n";
  }
  emit(out, j);
  return kOk;
}

int cmd_verify(const QueryRequest& r, std::ostream& out) {
  std::vector<verify::Result> results;
  if (r.criterion) {
    if (r.criterion < 1 || r.criterion > verify::kCriteriaCount)
      throw std::invalid_argument("--criterion: expected 1.." + std::to_string(verify::kCriteriaCount));
    results.push_back(verify::run_criterion(r.criterion));
  } else {
    results = verify::run_all();
  }
  Json j = result_json(r);
  j["results"] = Json::array();
  bool all = true;
  for (const auto& c : results) {
    all = all && c.pass;
    j["results"].push_back({{"criterion", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["all_pass"] = all;
  j["status"] = "ok";
  emit(out, j);
  return all ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Whittaker module multiplicities for type I Lie superalgebras", "whitt"};
  app.require_subcommand(1);
  QueryRequest req;
  Raw raw;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", raw.algebra, "gl,m,n | osp,n | pe,n [,even]");
    sub->add_option("--lambda", raw.lambda, "comma separated rationals");
    sub->add_option("--zeta", raw.zeta, "index:value[,index:value...], 1-based even simple roots");
    sub->add_option("--format", req.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--strict", req.strict, "exit 2 when the answer is unsupported");
  };
  auto* orbit_cmd = app.add_subcommand("orbit", "W_zeta dot orbit of lambda");
  auto* typical_cmd = app.add_subcommand("typical", "typicality of lambda");
  auto* simple_cmd = app.add_subcommand("simple", "is the standard Whittaker module simple");
  auto* mult_cmd = app.add_subcommand("mult", "composition series, or one multiplicity with --mu");
  auto* kl_cmd = app.add_subcommand("kl", "KL polynomials (--group) or a block decomposition matrix (--lambda)");
  auto* whvec_cmd = app.add_subcommand("whvec", "Whittaker vectors of the gl(1|2) / pe(2) model");
  auto* verify_cmd = app.add_subcommand("verify", "run the cross-engine acceptance checks");
  for (auto* s : {orbit_cmd, typical_cmd, simple_cmd, mult_cmd, kl_cmd, whvec_cmd, verify_cmd}) add_common(s);
  mult_cmd->add_option("--mu", raw.mu, "target weight");
  kl_cmd->add_option("--group", req.group, "A1..A5, B2, C2, ...");
  kl_cmd->add_option("--x", req.x, "reduced word, e.g. s2");
  kl_cmd->add_option("--w", req.w, "reduced word, e.g. s2s1s3s2");
  whvec_cmd->add_option("--scope", req.scope, "even | full");
  verify_cmd->add_option("--criterion", req.criterion, "run a single check");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    req.subcommand = app.get_subcommands().front()->get_name();
    if (!raw.algebra.empty()) req.algebra = parse_algebra(raw.algebra);
    auto need = [&](const char* field) {
      if (!req.algebra) throw std::invalid_argument(std::string(field) + " needs --algebra");
    };
    auto weight = [&](const std::string& text, const char* field) {
      need(field);
      std::vector<Rational> c;
      try {
        c = parse_rational_list(text);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(field) + ": " + e.what());
      }
      if (static_cast<int>(c.size()) != req.algebra->rank())
        throw std::invalid_argument(std::string(field) + ": " + req.algebra->name() + " needs " +
                                    std::to_string(req.algebra->rank()) + " coordinates");
      return Weight(*req.algebra, std::move(c));
    };
    if (!raw.lambda.empty()) req.lambda = weight(raw.lambda, "--lambda");
    if (!raw.mu.empty()) req.mu = weight(raw.mu, "--mu");
    if (!raw.zeta.empty()) {
      need("--zeta");
      req.zeta = make_character(build_algebra(*req.algebra), parse_zeta(raw.zeta));
    }
    if (req.format == "csv" && req.subcommand != "kl")
      throw std::invalid_argument("--format csv is only available for kl");

    const std::string& s = req.subcommand;
    if (s == "orbit") return cmd_orbit(req, out);
    if (s == "typical") return cmd_typical(req, out);
    if (s == "simple") return cmd_simple(req, out);
    if (s == "mult") return cmd_mult(req, out);
    if (s == "kl") return cmd_kl(req, out);
    if (s == "whvec") return cmd_whvec(req, out);
    return cmd_verify(req, out);
  } catch (const Unsupported&) {
    return req.strict ? kUnsupported : kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace whitt::cli
