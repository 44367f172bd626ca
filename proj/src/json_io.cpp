#include "symidx/json_io.hpp"

namespace symidx {

Json to_json(const RestrictedRootSystem& r) {
  Json mult = Json::object();
  // Canonical class order: single, short, long, extra_long.
  for (LengthClass c : {LengthClass::Single, LengthClass::Short, LengthClass::Long,
                        LengthClass::ExtraLong}) {
    auto it = r.multiplicities.find(c);
    if (it != r.multiplicities.end()) mult[length_class_name(c)] = it->second;
  }
  return Json{{"type", root_type_name(r.type)}, {"rank", r.rank},
              {"multiplicities", std::move(mult)}};
}

RestrictedRootSystem root_system_from_json(const Json& j) {
  RestrictedRootSystem r;
  r.type = root_type_from_name(j.at("type").get<std::string>());
  r.rank = j.at("rank").get<int>();
  for (auto it = j.at("multiplicities").begin(); it != j.at("multiplicities").end(); ++it)
    r.multiplicities[length_class_from_name(it.key())] = it.value().get<int>();
  r.validate();
  return r;
}

Json to_json(const SpaceRecord& s) {
  Json j{{"label", s.label},
         {"family", family_name(s.family)},
         {"params", s.params},
         {"dim", s.dim},
         {"rank", s.rank},
         {"dim_isotropy", s.dim_isotropy},
         {"ell", s.ell}};
  if (s.root_system) j["root_system"] = to_json(*s.root_system);
  if (s.reflective_index) j["reflective_index"] = *s.reflective_index;
  if (s.known_index) j["known_index"] = *s.known_index;
  return j;
}

SpaceRecord space_from_json(const Json& j) {
  Family f = family_from_name(j.at("family").get<std::string>());
  SpaceRecord s = instantiate(f, j.at("params").get<std::vector<int>>());
  // The remaining keys must agree with the catalog's own evaluation.
  auto expect = [&](const char* key, int have) {
    if (j.contains(key) && j.at(key).get<int>() != have)
      throw ParseError(std::string("catalog record for ") + s.label +
                       " disagrees with the closed forms at key '" + key + "'");
  };
  expect("dim", s.dim);
  expect("rank", s.rank);
  expect("dim_isotropy", s.dim_isotropy);
  expect("ell", s.ell);
  if (j.contains("label")) s.label = j.at("label").get<std::string>();
  if (j.contains("reflective_index"))
    s.reflective_index = j.at("reflective_index").get<int>();
  if (j.contains("known_index")) s.known_index = j.at("known_index").get<int>();
  return s;
}

Json to_json(const ProductSpace& p) {
  Json factors = Json::array();
  for (const auto& f : p.factors) factors.push_back(f.id);
  return Json{{"factors", std::move(factors)},
              {"euclidean_dim", p.euclidean_dim},
              {"label", p.label()},
              {"dim", p.dim()},
              {"rank", p.rank()},
              {"ell", p.ell()}};
}

ProductSpace product_from_json(const Json& j) {
  std::vector<SpaceRecord> factors;
  for (const auto& f : j.at("factors")) factors.push_back(resolve_space(f.get<std::string>()));
  ProductSpace p = make_product(std::move(factors), j.at("euclidean_dim").get<int>());
  if (j.contains("dim") && j.at("dim").get<int>() != p.dim())
    throw ParseError("product record disagrees with factor dimensions");
  return p;
}

Json to_json(const BoundBreakdown& b) {
  Json j{{"group_index", b.group_index},
         {"dim_m", b.dim_m},
         {"rank_m", b.rank_m},
         {"dim_k", b.dim_k},
         {"omega", b.omega}};
  if (b.lambda) j["lambda"] = *b.lambda;
  j["bound_exact"] = b.bound_exact.str();
  j["bound_int"] = b.bound_int;
  return j;
}

BoundBreakdown bound_from_json(const Json& j) {
  BoundBreakdown b;
  b.group_index = j.at("group_index").get<int>();
  b.dim_m = j.at("dim_m").get<int>();
  b.rank_m = j.at("rank_m").get<int>();
  b.dim_k = j.at("dim_k").get<int>();
  b.omega = j.at("omega").get<int>();
  if (j.contains("lambda")) b.lambda = j.at("lambda").get<int>();
  b.bound_exact = Rational::parse(j.at("bound_exact").get<std::string>());
  b.bound_int = j.at("bound_int").get<int>();
  return b;
}

Json to_json(const Verdict& v) {
  return Json{{"rule", rule_name(v.rule)},
              {"outcome", outcome_name(v.outcome)},
              {"detail", v.detail},
              {"citation", rule_citation(v.rule)}};
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.rule = rule_from_name(j.at("rule").get<std::string>());
  v.outcome = outcome_from_name(j.at("outcome").get<std::string>());
  v.detail = j.at("detail").get<std::string>();
  return v;
}

Json to_json(const Candidate& c) {
  Json verdicts = Json::array();
  for (const auto& v : c.verdicts) verdicts.push_back(to_json(v));
  return Json{{"product", to_json(c.product)},
              {"codim", c.codim},
              {"lambda", c.lambda},
              {"verdicts", std::move(verdicts)}};
}

Candidate candidate_from_json(const Json& j) {
  Candidate c;
  c.product = product_from_json(j.at("product"));
  c.codim = j.at("codim").get<int>();
  c.lambda = j.at("lambda").get<int>();
  for (const auto& v : j.at("verdicts")) c.verdicts.push_back(verdict_from_json(v));
  return c;
}

Json to_json(const PipelineReport& p) {
  Json candidates = Json::array(), survivors = Json::array();
  for (const auto& c : p.candidates) candidates.push_back(to_json(c));
  for (const auto& c : p.survivors) survivors.push_back(to_json(c));
  return Json{{"ambient", to_json(p.ambient)},
              {"window", p.window},
              {"preamble", p.preamble},
              {"candidates", std::move(candidates)},
              {"survivors", std::move(survivors)}};
}

PipelineReport pipeline_from_json(const Json& j) {
  PipelineReport p;
  p.ambient = space_from_json(j.at("ambient"));
  p.window = j.at("window").get<std::vector<int>>();
  p.preamble = j.at("preamble").get<std::vector<std::string>>();
  for (const auto& c : j.at("candidates")) p.candidates.push_back(candidate_from_json(c));
  for (const auto& c : j.at("survivors")) p.survivors.push_back(candidate_from_json(c));
  return p;
}

Json to_json(const Step& s) {
  return Json{{"description", s.description},
              {"citation", s.citation},
              {"payload", s.payload},
              {"pass", s.pass}};
}

Step step_from_json(const Json& j) {
  Step s;
  s.description = j.at("description").get<std::string>();
  s.citation = j.at("citation").get<std::string>();
  s.payload = j.at("payload").get<std::string>();
  s.pass = j.at("pass").get<bool>();
  return s;
}

Json to_json(const TheoremReport& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  return Json{{"theorem", theorem_name(t.id)},
              {"space", t.space},
              {"steps", std::move(steps)},
              {"verdict", t.verdict ? "pass" : "fail"},
              {"claimed_value", t.claimed_value}};
}

TheoremReport theorem_from_json(const Json& j) {
  TheoremReport t;
  t.id = theorem_from_name(j.at("theorem").get<std::string>());
  t.space = j.at("space").get<std::string>();
  for (const auto& s : j.at("steps")) t.steps.push_back(step_from_json(s));
  t.verdict = j.at("verdict").get<std::string>() == "pass";
  t.claimed_value = j.at("claimed_value").get<std::string>();
  return t;
}

Json catalog_to_json(int dim_max) {
  Json arr = Json::array();
  for (const auto& s : scan(1, dim_max)) arr.push_back(to_json(s));
  return arr;
}

std::vector<SpaceRecord> catalog_from_json(const Json& j) {
  std::vector<SpaceRecord> out;
  for (const auto& rec : j) out.push_back(space_from_json(rec));
  return out;
}

}  // namespace symidx
