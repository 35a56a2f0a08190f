#include "shuffle/json_io.hpp"

#include <algorithm>

namespace shuffle {

Json laurent_to_json(const LaurentMPoly& p) {
  LaurentMPoly q = p.without_unused_vars();
  Json j;
  j["vars"] = q.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : q.terms()) {
    Json t;
    t["exp"] = e;
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentMPoly laurent_from_json(const Json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  LaurentMPoly out;
  for (const auto& t : j.at("terms")) {
    std::vector<int> e = t.at("exp").get<std::vector<int>>();
    if (e.size() != vars.size()) throw SizeMismatch("laurent_from_json: exp length");
    Rational c = Rational::parse(t.at("coeff").get<std::string>());
    std::vector<std::pair<std::string, int>> mono;
    for (size_t i = 0; i < vars.size(); ++i)
      if (e[i] != 0) mono.emplace_back(vars[i], e[i]);
    out += LaurentMPoly::monomial(c, mono);
  }
  return out;
}

Json partition_to_json(const Partition& p) { return Json(p.parts); }

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json composition_to_json(const Composition& c) { return Json(c.parts); }

Composition composition_from_json(const Json& j) {
  return Composition(j.get<std::vector<int>>());
}

Json symfunc_to_json(const SymFunc& f) {
  Json j;
  j["basis"] = basis_name(f.basis);
  Json coeffs = Json::array();
  for (const auto& [lam, c] : f.coeffs) {
    Json e;
    e["partition"] = partition_to_json(lam);
    e["value"] = laurent_to_json(c);
    coeffs.push_back(std::move(e));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

SymFunc symfunc_from_json(const Json& j) {
  SymFunc f(basis_from_name(j.at("basis").get<std::string>()));
  for (const auto& e : j.at("coeffs"))
    f.add(partition_from_json(e.at("partition")), laurent_from_json(e.at("value")));
  return f;
}

Json vk_to_json(const VkElement& v) {
  Json j;
  j["k"] = v.k;
  Json coeffs = Json::array();
  for (const auto& t : vk_terms_schur(v)) {
    Json e;
    e["partition"] = partition_to_json(t.lam);
    e["yexp"] = t.yexp;
    e["value"] = laurent_to_json(t.value);
    coeffs.push_back(std::move(e));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

VkElement vk_from_json(const Json& j) {
  int k = j.at("k").get<int>();
  std::vector<VkTerm> terms;
  for (const auto& e : j.at("coeffs")) {
    VkTerm t;
    t.lam = partition_from_json(e.at("partition"));
    t.yexp = e.at("yexp").get<std::vector<int>>();
    t.value = laurent_from_json(e.at("value"));
    terms.push_back(std::move(t));
  }
  return vk_from_terms_schur(k, terms);
}

Json path_to_json(const DyckPath& p) {
  Json j;
  j["path"] = p.word();
  j["n"] = p.n();
  j["area"] = area(p);
  j["dinv"] = dinv(p);
  j["area_seq"] = area_seq(p);
  j["x_seq"] = coarea_seq(p);
  j["touch"] = composition_to_json(touch(p));
  j["bounce"] = bounce(p);
  j["bounce_seq"] = bounce_seq(p);
  j["touch_prime"] = composition_to_json(touch_prime(p));
  Json cs = Json::array();
  for (const auto& [i, jj] : corners(p)) cs.push_back(Json::array({i, jj}));
  j["corners"] = std::move(cs);
  return j;
}

DyckPath path_from_string(const std::string& s) {
  if (s.empty()) return DyckPath();
  if (s.find_first_not_of("NE") == std::string::npos) return DyckPath::from_word(s);
  // comma-separated area sequence
  std::vector<int> a;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    a.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return DyckPath::from_area_seq(a);
}

}  // namespace shuffle
