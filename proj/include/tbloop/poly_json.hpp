// JSON encoding of exact values: a field element is four "a/b" strings on the
// fixed power basis; a Laurent polynomial is a list of (exponent-vector,
// coefficient) records with exponent vectors keyed by variable name. The
// round-trip is bit-exact.

#pragma once

#include <json.hpp>

#include "tbloop/ratfn.hpp"

namespace tbloop {

using nlohmann::json;

inline json cyclo_to_json(const Cyclo& c) {
  json a = json::array();
  for (int k = 0; k < 4; ++k) a.push_back(c.c[k].get_str());
  return a;
}

inline Cyclo cyclo_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("cyclo_from_json: expect 4 strings");
  Cyclo c;
  for (int k = 0; k < 4; ++k) {
    c.c[k] = Rat(j[k].get<std::string>());
    c.c[k].canonicalize();
  }
  return c;
}

inline json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (auto& [m, c] : p.terms) {
    json exps = json::object();
    for (auto& [v, k] : m.e) exps[VarPool::name(v)] = k;
    terms.push_back(json{{"exp", exps}, {"coeff", cyclo_to_json(c)}});
  }
  return json{{"type", "laurent"}, {"terms", terms}};
}

inline Poly poly_from_json(const json& j) {
  Poly p;
  for (auto& t : j.at("terms")) {
    Monomial m;
    std::vector<std::pair<VarId, int>> e;
    for (auto& [name, k] : t.at("exp").items()) e.push_back({var(name), k.get<int>()});
    std::sort(e.begin(), e.end());
    m.e = std::move(e);
    p.add_term(m, cyclo_from_json(t.at("coeff")));
  }
  return p;
}

inline json ratfn_to_json(const RationalFn& f) {
  return json{{"type", "ratio"}, {"num", poly_to_json(f.num)}, {"den", poly_to_json(f.den)}};
}

inline RationalFn ratfn_from_json(const json& j) {
  return RationalFn(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace tbloop
