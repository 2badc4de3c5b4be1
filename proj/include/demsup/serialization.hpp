#pragma once

// JSON forms of the library values (characters, modular profiles,
// support reports).  Key order is fixed so output is byte-stable.

#include <json.hpp>

#include "demsup/supports.hpp"

namespace demsup {

using Json = nlohmann::ordered_json;

inline Json to_json(const WeightVec& w) { return Json(w.coords); }
inline Json to_json(const RootVec& r) { return Json(r.coeffs); }
inline Json to_json(const SimpleSubset& s) { return Json(s.indices()); }

inline Json character_json(const Character& f) {
  Json terms = Json::array();
  for (const auto& [mu, m] : f.terms()) {  // map order = ascending lex on weights
    Json t;
    t["weight"] = to_json(mu);
    t["mult"] = m;
    terms.push_back(std::move(t));
  }
  Json out;
  out["dimension"] = dimension(f);
  out["terms"] = std::move(terms);
  return out;
}

inline Json profile_json(const ModularProfile& prof) {
  Json phi = Json::array();
  for (const RootVec& alpha : prof.phi) phi.push_back(to_json(alpha));
  Json out;
  out["lambda"] = to_json(prof.lambda);
  out["p"] = prof.p;
  out["phi"] = std::move(phi);
  out["regular"] = prof.regular;
  out["j_lambda"] = to_json(prof.j);
  if (prof.conjugation) {
    out["x"] = to_string(prof.conjugation->x);
    out["I"] = to_json(prof.conjugation->target);
  } else {
    out["x"] = nullptr;
    out["I"] = nullptr;
  }
  return out;
}

}  // namespace demsup
