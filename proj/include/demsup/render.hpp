#pragma once

// Text and JSON rendering of support queries and the four summary
// tables.  The text layout is frozen: golden-file tests compare it
// byte for byte.

#include "demsup/serialization.hpp"

namespace demsup {

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

struct TableRow {
  std::string w;
  std::string value;
  std::string condition;  // empty for tables without a condition column
};

/// The six-row table at the Steinberg weight (p-1, p-1), p >= 3.
inline std::vector<TableRow> steinberg_rows(const RootSystem& rs, Int p) {
  const WeightVec st{{p - 1, p - 1}};
  std::vector<TableRow> rows;
  for (const WeylElement& w : all_elements(rs))
    rows.push_back({to_string(w), to_string(classify_a2(rs, w, st, p).label), ""});
  return rows;
}

/// The rank-1 rule grid: columns are the two divisibility cases.
inline std::vector<TableRow> a1_rows(Int p) {
  const RootSystem rs('A', 1);
  const WeightVec regular{{p}};       // p !| lambda + 1
  const WeightVec singular{{p - 1}};  // p | lambda + 1
  std::vector<TableRow> rows;
  for (const WeylElement& w : all_elements(rs))
    rows.push_back({to_string(w), to_string(classify_a1(rs, w, regular, p).label),
                    to_string(classify_a1(rs, w, singular, p).label)});
  return rows;
}

/// Rank-2 rows for the length(w) != 2 elements, one row per condition
/// case, computed from the classifier on representative weights.
inline std::vector<TableRow> a2_rows(Int p) {
  const RootSystem rs('A', 2);
  const auto value = [&](const WeylElement& w, const WeightVec& lambda) {
    return to_string(classify_a2(rs, w, lambda, p).label);
  };
  const WeylElement e = WeylElement::identity(2);
  const WeylElement sa = from_word(2, {1});
  const WeylElement sb = from_word(2, {2});
  const WeylElement w0 = from_word(2, {1, 2, 1});

  std::vector<TableRow> rows;
  rows.push_back({"e", value(e, WeightVec{{0, 0}}), "all"});
  rows.push_back({"1", value(sa, WeightVec{{p - 1, 0}}), "p | l1+1"});
  rows.push_back({"1", value(sa, WeightVec{{p, 0}}), "p !| l1+1"});
  rows.push_back({"2", value(sb, WeightVec{{0, p - 1}}), "p | l2+1"});
  rows.push_back({"2", value(sb, WeightVec{{0, p}}), "p !| l2+1"});
  if (p >= 3)  // no p-regular weights exist at p = 2, so the I = {} case is empty there
    rows.push_back({"1 2 1", value(w0, WeightVec{{0, 0}}), "Phi(lambda,p) empty"});
  rows.push_back({"1 2 1", value(w0, WeightVec{{p - 1, 0}}), "|I| = 1"});
  rows.push_back({"1 2 1", value(w0, WeightVec{{p - 1, p - 1}}), "I = {1,2}"});
  return rows;
}

inline std::string render_rows(const std::string& title, const std::vector<TableRow>& rows,
                               const std::string& col2, const std::string& col3) {
  std::string out = title + "\n\n";
  if (col3.empty()) {
    out += pad("w", 9) + col2 + "\n";
    for (const TableRow& r : rows) out += pad(r.w, 9) + r.value + "\n";
  } else {
    out += pad("w", 9) + pad(col2, 17) + col3 + "\n";
    for (const TableRow& r : rows) out += pad(r.w, 9) + pad(r.value, 17) + r.condition + "\n";
  }
  return out;
}

inline Json rows_json(const std::vector<TableRow>& rows, const char* third_key) {
  Json arr = Json::array();
  for (const TableRow& r : rows) {
    Json row;
    row["w"] = r.w;
    row["support"] = r.value;
    if (third_key && !r.condition.empty()) row[third_key] = r.condition;
    arr.push_back(std::move(row));
  }
  return arr;
}

/// name is one of steinberg | a1 | a2 | a2p2.
inline std::string render_table(const std::string& name, Int p, bool json) {
  if (name == "steinberg") {
    require_prime(p);
    if (p < 3) throw std::domain_error("demsup: the Steinberg table needs p >= 3");
    const RootSystem rs('A', 2);
    const auto rows = steinberg_rows(rs, p);
    if (json) return rows_json(rows, nullptr).dump(2) + "\n";
    return render_rows("A2 Demazure supports at the Steinberg weight  (p = " + std::to_string(p) + ", lambda = (" +
                           std::to_string(p - 1) + "," + std::to_string(p - 1) + "))",
                       rows, "support", "");
  }
  if (name == "a1") {
    require_prime(p);
    const auto rows = a1_rows(p);
    if (json) {
      Json arr = Json::array();
      for (const TableRow& r : rows) {
        Json row;
        row["w"] = r.w;
        row["regular"] = r.value;
        row["singular"] = r.condition;
        arr.push_back(std::move(row));
      }
      return arr.dump(2) + "\n";
    }
    std::string out = "A1 Demazure supports  (p = " + std::to_string(p) + ")\n\n";
    out += pad("w", 9) + pad("p !| l+1", 17) + "p | l+1\n";
    for (const TableRow& r : rows) out += pad(r.w, 9) + pad(r.value, 17) + r.condition + "\n";
    return out;
  }
  if (name == "a2" || name == "a2p2") {
    if (name == "a2") {
      require_prime(p);
      if (p < 3) throw std::domain_error("demsup: table a2 needs p >= 3; use a2p2 for p = 2");
    } else {
      p = 2;
    }
    const auto rows = a2_rows(p);
    if (json) return rows_json(rows, "lambda").dump(2) + "\n";
    return render_rows("A2 Demazure supports, length(w) != 2  (p = " + std::to_string(p) + ")", rows, "support",
                       "lambda");
  }
  throw std::invalid_argument("demsup: unknown table '" + name + "' (expected steinberg|a1|a2|a2p2)");
}

struct SupportReport {
  std::string text;
  Json json;
  int exit_code = 0;
};

namespace detail {

inline void report_concrete(SupportReport& rep, const RootSystem& rs, const WeylElement& w,
                            const WeightVec& lambda, Int p) {
  const ClassifiedSupport cls =
      rs.rank() == 1 ? classify_a1(rs, w, lambda, p) : classify_a2(rs, w, lambda, p);
  const OrbitClass sat = g_saturate(cls.label);
  const ModularProfile prof = modular_profile(rs, lambda, p);
  rep.text += "support    " + to_string(cls.label) + "\n";
  rep.text += "orbit      " + to_string(sat) + "\n";
  rep.text += "branch     " + cls.branch + "\n";
  rep.json["support"] = to_string(cls.label);
  rep.json["orbit"] = to_string(sat);
  rep.json["branch"] = cls.branch;
  rep.json["symbolic"] = false;
  rep.json["profile"] = profile_json(prof);
  std::string phi_text;
  for (const RootVec& alpha : prof.phi) {
    if (!phi_text.empty()) phi_text += " ";
    phi_text += "(";
    for (std::size_t i = 0; i < alpha.coeffs.size(); ++i)
      phi_text += (i ? "," : "") + std::to_string(alpha.coeffs[i]);
    phi_text += ")";
  }
  rep.text += "profile    Phi(lambda,p)={" + phi_text + "}  regular=" + (prof.regular ? "yes" : "no") +
              "  J_lambda=" + to_string(prof.j);
  if (prof.conjugation)
    rep.text += "  x=[" + to_string(prof.conjugation->x) + "]  I=" + to_string(prof.conjugation->target);
  rep.text += "\n";
}

inline void report_symbolic(SupportReport& rep, const RootSystem& rs, const WeylElement& w,
                            const WeightVec& lambda, Int p) {
  const ModularProfile prof = modular_profile(rs, lambda, p);
  rep.json["symbolic"] = true;
  rep.json["profile"] = profile_json(prof);
  if (prof.regular) {
    rep.text += "support    " + to_string(VarietyExpr{FullNullcone{}}) + "\n";
    rep.text += "orbit      " + to_string(g_saturate(VarietyExpr{FullNullcone{}})) + "\n";
    rep.text += "branch     p-regular weight: full restricted nullcone for every w\n";
    rep.json["support"] = to_string(VarietyExpr{FullNullcone{}});
    rep.json["orbit"] = to_string(g_saturate(VarietyExpr{FullNullcone{}}));
    rep.json["branch"] = "p-regular";
    return;
  }
  if (w == longest_coset_rep(rs, j_lambda(rs, lambda))) {
    const VarietyExpr v = support_w0J_symbolic(rs, lambda, p);
    rep.text += "support    " + to_string(v) + "\n";
    rep.text += "orbit      " + to_string(g_saturate(v)) + "\n";
    rep.text += "branch     w = w0(J_lambda): G-saturated parabolic nilradical meets N1(u)\n";
    rep.json["support"] = to_string(v);
    rep.json["orbit"] = to_string(g_saturate(v));
    rep.json["branch"] = "w = w0(J_lambda)";
    return;
  }
  if (w == long_element(rs.rank(), support(w))) {
    const VarietyExpr v = support_wI_symbolic(rs, support(w), lambda, p);
    rep.text += "support    " + to_string(v) + "   [a (P_I)_1-support, not a B_1-support]\n";
    rep.text += "branch     w = w_I: Levi-saturated value, I = " + to_string(support(w)) + "\n";
    rep.json["support"] = to_string(v);
    rep.json["level"] = "(P_I)_1";
    rep.json["branch"] = "w = w_I";
    return;
  }
  // No settled case applies: report the Bruhat bound sandwich and signal
  // the caller with exit code 3.
  const SymbolicBounds bounds = symbolic_bounds(rs, w, lambda, p);
  rep.exit_code = 3;
  rep.text += "support    unresolved at rank " + std::to_string(rs.rank()) +
              " (settled cases: p-regular, w = w0(J_lambda), w = w_I)\n";
  rep.text += "lower      G-saturation of " + to_string(bounds.lower) + "   [at w_S(v), S(v) = " +
              to_string(bounds.support_set) + "]\n";
  std::string terms;
  for (const auto& [I, v] : bounds.upper_terms) {
    if (!terms.empty()) terms += "  ;  ";
    terms += "I=" + to_string(I) + ": G-saturation of " + to_string(v);
  }
  rep.text += "upper      meet over { " + terms + " }\n";
  rep.json["support"] = nullptr;
  rep.json["unresolved"] = true;
  Json jb;
  jb["support_set"] = to_json(bounds.support_set);
  jb["lower"] = to_string(bounds.lower);
  Json upper = Json::array();
  for (const auto& [I, v] : bounds.upper_terms) {
    Json t;
    t["I"] = to_json(I);
    t["value"] = to_string(v);
    upper.push_back(std::move(t));
  }
  jb["upper_terms"] = std::move(upper);
  rep.json["bounds"] = std::move(jb);
}

}  // namespace detail

inline SupportReport support_report(const RootSystem& rs, const WeylElement& w, const WeightVec& lambda, Int p) {
  SupportReport rep;
  std::string lam;
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) lam += (i ? "," : "") + std::to_string(lambda.coords[i]);
  rep.text = "query      " + rs.name() + "  p=" + std::to_string(p) + "  w=[" + to_string(w) + "]  lambda=(" + lam +
             ")\n";
  rep.json["type"] = rs.name();
  rep.json["p"] = p;
  rep.json["w"] = to_string(w);
  rep.json["lambda"] = to_json(lambda);
  if (rs.rank() <= 2)
    detail::report_concrete(rep, rs, w, lambda, p);
  else
    detail::report_symbolic(rep, rs, w, lambda, p);
  return rep;
}

}  // namespace demsup
