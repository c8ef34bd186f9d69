#ifndef DYNRES_JSONIO_HPP
#define DYNRES_JSONIO_HPP

#include <json.hpp>

#include "dynres/betti.hpp"
#include "dynres/chart.hpp"

namespace dynres {

using nlohmann::json;

// Polynomial encoding: {"nvars":k,"terms":[{"e":[...],"c":"num/den"},...]}
// with terms in descending graded-lex order.  This is the bit-exact
// interchange format for all CLI input and output.
inline json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json e = t.e;
    terms.push_back(json{{"e", e}, {"c", rat_to_string(t.c)}});
  }
  return json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const json& j) {
  int nv = j.at("nvars").get<int>();
  MultiPoly p(nv);
  for (const auto& t : j.at("terms")) {
    Expo e = t.at("e").get<Expo>();
    if (static_cast<int>(e.size()) != nv) throw variable_mismatch("term exponent size mismatch");
    p += MultiPoly::monomial(nv, e, rat_from_string(t.at("c").get<std::string>()));
  }
  return p;
}

inline json matrix_to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (const auto& p : m.entries) entries.push_back(poly_to_json(p));
  return json{{"rows", m.rows},         {"cols", m.cols},         {"nvars", m.nvars},
              {"rowtwists", m.rowtwist}, {"coltwists", m.coltwist}, {"entries", entries}};
}

inline PolyMatrix matrix_from_json(const json& j) {
  PolyMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>(), j.at("nvars").get<int>());
  m.rowtwist = j.at("rowtwists").get<std::vector<long long>>();
  m.coltwist = j.at("coltwists").get<std::vector<long long>>();
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != m.rows * m.cols)
    throw malformed_format("matrix entry count mismatch");
  for (int i = 0; i < m.rows * m.cols; ++i) m.entries[i] = poly_from_json(entries[i]);
  return m;
}

inline json shape_to_json(const TShape& s) { return json{{"p", s.p}, {"q", s.q}, {"r", s.r}}; }
inline TShape shape_from_json(const json& j) {
  return TShape(j.at("p").get<int>(), j.at("q").get<int>(), j.at("r").get<int>());
}

inline json format_to_json(const Format& f) {
  return json{{"f", std::vector<int>{f.f0, f.f1, f.f2, f.f3}}};
}
inline Format format_from_json(const json& j) {
  auto v = j.at("f").get<std::vector<int>>();
  if (v.size() != 4) throw malformed_format("format must have four entries");
  return Format(v[0], v[1], v[2], v[3]);
}

inline json cartan_to_json(const CartanMatrix& A) {
  json rows = json::array();
  for (const auto& row : A) rows.push_back(row);
  return rows;
}

inline json complex_to_json(const GradedComplex& C) {
  return json{{"f", std::vector<int>{C.format.f0, C.format.f1, C.format.f2, C.format.f3}},
              {"nvars", C.nvars},
              {"s", std::vector<std::vector<long long>>{C.s0, C.s1, C.s2, C.s3}},
              {"d1", matrix_to_json(C.d1)},
              {"d2", matrix_to_json(C.d2)},
              {"d3", matrix_to_json(C.d3)}};
}

inline GradedComplex complex_from_json(const json& j) {
  GradedComplex C;
  auto f = j.at("f").get<std::vector<int>>();
  if (f.size() != 4) throw malformed_format("format must have four entries");
  C.format = Format(f[0], f[1], f[2], f[3]);
  C.nvars = j.at("nvars").get<int>();
  auto s = j.at("s").get<std::vector<std::vector<long long>>>();
  if (s.size() != 4) throw malformed_format("twists must list s0..s3");
  C.s0 = s[0];
  C.s1 = s[1];
  C.s2 = s[2];
  C.s3 = s[3];
  C.d1 = matrix_from_json(j.at("d1"));
  C.d2 = matrix_from_json(j.at("d2"));
  C.d3 = matrix_from_json(j.at("d3"));
  C.sync_twists();
  if (!C.shape_ok()) throw malformed_format("matrix shapes do not match the format");
  return C;
}

inline json decomposition_to_json(const LeviDecomposition& dec) {
  json comps = json::array();
  for (const auto& c : dec.components)
    comps.push_back(json{{"j", c.j},
                         {"lambda", c.lambda},
                         {"mu", c.mu},
                         {"multiplicity", c.multiplicity},
                         {"extremal", c.extremal},
                         {"display", c.display()}});
  return json{{"format", std::vector<int>{dec.format.f0, dec.format.f1, dec.format.f2, dec.format.f3}},
              {"components", comps}};
}

inline json betti_table_to_json(const BettiTable& t) {
  return json{{"f", std::vector<int>{t.format.f0, t.format.f1, t.format.f2, t.format.f3}},
              {"s1", t.s1},
              {"s2", t.s2},
              {"s3", t.s3}};
}

inline BettiTable betti_table_from_json(const json& j) {
  auto f = j.at("f").get<std::vector<int>>();
  if (f.size() != 4) throw malformed_format("format must have four entries");
  return BettiTable(Format(f[0], f[1], f[2], f[3]), j.at("s1").get<std::vector<long long>>(),
                    j.at("s2").get<std::vector<long long>>(),
                    j.at("s3").get<std::vector<long long>>());
}

inline json admissibility_to_json(const AdmissibilityReport& rep) {
  return json{{"dynkin", rep.dynkin},
              {"degree_zero_generator", rep.degree_zero_generator},
              {"inequality_2min_lt_max", rep.inequality_2min_lt_max},
              {"parity_ok", rep.parity_ok},
              {"notes", rep.notes}};
}

inline json report_to_json(const ComplexReport& rep) {
  json j{{"shape_ok", rep.shape_ok},
         {"homogeneous", rep.homogeneous},
         {"dd_zero", rep.dd_zero},
         {"ranks_ok", rep.ranks_ok},
         {"notes", rep.notes}};
  if (rep.grades_ok) j["grades_ok"] = *rep.grades_ok;
  if (rep.acyclic) j["acyclic"] = *rep.acyclic;
  if (rep.dual_acyclic) j["dual_acyclic"] = *rep.dual_acyclic;
  return j;
}

inline json chart_to_json(const SchubertChart& chart) {
  json sigma = json::array();
  for (int i : chart.sigma_word) sigma.push_back(chart.shape.node_name(i));
  json gens = json::array();
  for (const auto& g : chart.ideal.gens) gens.push_back(poly_to_json(g));
  return json{{"format", std::vector<int>{chart.format.f0, chart.format.f1, chart.format.f2,
                                          chart.format.f3}},
              {"sigma", sigma},
              {"nvars", chart.nvars},
              {"variables", chart.var_names},
              {"variable_degrees", chart.var_degrees},
              {"generators", gens}};
}

inline json label_to_json(const FamilyLabel& label, const TShape& shape) {
  json words = json::array();
  for (const auto& w : label.candidate_words) {
    json word = json::array();
    for (int i : w) word.push_back(shape.node_name(i));
    words.push_back(word);
  }
  json j{{"format", std::vector<int>{label.format.f0, label.format.f1, label.format.f2,
                                     label.format.f3}},
         {"partial", label.partial},
         {"candidate_cosets", label.candidate_cosets},
         {"candidate_words", words}};
  if (label.m11_nonzero) j["m11_nonzero"] = *label.m11_nonzero;
  return j;
}

}  // namespace dynres

#endif
