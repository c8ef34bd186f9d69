// dynres: Dynkin-format resolution toolkit command line.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical rejection,
// 3 resource budget exhausted.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dynres/jsonio.hpp"

using namespace dynres;

namespace {

Format parse_format(const std::string& spec) {
  std::vector<int> v;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
  if (v.size() != 4) throw malformed_format("--format expects f0,f1,f2,f3");
  return Format(v[0], v[1], v[2], v[3]);
}

json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
  if (arg == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return json::parse(buf.str());
  }
  std::ifstream in(arg);
  if (!in) throw math_error("cannot open input file '" + arg + "'");
  json j;
  in >> j;
  return j;
}

std::vector<int> parse_sigma(const RootSystem& rs, const std::string& spec) {
  if (spec == "e") return {};
  if (spec == "w0") return longest_element(rs).word;
  if (spec.rfind("s:", 0) == 0) {
    std::vector<int> word;
    std::stringstream ss(spec.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ',')) word.push_back(rs.shape().node_by_name(tok));
    return word;
  }
  throw math_error("--sigma expects w0, e, or s:<node,node,...>");
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_table(bool as_json) {
  json cells = json::array();
  std::ostringstream text;
  text << "#(d,t)   t=1   t=2   t=3   t=4   t=5\n";
  for (int d = 0; d <= 5; ++d) {
    text << "d=" << d << "   ";
    for (int t = 1; t <= 5; ++t) {
      TShape s(2, d + 1, t + 1);
      if (classify_type(s).kind != LieKind::Finite) {
        text << "     -";
        continue;
      }
      long long v = count_table(d, t);
      cells.push_back(json{{"d", d}, {"t", t}, {"count", v}});
      text << "  " << std::setw(4) << v;
    }
    text << "\n";
  }
  emit(json{{"table", cells}}, as_json, text.str());
  return 0;
}

int cmd_format(int f0, int f1, int f2, int f3, bool as_json) {
  Format f(f0, f1, f2, f3);
  TShape s = format_shape(f);
  Classification cls = classify_type(s);
  json j{{"format", std::vector<int>{f0, f1, f2, f3}},
         {"shape", shape_to_json(s)},
         {"cartan", cartan_to_json(cartan_matrix(s))},
         {"dynkin", cls.kind == LieKind::Finite},
         {"type", cls.name}};
  std::ostringstream text;
  text << f.str() << " <-> T_{" << s.p << "," << s.q << "," << s.r << "}";
  if (cls.kind == LieKind::Finite) {
    text << " = " << cls.name << " (Dynkin)\n";
    emit(j, as_json, text.str());
    return 0;
  }
  text << ": " << (cls.kind == LieKind::Affine ? "affine type " + cls.name : "indefinite type")
       << ", not Dynkin\n";
  emit(j, as_json, text.str());
  return 2;
}

int cmd_cosets(const Format& f, bool as_json) {
  TShape shape = format_shape(f);
  if (classify_type(shape).kind != LieKind::Finite) throw non_dynkin_format();
  RootSystem rs(shape);
  DoubleCosetTable tab = double_cosets(rs, shape.z_node(1), shape.x_node(1));
  json cosets = json::array();
  std::ostringstream text;
  text << "format " << f.str() << ": " << tab.cosets.size() << " double cosets, quotient size "
       << tab.quotient.orbit.size() << "\n";
  for (size_t k = 0; k < tab.cosets.size(); ++k) {
    const auto& c = tab.cosets[k];
    const auto& word = tab.quotient.orbit.words[c.min_index];
    json w = json::array();
    std::string ws;
    for (int i : word) {
      w.push_back(shape.node_name(i));
      ws += (ws.empty() ? "" : " ") + shape.node_name(i);
    }
    cosets.push_back(
        json{{"index", k}, {"length", word.size()}, {"word", w}, {"size", c.members.size()}});
    text << "  [" << k << "] length " << word.size() << ", size " << c.members.size() << ": "
         << (ws.empty() ? "e" : ws) << "\n";
  }
  json out{{"format", std::vector<int>{f.f0, f.f1, f.f2, f.f3}},
           {"count", tab.cosets.size()},
           {"cosets", cosets}};
  if (f.f0 == 1) out["families"] = family_count(f);
  emit(out, as_json, text.str());
  return 0;
}

int cmd_decompose(const Format& f, bool as_json) {
  LeviDecomposition dec = mark_extremal(z1_decomposition(f));
  std::ostringstream text;
  text << "z1-graded decomposition of L(omega_{x1})^dual for " << f.str() << ":\n";
  for (const auto& c : dec.components)
    text << "  j=" << c.j << ": " << c.display() << (c.extremal ? "  [extremal]" : "") << "\n";
  auto opts = betti_options(f);
  text << "minimal Betti numbers per extremal family:";
  for (const auto& b : opts)
    text << " (" << b[0] << "," << b[1] << "," << b[2] << "," << b[3] << ")";
  text << "\n";
  json j = decomposition_to_json(dec);
  json bo = json::array();
  for (const auto& b : opts) bo.push_back(std::vector<int>(b.begin(), b.end()));
  j["betti_options"] = bo;
  emit(j, as_json, text.str());
  return 0;
}

int cmd_betti_check(const std::string& arg, bool as_json) {
  BettiTable t = betti_table_from_json(read_json_arg(arg));
  AdmissibilityReport rep = admissibility_report(t);
  std::ostringstream text;
  text << "betti table for " << t.format.str() << ":\n";
  text << "  dynkin:                 " << (rep.dynkin ? "yes" : "NO") << "\n";
  text << "  degree-zero generator:  " << (rep.degree_zero_generator ? "yes" : "NO") << "\n";
  text << "  2 min(s1) < max(s3):    " << (rep.inequality_2min_lt_max ? "yes" : "NO") << "\n";
  text << "  parity condition:       " << (rep.parity_ok ? "yes" : "NO") << "\n";
  text << "verdict: "
       << (rep.all_necessary_conditions()
               ? "passes all necessary conditions"
               : "cannot be the table of a grade-3 perfect cyclic quotient")
       << "\n";
  emit(admissibility_to_json(rep), as_json, text.str());
  return 0;
}

int cmd_res(const std::string& action, const std::string& arg, bool as_json, const Budget& budget) {
  GradedComplex C = complex_from_json(read_json_arg(arg));
  if (action == "validate") {
    ComplexReport rep = validate_complex(C, true, budget);
    std::ostringstream text;
    text << "complex " << C.format.str() << ": dd_zero=" << rep.dd_zero
         << " homogeneous=" << rep.homogeneous << " ranks_ok=" << rep.ranks_ok;
    if (rep.acyclic) text << " acyclic=" << *rep.acyclic;
    if (rep.dual_acyclic) text << " dual_acyclic=" << *rep.dual_acyclic;
    text << "\n";
    for (const auto& n : rep.notes) text << "  note: " << n << "\n";
    emit(report_to_json(rep), as_json, text.str());
    return 0;
  }
  if (action == "multipliers") {
    Multipliers M = be_multipliers(C);
    json j{{"a3", matrix_to_json(M.a3)}, {"a2", matrix_to_json(M.a2)}, {"a1", poly_to_json(M.a1)}};
    std::ostringstream text;
    text << "a1 = " << M.a1.str() << "\n";
    text << "a2 entries:";
    for (int i = 0; i < M.a2.rows; ++i) text << " " << M.a2.at(i, 0).str();
    text << "\n";
    emit(j, as_json, text.str());
    return 0;
  }
  if (action == "structure") {
    StructureMaps S = structure_maps(C, budget);
    json j{{"w31", matrix_to_json(S.w31)}, {"w21", matrix_to_json(S.w21)}};
    std::ostringstream text;
    text << "w31: " << S.w31.rows << " x " << S.w31.cols << ", w21: " << S.w21.rows << " x "
         << S.w21.cols << "\n";
    emit(j, as_json, text.str());
    return 0;
  }
  if (action == "classify") {
    FamilyLabel label = classify_family(C, budget);
    TShape shape = format_shape(C.format);
    std::ostringstream text;
    if (label.partial) {
      text << "partial label: candidate cosets";
      for (int k : label.candidate_cosets) text << " [" << k << "]";
      text << "\n";
    } else {
      text << "family: coset [" << label.candidate_cosets[0] << "] of " << label.format.str()
           << ", word:";
      for (int i : label.candidate_words[0]) text << " " << shape.node_name(i);
      if (label.m11_nonzero) text << "  (m11 " << (*label.m11_nonzero ? "nonzero" : "zero") << ")";
      text << "\n";
    }
    emit(label_to_json(label, shape), as_json, text.str());
    return 0;
  }
  throw math_error("unknown res action '" + action + "'");
}

int cmd_schubert(const std::string& action, const Format& f, const std::string& sigma, bool as_json,
                 const Budget& budget) {
  RootSystem rs(format_shape(f));
  std::vector<int> word = parse_sigma(rs, sigma);
  SchubertChart chart = patch_parametrization(f, word, budget);
  if (action == "ideal") {
    std::ostringstream text;
    text << "chart of " << f.str() << " at sigma = " << (word.empty() ? "e" : sigma) << ": "
         << chart.nvars << " variables\n";
    for (const auto& g : chart.ideal.gens) text << "  " << g.str(chart.var_names) << "\n";
    emit(chart_to_json(chart), as_json, text.str());
    return 0;
  }
  if (action == "resolution") {
    SchubertResolution res = schubert_resolution(chart, budget);
    json j = chart_to_json(chart);
    j["resolution"] = complex_to_json(res.complex);
    std::ostringstream text;
    const GradedComplex& C = res.complex;
    auto twists = [&](const std::vector<long long>& s) {
      std::string out = "(";
      for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
      return out + ")";
    };
    text << "resolution of the chart: s1=" << twists(C.s1) << " s2=" << twists(C.s2)
         << " s3=" << twists(C.s3) << "\n";
    text << "d1 d2 = " << ((C.d1 * C.d2).is_zero() ? "0" : "NONZERO")
         << ", d2 d3 = " << ((C.d2 * C.d3).is_zero() ? "0" : "NONZERO")
         << ", minimal = " << (C.is_minimal() ? "yes" : "no") << "\n";
    emit(j, as_json, text.str());
    return 0;
  }
  throw math_error("unknown schubert action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynres: exact toolkit for Dynkin-format length-3 resolutions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON instead of text");
  std::string profile;
  app.add_option("--budget-profile", profile,
                 "resource budget profile: small, default, large (also via DYNRES_BUDGET_PROFILE)");
  long long max_pairs = -1;
  int max_degree = -1;
  app.add_option("--max-pairs", max_pairs, "Groebner S-pair cap (default 2000000)");
  app.add_option("--max-degree", max_degree, "Groebner degree cap (default 64)");

  auto* table = app.add_subcommand("table", "print the double-coset cardinality grid");

  auto* fmt = app.add_subcommand("format", "classify a resolution format");
  std::vector<int> fmt_args;
  fmt->add_option("f", fmt_args, "f0 f1 f2 f3")->expected(4);

  std::string format_spec, sigma_spec = "w0", json_arg, res_action, schubert_action;

  auto* cosets = app.add_subcommand("cosets", "double-coset inventory of a Dynkin format");
  cosets->add_option("--format", format_spec, "format as f0,f1,f2,f3")->required();

  auto* decompose = app.add_subcommand("decompose", "z1-graded Levi decomposition");
  decompose->add_option("--format", format_spec, "format as f0,f1,f2,f3")->required();

  auto* betti = app.add_subcommand("betti", "graded Betti-table admissibility");
  auto* betti_check = betti->add_subcommand("check", "run the necessary-condition report");
  betti_check->add_option("table", json_arg, "inline JSON, path, or - for stdin")->required();

  auto* res = app.add_subcommand("res", "graded complex operations");
  res->add_option("action", res_action, "validate | multipliers | structure | classify")->required();
  res->add_option("complex", json_arg, "complex JSON (inline, path, or -)")->required();

  auto* schubert =
      app.add_subcommand("schubert", "explicit Schubert charts (D families and (1,5,6,2))");
  schubert->add_option("action", schubert_action, "ideal | resolution")->required();
  schubert->add_option("--format", format_spec, "format as f0,f1,f2,f3")->required();
  schubert->add_option("--sigma", sigma_spec, "w0, e, or s:<node,...> (default w0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1; --help exits 0
  }

  try {
    Budget budget = profile.empty() ? Budget::from_env() : Budget::profile(profile);
    if (max_pairs > 0) budget.groebner_pair_cap = max_pairs;
    if (max_degree > 0) budget.groebner_degree_cap = max_degree;

    if (table->parsed()) return cmd_table(as_json);
    if (fmt->parsed()) return cmd_format(fmt_args[0], fmt_args[1], fmt_args[2], fmt_args[3], as_json);
    if (cosets->parsed()) return cmd_cosets(parse_format(format_spec), as_json);
    if (decompose->parsed()) return cmd_decompose(parse_format(format_spec), as_json);
    if (betti->parsed()) {
      if (!betti_check->parsed()) throw math_error("betti requires the 'check' subcommand");
      return cmd_betti_check(json_arg, as_json);
    }
    if (res->parsed()) return cmd_res(res_action, json_arg, as_json, budget);
    if (schubert->parsed())
      return cmd_schubert(schubert_action, parse_format(format_spec), sigma_spec, as_json, budget);
  } catch (const budget_error& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const math_error& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
