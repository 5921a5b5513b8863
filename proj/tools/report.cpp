#include "report.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "groupcodes/error.hpp"
#include "groupcodes/forms.hpp"
#include "groupcodes/parse.hpp"

namespace groupcodes::cli {

namespace {

json hex_rows(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(pack_row(m.row(r), m.p()));
  return rows;
}

json parameters_json(const AdditiveCode& code, std::uint64_t cap) {
  try {
    const CodeParameters params = parameters(code, cap);
    json out{{"n", params.length}, {"q", params.q}, {"r", params.r}, {"text", params.to_string()}};
    out["d"] = params.distance ? json(*params.distance) : json(nullptr);
    return out;
  } catch (const EnumerationTooLarge& e) {
    return json{{"error", e.what()}};
  }
}

std::vector<FormKind> trace_forms(const std::vector<FormKind>& forms) {
  std::vector<FormKind> out;
  for (auto f : forms) {
    const FormKind t = trace_form_of(f);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

json check_json(const CriterionCheck& c) {
  return json{{"criterion", c.criterion}, {"direct", c.direct}, {"agree", c.agree()}, {"two_sided", c.two_sided}};
}

json form_json(FormKind kind, const AdditiveCode& code, std::uint64_t cap) {
  std::optional<AdditiveCode> dual;
  if (is_trace_form(kind)) {
    dual = orthogonal(kind, code);
  } else if (code.is_k_linear()) {
    dual = euclidean_orthogonal_of_ideal(kind, code);
  }
  if (!dual) return json{{"applicable", false}};
  const FormKind t = trace_form_of(kind);
  return json{{"applicable", true},
              {"dual_dim_f", dual->dim_f()},
              {"dual_parameters", parameters_json(*dual, cap)},
              {"lcd", is_lcd(t, code)},
              {"self_orthogonal", is_self_orthogonal(t, code)},
              {"self_dual", is_self_dual(t, code)}};
}

std::string parameters_text(const json& p) {
  if (p.contains("text")) return p["text"].get<std::string>();
  return "not enumerated (" + p["error"].get<std::string>() + ")";
}

std::string yes_no(const json& b) { return b.get<bool>() ? "true" : "false"; }

void render_code(std::ostringstream& out, const std::string& name, const json& code) {
  out << name << ": dim_F=" << code["dim_f"].get<std::size_t>()
      << " parameters=" << parameters_text(code["parameters"]) << '\n';
  for (const auto& [form, entry] : code["forms"].items()) {
    out << "  " << form << ": ";
    if (!entry["applicable"].get<bool>()) {
      out << "not applicable (code is not K-linear)\n";
      continue;
    }
    out << "dual dim_F=" << entry["dual_dim_f"].get<std::size_t>()
        << " dual parameters=" << parameters_text(entry["dual_parameters"]) << " lcd=" << yes_no(entry["lcd"])
        << " self_orthogonal=" << yes_no(entry["self_orthogonal"]) << " self_dual=" << yes_no(entry["self_dual"])
        << '\n';
  }
}

void render_check(std::ostringstream& out, const std::string& name, const json& c) {
  out << "  " << name << ": criterion=" << yes_no(c["criterion"]) << " direct=" << yes_no(c["direct"])
      << (c["agree"].get<bool>() ? "" : "  DISAGREE") << '\n';
}

}  // namespace

Ambient make_ambient(const std::string& field_spec, const std::string& group_spec) {
  return {field_spec, group_spec, GroupAlgebra::create(parse_field(field_spec), parse_group(group_spec))};
}

void check_forms(const GroupAlgebra& kg, const std::vector<FormKind>& forms) {
  for (auto f : forms)
    if (is_hermitian(f) && kg.field().m() % 2 != 0)
      throw Error(ErrorKind::kParseError, "form " + std::string(to_string(f)) + " needs even m");
}

std::vector<FormKind> default_forms(const GroupAlgebra& kg) {
  if (kg.field().m() % 2 == 0) return {FormKind::kTE, FormKind::kTH};
  return {FormKind::kTE};
}

json ambient_json(const Ambient& ambient) {
  const GroupAlgebra& kg = *ambient.algebra;
  return json{{"field", ambient.field_spec},
              {"field_canonical", kg.field().spec()},
              {"group", ambient.group_spec},
              {"p", kg.p()},
              {"q", kg.field().q()},
              {"m", kg.field().m()},
              {"n", kg.n()},
              {"dimension_fp", kg.dimension()},
              {"description", kg.describe()}};
}

json code_json(const AdditiveCode& code, const std::vector<FormKind>& forms, std::uint64_t cap) {
  json out{{"dim_f", code.dim_f()},
           {"dim_fp", code.dim_fp()},
           {"submodule", code.is_submodule()},
           {"k_linear", code.is_k_linear()},
           {"basis", hex_rows(code.basis())},
           {"parameters", parameters_json(code, cap)}};
  json per_form = json::object();
  for (auto f : forms) per_form[std::string(to_string(f))] = form_json(f, code, cap);
  out["forms"] = per_form;
  return out;
}

json analyze_element(const Ambient& ambient, const AlgebraElement& e, const std::vector<FormKind>& forms,
                     std::uint64_t cap) {
  const GroupAlgebra& kg = *ambient.algebra;
  json out{{"command", "analyze"}, {"ambient", ambient_json(ambient)}};
  const bool idempotent = e.is_idempotent();
  out["element"] = json{{"text", e.format()},
                        {"coords", pack_row(e.to_coords(), kg.p())},
                        {"idempotent", idempotent},
                        {"in_fg", e.in_fg()}};
  json warnings = json::array();
  if (e.is_zero()) warnings.push_back("zero element: both codes are zero");
  if (!idempotent) warnings.push_back("element is not idempotent: criteria skipped");
  out["warnings"] = warnings;

  out["codes"] = json{{"KGe", code_json(idempotent_code(e), forms, cap)},
                      {"FGe", code_json(restricted_idempotent_code(e), forms, cap)}};

  bool agree = true;
  json criteria = json::object();
  json star_complement = json::object();
  if (idempotent) {
    for (auto t : trace_forms(forms)) {
      const GramOnFG gram = gram_on_fg(t, e);
      json entries = json::array();
      for (std::size_t i = 0; i < gram.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < gram.size(); ++j) row.push_back(kg.field().format(gram.at(i, j)));
        entries.push_back(row);
      }
      const CriterionCheck lcd = lcd_criterion_check(t, e);
      const CriterionCheck sd = selfdual_criterion_check(t, e);
      const CriterionCheck ideal = ideal_selfdual_check(t, e);
      agree = agree && lcd.agree() && sd.agree() && ideal.consistent();
      const std::string name(to_string(t));
      criteria[name] = json{{"gram", entries},
                            {"gram_rank", gram.rank()},
                            {"gram_zero", gram.is_zero()},
                            {"lcd", check_json(lcd)},
                            {"self_dual", check_json(sd)},
                            {"ideal_self_dual", check_json(ideal)}};
      star_complement[name] = ideal.criterion;
    }
  }
  out["criteria"] = criteria;
  out["star_complement"] = star_complement;
  out["cross_checks_ok"] = agree;
  return out;
}

json analyze_projector(const Ambient& ambient, const FLinearOperator& p, const std::vector<FormKind>& forms,
                       std::uint64_t cap) {
  json out{{"command", "analyze"}, {"ambient", ambient_json(ambient)}};
  const bool fg = is_fg_linear(p, LinearityCheck::kAllElements);
  const bool proj = is_projector(p);
  json self_adjoint = json::object();
  for (auto t : trace_forms(forms)) self_adjoint[std::string(to_string(t))] = is_self_adjoint(t, p);
  const AlgebraElement at_one = p.apply(ambient.algebra->one());
  out["projector"] = json{{"fg_linear", fg},
                          {"kg_linear", is_kg_linear(p)},
                          {"idempotent", proj},
                          {"self_adjoint", self_adjoint},
                          {"image_of_one", at_one.format()},
                          {"is_right_multiplication", rho(at_one) == p}};
  json warnings = json::array();
  if (!fg || !proj) warnings.push_back("operator is not an FG-linear projector");
  out["warnings"] = warnings;
  out["codes"] = json{{"image", code_json(image(p), forms, cap)}, {"kernel", code_json(kernel(p), forms, cap)}};
  out["criteria"] = json::object();
  out["cross_checks_ok"] = true;
  return out;
}

json search_idempotents(const Ambient& ambient, const ScanSet& set, SearchFilter filter, SearchCode code,
                        const std::vector<FormKind>& forms, std::uint64_t cap) {
  const GroupAlgebra& kg = *ambient.algebra;
  const auto found = scan_idempotents(ambient.algebra, set, cap);
  json out{{"command", "search"}, {"ambient", ambient_json(ambient)}};
  json support = json::array();
  if (set.support.empty()) {
    for (std::size_t g = 0; g < kg.n(); ++g) support.push_back(g);
  } else {
    for (auto g : set.support) support.push_back(g);
  }
  out["scan"] = json{{"support", support},
                     {"coefficients", set.subfield_coefficients ? "F" : "K"},
                     {"size", scan_size(kg, set)}};
  out["filter"] = filter == SearchFilter::kAll ? "all" : filter == SearchFilter::kLcd ? "lcd" : "self-dual";
  out["code"] = code == SearchCode::kKGe ? "KGe" : "FGe";
  out["idempotents_found"] = found.size();

  bool agree = true;
  json hits = json::array();
  for (const auto& e : found) {
    const AdditiveCode c = code == SearchCode::kKGe ? idempotent_code(e) : restricted_idempotent_code(e);
    json per_form = json::object();
    bool keep = filter == SearchFilter::kAll;
    for (auto t : trace_forms(forms)) {
      const bool lcd = is_lcd(t, c);
      const bool sd = is_self_dual(t, c);
      json entry{{"lcd", lcd}, {"self_dual", sd}};
      if (code == SearchCode::kKGe) {
        const CriterionCheck ideal = ideal_selfdual_check(t, e);
        entry["star_complement"] = ideal.criterion;
        agree = agree && ideal.consistent();
      } else {
        const CriterionCheck lc = lcd_criterion_check(t, e);
        const CriterionCheck sc = selfdual_criterion_check(t, e);
        agree = agree && lc.agree() && sc.agree();
      }
      per_form[std::string(to_string(t))] = entry;
      if ((filter == SearchFilter::kLcd && lcd) || (filter == SearchFilter::kSelfDual && sd)) keep = true;
    }
    if (!keep) continue;
    hits.push_back(json{{"element", e.format()},
                        {"coords", pack_row(e.to_coords(), kg.p())},
                        {"dim_f", c.dim_f()},
                        {"parameters", parameters_json(c, kDefaultEnumerationCap)},
                        {"forms", per_form}});
  }
  out["hit_count"] = hits.size();
  out["hits"] = hits;
  out["cross_checks_ok"] = agree;
  return out;
}

namespace {

class Suite {
 public:
  Suite(json& log, std::string name) : log_(log), name_(std::move(name)) {}

  // Records one assertion. Exceptions count as failures and name the error.
  void check(const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    json entry{{"suite", name_}, {"assertion", what}, {"pass", ok}};
    if (!detail.empty()) entry["error"] = detail;
    log_.push_back(entry);
  }

 private:
  json& log_;
  std::string name_;
};

GroupAlgebraPtr ambient_or_null(const std::string& field, const std::string& group) {
  try {
    return GroupAlgebra::create(parse_field(field), parse_group(group));
  } catch (const Error&) {
    return nullptr;
  }
}

// Suites run against whatever ambient they were given; a broken ambient
// makes every dependent assertion fail rather than abort the run.
void f8_c3(json& log, Fault fault) {
  Suite s(log, "F_8 C_3 LCD");
  const std::string field = fault == Fault::kModulus ? "q=2,m=3,modulus=1,1,1,1" : "q=2,m=3";
  GroupAlgebraPtr kg;
  s.check("K = F_8 built from its modulus", [&] { return (kg = ambient_or_null(field, "cyclic:3")) != nullptr; });
  if (!kg) return;
  const AlgebraElement e = parse_element(kg, fault == Fault::kElement ? "1 + g" : "1 + g + g^2");
  const AdditiveCode fge = restricted_idempotent_code(e);
  s.check("e = 1 + g + g^2 is idempotent", [&] { return e.is_idempotent(); });
  s.check("FGe = {0, e}", [&] { return fge.dim_f() == 1 && fge.contains(e) && !e.is_zero(); });
  s.check("parameters (3, 2^1, 3)", [&] { return parameters(fge) == CodeParameters{3, 2, 1, 3}; });
  s.check("<e, e>_TE = 1", [&] { return pair(FormKind::kTE, e, e) == kg->field().one(); });
  s.check("FGe is TE-LCD", [&] { return is_lcd(FormKind::kTE, fge); });
  s.check("Gram criterion agrees", [&] { return lcd_criterion_rhoe(FormKind::kTE, e); });
  const AdditiveCode dual = orthogonal(FormKind::kTE, fge);
  s.check("dual parameters (3, 2^8, 1)", [&] { return parameters(dual) == CodeParameters{3, 2, 8, 1}; });
  s.check("dual has dim 8 > 3, so it is no FGf", [&] { return dual.dim_f() == 8 && dual.dim_f() > kg->n(); });
}

void f9_c2(json& log, Fault fault) {
  Suite s(log, "F_9 C_2 Gram rank");
  const std::string field = fault == Fault::kModulus ? "q=3,m=2,modulus=2,0,1" : "q=3,m=2";
  GroupAlgebraPtr kg;
  s.check("K = F_9 built from its modulus", [&] { return (kg = ambient_or_null(field, "cyclic:2")) != nullptr; });
  if (!kg) return;
  const AlgebraElement e = parse_element(kg, fault == Fault::kElement ? "2 + g" : "2 + 2*g");
  s.check("e = 2(1 + g) is idempotent", [&] { return e.is_idempotent(); });
  const AlgebraElement one_plus_g = parse_element(kg, "1 + g");
  s.check("rho_e(FG) = F(1 + g)", [&] {
    return restricted_idempotent_code(e) == span_fg(kg, std::span<const AlgebraElement>(&one_plus_g, 1)) &&
           restricted_idempotent_code(e).dim_f() == 1;
  });
  for (auto kind : {FormKind::kTE, FormKind::kTH}) {
    const std::string k(to_string(kind));
    s.check("M_e is the all-ones 2x2 matrix for " + k, [&] {
      const GramOnFG gram = gram_on_fg(kind, e);
      return gram.size() == 2 && gram.at(0, 0) == kg->field().one() && gram.at(0, 1) == kg->field().one() &&
             gram.at(1, 0) == kg->field().one() && gram.at(1, 1) == kg->field().one();
    });
    s.check("rank M_e = 1 = dim FGe for " + k,
            [&] { return gram_on_fg(kind, e).rank() == 1 && restricted_idempotent_code(e).dim_f() == 1; });
    s.check("lcd_criterion_rhoe = is_lcd = true for " + k, [&] {
      return lcd_criterion_rhoe(kind, e) && is_lcd(kind, restricted_idempotent_code(e));
    });
  }
}

void f4_c6(json& log, Fault fault) {
  Suite s(log, "F_4 C_6 self-dual");
  const std::string field = fault == Fault::kModulus ? "q=2,m=2,modulus=1,0,1" : "q=2,m=2";
  GroupAlgebraPtr kg;
  s.check("K = F_4 built from its modulus", [&] { return (kg = ambient_or_null(field, "cyclic:6")) != nullptr; });
  if (!kg) return;
  const AlgebraElement e = parse_element(kg, fault == Fault::kElement ? "a*g2 + a*g4" : "a^2*g2 + a*g4");
  const AdditiveCode fge = restricted_idempotent_code(e);
  s.check("e = w^2 g^2 + w g^4 is idempotent", [&] { return e.is_idempotent(); });
  s.check("dim_F FGe = 6 and |C| = 64", [&] { return fge.dim_f() == 6 && fge.dim_fp() == 6; });
  s.check("parameters (6, 2^6, 2)", [&] { return parameters(fge) == CodeParameters{6, 2, 6, 2}; });
  s.check("M_e = 0 for TE", [&] { return gram_on_fg(FormKind::kTE, e).is_zero(); });
  s.check("selfdual_criterion_rhoe = is_self_dual = true",
          [&] { return selfdual_criterion_rhoe(FormKind::kTE, e) && is_self_dual(FormKind::kTE, fge); });
  s.check("FGe is not TE-LCD", [&] { return !is_lcd(FormKind::kTE, fge); });
}

void f9_c2xc2(json& log, Fault fault) {
  Suite s(log, "F_9 C_2xC_2 coefficientwise projector");
  const std::string field = fault == Fault::kModulus ? "q=3,m=2,modulus=2,0,1" : "q=3,m=2";
  GroupAlgebraPtr kg;
  s.check("K = F_9 built from its modulus",
          [&] { return (kg = ambient_or_null(field, "product:cyclic:2xcyclic:2")) != nullptr; });
  if (!kg) return;
  const FieldTower& f = kg->field();
  const FieldElement u0 = fault == Fault::kElement ? f.generator() : f.one();
  const AlgebraElement one = kg->one();
  for (auto kind : {FormKind::kTE, FormKind::kTH}) {
    const std::string k(to_string(kind));
    s.check("<1, 1>_" + k + " = 2", [&] { return pair(kind, one, one) == f.from_int(2); });
  }
  const SubfieldSubspace u{kg->field_ptr(), {u0}};
  std::optional<FLinearOperator> p;
  s.check("coefficientwise projector onto U = F*1 exists",
          [&] { return (p = coefficientwise_projector(kg, u, FormKind::kTE)).has_value(); });
  if (!p) return;
  s.check("projector is FG-linear", [&] { return is_fg_linear(*p, LinearityCheck::kAllElements); });
  s.check("projector is idempotent", [&] { return is_projector(*p); });
  const AdditiveCode ug = image(*p);
  for (auto kind : {FormKind::kTE, FormKind::kTH}) {
    const std::string k(to_string(kind));
    s.check("projector is " + k + "-self-adjoint", [&] { return is_self_adjoint(kind, *p); });
    s.check("image UG is " + k + "-LCD", [&] { return is_lcd(kind, ug); });
  }
  s.check("image UG = FG", [&] { return ug == group_ring_over_f(kg); });
  s.check("projector is not rho_a (T(1) test)", [&] { return !(rho(p->apply(one)) == *p); });
}

}  // namespace

json verify_paper(Fault fault) {
  json log = json::array();
  f8_c3(log, fault);
  f9_c2(log, fault);
  f4_c6(log, fault);
  f9_c2xc2(log, fault);
  const bool passed = std::all_of(log.begin(), log.end(), [](const json& a) { return a["pass"].get<bool>(); });
  json out{{"command", "verify-paper"}, {"assertions", log}, {"passed", passed}};
  for (const auto& a : log) {
    if (!a["pass"].get<bool>()) {
      out["first_failure"] = a["suite"].get<std::string>() + ": " + a["assertion"].get<std::string>();
      break;
    }
  }
  return out;
}

OperatorFile load_operator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open operator file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("malformed operator file: ") + e.what());
  }
  if (!doc.contains("field") || !doc.contains("group") || !doc.contains("rows") || !doc["rows"].is_array())
    throw Error(ErrorKind::kParseError, "operator file needs field, group and rows");
  Ambient ambient = make_ambient(doc["field"].get<std::string>(), doc["group"].get<std::string>());
  const GroupAlgebra& kg = *ambient.algebra;
  if (doc["rows"].size() != kg.dimension())
    throw Error(ErrorKind::kParseError, "operator needs " + std::to_string(kg.dimension()) + " rows");
  FpMatrix m(kg.p(), 0, kg.dimension());
  for (const auto& row : doc["rows"]) m.append_row(unpack_row(row.get<std::string>(), kg.p(), kg.dimension()));
  FLinearOperator op(ambient.algebra, std::move(m));
  return {std::move(ambient), std::move(op)};
}

void save_operator(const std::string& path, const Ambient& ambient, const FLinearOperator& op) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  out << json{{"field", ambient.field_spec}, {"group", ambient.group_spec}, {"rows", hex_rows(op.matrix())}}.dump(2)
      << '\n';
}

std::string render_analysis(const json& report) {
  std::ostringstream out;
  out << "ambient: " << report["ambient"]["description"].get<std::string>() << " ["
      << report["ambient"]["field_canonical"].get<std::string>() << "]\n";
  if (report.contains("element")) {
    const auto& e = report["element"];
    out << "element: " << e["text"].get<std::string>() << " idempotent=" << yes_no(e["idempotent"]) << '\n';
  }
  if (report.contains("projector")) {
    const auto& p = report["projector"];
    out << "operator: fg_linear=" << yes_no(p["fg_linear"]) << " kg_linear=" << yes_no(p["kg_linear"])
        << " idempotent=" << yes_no(p["idempotent"]) << " right_multiplication=" << yes_no(p["is_right_multiplication"])
        << '\n';
    for (const auto& [form, v] : p["self_adjoint"].items()) out << "  self_adjoint " << form << "=" << yes_no(v) << '\n';
  }
  for (const auto& w : report["warnings"]) out << "warning: " << w.get<std::string>() << '\n';
  for (const auto& [name, code] : report["codes"].items()) render_code(out, name, code);
  for (const auto& [form, c] : report["criteria"].items()) {
    out << "criteria " << form << ": gram_rank=" << c["gram_rank"].get<std::size_t>()
        << " gram_zero=" << yes_no(c["gram_zero"]) << '\n';
    render_check(out, "lcd (rank M_e = dim FGe)", c["lcd"]);
    render_check(out, "self-dual (M_e = 0, dim FGe = mn/2)", c["self_dual"]);
    render_check(out, "ideal self-dual (e* = 1 - e)", c["ideal_self_dual"]);
  }
  out << "cross-checks: " << (report["cross_checks_ok"].get<bool>() ? "ok" : "FAILED") << '\n';
  return out.str();
}

std::string render_search(const json& report) {
  std::ostringstream out;
  out << "ambient: " << report["ambient"]["description"].get<std::string>() << '\n';
  out << "scanned " << report["scan"]["size"].get<std::uint64_t>() << " elements ("
      << report["scan"]["coefficients"].get<std::string>() << " coefficients), idempotents found: "
      << report["idempotents_found"].get<std::size_t>() << '\n';
  out << "filter " << report["filter"].get<std::string>() << " on " << report["code"].get<std::string>()
      << ": " << report["hit_count"].get<std::size_t>() << " hits\n";
  for (const auto& h : report["hits"]) {
    out << "  " << h["element"].get<std::string>() << "  dim_F=" << h["dim_f"].get<std::size_t>()
        << " parameters=" << parameters_text(h["parameters"]);
    for (const auto& [form, v] : h["forms"].items()) {
      out << "  " << form << ": lcd=" << yes_no(v["lcd"]) << " self_dual=" << yes_no(v["self_dual"]);
      if (v.contains("star_complement")) out << " star_complement=" << yes_no(v["star_complement"]);
    }
    out << '\n';
  }
  out << "cross-checks: " << (report["cross_checks_ok"].get<bool>() ? "ok" : "FAILED") << '\n';
  return out.str();
}

std::string render_verify(const json& report) {
  std::ostringstream out;
  for (const auto& a : report["assertions"]) {
    out << (a["pass"].get<bool>() ? "PASS  " : "FAIL  ") << a["suite"].get<std::string>() << ": "
        << a["assertion"].get<std::string>();
    if (a.contains("error")) out << "  (" << a["error"].get<std::string>() << ')';
    out << '\n';
  }
  if (report["passed"].get<bool>()) {
    out << "all " << report["assertions"].size() << " assertions passed\n";
  } else {
    out << "first failure: " << report["first_failure"].get<std::string>() << '\n';
  }
  return out.str();
}

}  // namespace groupcodes::cli
