// groupcodes: command line front end.
//
//   groupcodes verify-paper [--json]
//   groupcodes analyze --field q=2,m=3 --group cyclic:3 --element "1+g+g^2" [--form TE,TH]
//   groupcodes analyze --projector op.json
//   groupcodes search --field q=2,m=2 --group cyclic:6 --support 2,4 [--filter self-dual]
//
// Exit status: 0 success, 1 failed assertion or cross-check, 2 usage error.

#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "groupcodes/equivalence.hpp"
#include "groupcodes/error.hpp"
#include "groupcodes/parse.hpp"
#include "report.hpp"

namespace {

using groupcodes::cli::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string field;
  std::string group;
  std::string forms;
  std::uint64_t cap = groupcodes::kDefaultEnumerationCap;
  std::uint64_t seed = 1;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool ambient_required) {
  auto* field = cmd->add_option("--field", c.field, "field spec, e.g. q=2,m=3[,modulus=c0,c1,...]");
  auto* group = cmd->add_option("--group", c.group, "cyclic:k, dihedral:k, symmetric:k, product:AxB, table:path");
  if (ambient_required) {
    field->required();
    group->required();
  }
  cmd->add_option("--form", c.forms, "comma separated forms among E, TE, H, TH");
  cmd->add_option("--cap", c.cap, "largest enumeration allowed")->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for randomized isomorphism search")->capture_default_str();
  cmd->add_flag("--json", c.json, "print the JSON report");
}

std::vector<groupcodes::FormKind> forms_for(const groupcodes::GroupAlgebra& kg, const std::string& text) {
  auto forms = text.empty() ? groupcodes::cli::default_forms(kg) : groupcodes::parse_form_list(text);
  groupcodes::cli::check_forms(kg, forms);
  return forms;
}

int emit(const json& report, bool as_json, std::string (*render)(const json&), bool ok) {
  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << render(report);
  }
  return ok ? kExitOk : kExitFailure;
}

json mvn_json(const groupcodes::AlgebraElement& e, const groupcodes::AlgebraElement& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto r = groupcodes::mvn_idempotents(e, f, rng);
  json out{{"f", f.format()}, {"decision", std::string(groupcodes::to_string(r.decision))}};
  if (r.witness) out["witness"] = json{{"u", r.witness->b.format()}, {"v", r.witness->a.format()}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive left group codes in group algebras KG"};
  app.require_subcommand(1);

  Common verify_opts;
  std::string fault = "none";
  auto* verify = app.add_subcommand("verify-paper", "check the built-in worked examples");
  verify->add_flag("--json", verify_opts.json, "print the JSON report");
  verify->add_option("--inject-fault", fault, "negative control: none, modulus or element")
      ->check(CLI::IsMember({"none", "modulus", "element"}))
      ->group("");

  Common analyze_opts;
  std::string element;
  std::string projector;
  std::string mvn_with;
  auto* analyze = app.add_subcommand("analyze", "analyze an idempotent or a projector");
  add_common(analyze, analyze_opts, false);
  analyze->add_option("--element", element, "element literal, e.g. \"(a^2)*g2 + a*g4\"");
  analyze->add_option("--projector", projector, "operator file (JSON)");
  analyze->add_option("--mvn", mvn_with, "second idempotent f: decide e ~ f in KG");

  Common search_opts;
  std::string support;
  std::string coeffs = "K";
  std::string filter = "all";
  std::string code = "KGe";
  std::uint64_t scan_cap = groupcodes::kDefaultScanCap;
  auto* search = app.add_subcommand("search", "enumerate idempotents and filter their codes");
  add_common(search, search_opts, true);
  search->add_option("--support", support, "group indices allowed in the support, e.g. 2,4");
  search->add_option("--coeffs", coeffs, "coefficient alphabet")->check(CLI::IsMember({"K", "F"}));
  search->add_option("--filter", filter, "which hits to report")->check(CLI::IsMember({"all", "lcd", "self-dual"}));
  search->add_option("--code", code, "code generated by each idempotent")->check(CLI::IsMember({"KGe", "FGe"}));
  search->add_option("--scan-cap", scan_cap, "largest idempotent scan allowed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  using namespace groupcodes;
  try {
    if (*verify) {
      const cli::Fault f = fault == "modulus"   ? cli::Fault::kModulus
                           : fault == "element" ? cli::Fault::kElement
                                                : cli::Fault::kNone;
      const json report = cli::verify_paper(f);
      return emit(report, verify_opts.json, cli::render_verify, report["passed"].get<bool>());
    }

    if (*analyze) {
      if (element.empty() == projector.empty()) {
        std::cerr << "analyze: give exactly one of --element and --projector\n";
        return kExitUsage;
      }
      if (!projector.empty()) {
        const cli::OperatorFile file = cli::load_operator(projector);
        const auto forms = forms_for(*file.ambient.algebra, analyze_opts.forms);
        const json report = cli::analyze_projector(file.ambient, file.op, forms, analyze_opts.cap);
        return emit(report, analyze_opts.json, cli::render_analysis, true);
      }
      if (analyze_opts.field.empty() || analyze_opts.group.empty()) {
        std::cerr << "analyze: --element needs --field and --group\n";
        return kExitUsage;
      }
      const cli::Ambient ambient = cli::make_ambient(analyze_opts.field, analyze_opts.group);
      const auto forms = forms_for(*ambient.algebra, analyze_opts.forms);
      const AlgebraElement e = parse_element(ambient.algebra, element);
      json report = cli::analyze_element(ambient, e, forms, analyze_opts.cap);
      if (!mvn_with.empty()) report["mvn"] = mvn_json(e, parse_element(ambient.algebra, mvn_with), analyze_opts.seed);
      std::string text_extra;
      if (!analyze_opts.json && report.contains("mvn")) {
        text_extra = "mvn e ~ " + report["mvn"]["f"].get<std::string>() + ": " +
                     report["mvn"]["decision"].get<std::string>() + '\n';
        if (report["mvn"].contains("witness"))
          text_extra += "  u = " + report["mvn"]["witness"]["u"].get<std::string>() +
                        ", v = " + report["mvn"]["witness"]["v"].get<std::string>() + '\n';
      }
      const int status = emit(report, analyze_opts.json, cli::render_analysis, report["cross_checks_ok"].get<bool>());
      std::cout << text_extra;
      return status;
    }

    if (*search) {
      const cli::Ambient ambient = cli::make_ambient(search_opts.field, search_opts.group);
      const auto forms = forms_for(*ambient.algebra, search_opts.forms);
      ScanSet set{parse_index_list(support), coeffs == "F"};
      const auto which = filter == "lcd"         ? cli::SearchFilter::kLcd
                         : filter == "self-dual" ? cli::SearchFilter::kSelfDual
                                                 : cli::SearchFilter::kAll;
      const json report = cli::search_idempotents(ambient, set, which,
                                                  code == "FGe" ? cli::SearchCode::kFGe : cli::SearchCode::kKGe,
                                                  forms, scan_cap);
      return emit(report, search_opts.json, cli::render_search, report["cross_checks_ok"].get<bool>());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kCrossCheckFailed ? kExitFailure : kExitUsage;
  }
  return kExitUsage;
}
