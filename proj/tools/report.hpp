#pragma once

// JSON reports for the groupcodes command line tool. The schema is
// described in docs/report-schema.md; text output is rendered from the
// same JSON so the two never disagree.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupcodes/codes.hpp"
#include "groupcodes/group_algebra.hpp"
#include "groupcodes/operators.hpp"

namespace groupcodes::cli {

using nlohmann::json;

struct Ambient {
  std::string field_spec;
  std::string group_spec;
  GroupAlgebraPtr algebra;
};

Ambient make_ambient(const std::string& field_spec, const std::string& group_spec);

/// Throws kParseError when a Hermitian form is requested with m odd.
void check_forms(const GroupAlgebra& kg, const std::vector<FormKind>& forms);
/// TE, plus TH when m is even.
std::vector<FormKind> default_forms(const GroupAlgebra& kg);

json ambient_json(const Ambient& ambient);
json code_json(const AdditiveCode& code, const std::vector<FormKind>& forms, std::uint64_t cap);

json analyze_element(const Ambient& ambient, const AlgebraElement& e, const std::vector<FormKind>& forms,
                     std::uint64_t cap);
json analyze_projector(const Ambient& ambient, const FLinearOperator& p, const std::vector<FormKind>& forms,
                       std::uint64_t cap);

enum class SearchFilter { kAll, kLcd, kSelfDual };
enum class SearchCode { kKGe, kFGe };

json search_idempotents(const Ambient& ambient, const ScanSet& set, SearchFilter filter, SearchCode code,
                        const std::vector<FormKind>& forms, std::uint64_t cap);

/// Fault injected into the built-in examples for the negative control.
enum class Fault { kNone, kModulus, kElement };

/// Runs the embedded examples. "passed" is true iff every assertion holds.
json verify_paper(Fault fault);

/// Operator file: {"field", "group", "rows": [hex rows]}.
struct OperatorFile {
  Ambient ambient;
  FLinearOperator op;
};
OperatorFile load_operator(const std::string& path);
void save_operator(const std::string& path, const Ambient& ambient, const FLinearOperator& op);

std::string render_analysis(const json& report);
std::string render_search(const json& report);
std::string render_verify(const json& report);

}  // namespace groupcodes::cli
