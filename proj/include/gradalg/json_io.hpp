#pragma once

#include <json.hpp>

#include "gradalg/realization.hpp"

namespace gradalg {

using Json = nlohmann::ordered_json;

/// Input shape violation; carries the path to the offending field.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& path, const std::string& what)
        : std::runtime_error(what + " (at " + path + ")"), field_path(path) {}
    std::string field_path;
};

Json abelian_to_json(const AbelianGroup& h);
AbelianGroup abelian_from_json(const Json& j, const std::string& path);

Json element_to_json(const AbelianElement& a);
AbelianElement element_from_json(const AbelianGroup& h, const Json& j, const std::string& path);

Json group_to_json(const FiniteGroup& g);
/// Accepts {"name": "D4"} or {"cayley": [[...]], "names": [...]}.
FiniteGroup group_from_json(const Json& j, const std::string& path);
/// Accepts a builtin name ("D4", "Z2xZ4", ...) or inline group JSON.
FiniteGroup group_from_spec(const std::string& spec, const std::string& path);

Json extension_to_json(const Extension& ext);
Extension extension_from_json(const Json& j, const std::string& path);

Json bicharacter_to_json(const Bicharacter& phi);
Bicharacter bicharacter_from_json(const AbelianGroup& h, const Json& j, const std::string& path);

Json cocycle_to_json(const Cocycle2H& alpha);
Cocycle2H cocycle_from_json(const AbelianGroup& h, const Json& j, const std::string& path);

Json cyclotomic_to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const Json& j, const std::string& path);

Json algebra_to_json(const GradedAlgebra& a);

Json bsz_to_json(const BSZPresentation& p);
BSZPresentation bsz_from_json(const Json& j, const std::string& path);

Json presentation_to_json(const CrossedPresentation& p);
CrossedPresentation presentation_from_json(const Json& j, const std::string& path);

Json structure_report_to_json(const StructureReport& r);
Json case_rows_to_json(const std::vector<CaseRow>& rows);
std::string case_rows_to_markdown(const std::vector<CaseRow>& rows);

/// Runs one CLI job; writes the report to `out` and diagnostics to `err`.
/// Exit status: 0 success, 1 mathematical rejection, 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradalg
