#pragma once

#include <json.hpp>

#include "gstruct/catalog.hpp"
#include "gstruct/classify.hpp"
#include "gstruct/models.hpp"

#include <iosfwd>

namespace gstruct {

using Json = nlohmann::ordered_json;

// Report builders, one per command. Payloads are exact: dimensions and
// counts as integers, coefficients as "p" or "p/q" strings, tensors as
// term tables. Key insertion order is fixed, so serialization is
// deterministic.
Json cases_report();
Json decompose_report(CaseName name);
Json torsion_case_report(CaseName name);
Json check_characters_report(CaseName name);
Json theta_rank_report(ModelName m);
Json solve_torsion_report(ModelName m, const std::string& gamma_text, const std::string& origin);
Json isotropy_example_report(const std::string& which);  // heisenberg | solvable
Json isotropy_model_report(ModelName m, const std::string& torsion_text, const std::string& origin);
Json classify_json_report(int max_m = 12);

// "dir i j p/q" lines, blank lines skipped. Indices are validated here so a
// bad file surfaces as InputError, not as an internal failure.
MValuedForm gamma_from_text(int n, const std::string& text);

// Markdown view of a report: the command as title, scalars as bullets,
// arrays of uniform objects as tables, nested objects as sections. Every
// scalar of the JSON tree appears verbatim, so the two renderings carry
// identical numeric content.
std::string render_markdown(const Json& report);

// Command-line entry point; returns the process exit code. 0 success,
// 2 unusable command line or input file, 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gstruct
