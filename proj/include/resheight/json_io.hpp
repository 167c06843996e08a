#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "resheight/asymptotics.hpp"
#include "resheight/cubic.hpp"
#include "resheight/quad.hpp"
#include "resheight/sparse_poly.hpp"
#include "resheight/sylvester.hpp"
#include "resheight/verify.hpp"

namespace resheight {

using ordered_json = nlohmann::ordered_json;

// Canonical polynomial serialization: array of {"exps": [..], "coeff": "<decimal
// string>"} in canonical term order. Coefficients travel as strings because JSON
// numbers truncate past 2^53.
ordered_json terms_to_json(const sparse_poly& p);

// Inverse of terms_to_json over a given universe; rejects arity mismatches and
// malformed entries. terms_from_json(u, terms_to_json(p)) == p.
sparse_poly terms_from_json(const universe& u, const ordered_json& arr);

// Full expansion payload: header {"m", "n", "height"} plus the term array.
ordered_json expand_to_json(const sylvester_spec& spec, const sparse_poly& p);
std::string expand_to_csv(const sylvester_spec& spec, const sparse_poly& p);

ordered_json quad_to_json(const quad_height_result& q, const std::vector<bigint>* profile);
std::string quad_to_csv(const quad_height_result& q, const std::vector<bigint>* profile);

// Rows of per-layer maxima (cubic case).
ordered_json hl_rows_to_json(int n, const std::vector<hl_max_result>& rows);
std::string hl_rows_to_csv(int n, const std::vector<hl_max_result>& rows);

// Printed-table reproductions. an: consecutive n grouped by shared A_n value
// (columns: A_n, list of n), 3 <= n <= n_max. hl: canonical maximizing-layer
// sets for 1 <= n <= n_max.
ordered_json table_an_to_json(int n_max);
std::string table_an_to_csv(int n_max);
ordered_json table_hl_to_json(int n_max);
std::string table_hl_to_csv(int n_max);

// All algebraic constants plus the identity-check report.
ordered_json constants_to_json();
std::string constants_to_csv();

ordered_json convergence_to_json(const convergence_summary& s);
std::string convergence_to_csv(const convergence_summary& s);

// Deterministic report serialization: wall time is deliberately omitted so
// identical flags give byte-identical output.
ordered_json suite_to_json(const suite_report& rep);
ordered_json suites_to_json(const std::vector<suite_report>& reps);
std::string suites_to_csv(const std::vector<suite_report>& reps);

ordered_json conjecture_to_json(const conjecture_result& r);
std::string conjecture_to_csv(const conjecture_result& r);

ordered_json monotonic_to_json(const monotonic_report& r);

} // namespace resheight
