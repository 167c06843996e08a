#include "resheight/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace resheight {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string join_ints(const std::vector<long long>& v) {
    std::string out;
    for (long long x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

ordered_json findex_json(const findex& idx) {
    return ordered_json::array({idx.m, idx.k, idx.kp, idx.mp});
}

double as_double(long double v) { return static_cast<double>(v); }

} // namespace

ordered_json terms_to_json(const sparse_poly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [mono, coeff] : p.sorted_terms()) {
        ordered_json exps = ordered_json::array();
        for (int i = 0; i < p.univ().arity(); ++i) exps.push_back(exponent(mono, i));
        arr.push_back({{"exps", std::move(exps)}, {"coeff", to_string(coeff)}});
    }
    return arr;
}

sparse_poly terms_from_json(const universe& u, const ordered_json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("terms_from_json: expected an array");
    sparse_poly p(u);
    for (const auto& entry : arr) {
        if (!entry.is_object() || !entry.contains("exps") || !entry.contains("coeff"))
            throw std::invalid_argument("terms_from_json: entry must have exps and coeff");
        const auto& je = entry["exps"];
        if (!je.is_array() || static_cast<int>(je.size()) != u.arity())
            throw std::invalid_argument("terms_from_json: exps arity mismatch");
        std::vector<int> exps;
        exps.reserve(je.size());
        for (const auto& e : je) exps.push_back(e.get<int>());
        p.add_term(make_monomial(u, exps), bigint(entry["coeff"].get<std::string>()));
    }
    return p;
}

ordered_json expand_to_json(const sylvester_spec& spec, const sparse_poly& p) {
    ordered_json out;
    out["m"] = spec.m;
    out["n"] = spec.n;
    out["height"] = to_string(p.height());
    out["terms"] = terms_to_json(p);
    return out;
}

std::string expand_to_csv(const sylvester_spec& spec, const sparse_poly& p) {
    std::ostringstream os;
    for (int i = 0; i <= spec.m; ++i) os << "f_" << i << ",";
    for (int j = 0; j <= spec.n; ++j) os << "g_" << j << ",";
    os << "coeff\n";
    for (const auto& [mono, coeff] : p.sorted_terms()) {
        for (int i = 0; i < p.univ().arity(); ++i) os << exponent(mono, i) << ",";
        os << to_string(coeff) << "\n";
    }
    return os.str();
}

ordered_json quad_to_json(const quad_height_result& q, const std::vector<bigint>* profile) {
    ordered_json out;
    out["n"] = q.n;
    out["A"] = q.A;
    out["height"] = to_string(q.height);
    out["extremal_exps"] = q.extremal_exps;
    if (profile) {
        ordered_json rows = ordered_json::array();
        for (size_t z = 0; z < profile->size(); ++z)
            rows.push_back({{"z", z}, {"n_P_z", to_string((*profile)[z])}});
        out["profile"] = std::move(rows);
    }
    return out;
}

std::string quad_to_csv(const quad_height_result& q, const std::vector<bigint>* profile) {
    std::ostringstream os;
    os << "n,A,height\n" << q.n << "," << q.A << "," << to_string(q.height) << "\n";
    if (profile) {
        os << "# profile: z, n*P(z)\n";
        for (size_t z = 0; z < profile->size(); ++z)
            os << z << "," << to_string((*profile)[z]) << "\n";
    }
    return os.str();
}

ordered_json hl_rows_to_json(int n, const std::vector<hl_max_result>& rows) {
    ordered_json out;
    out["n"] = n;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json am = ordered_json::array();
        for (const auto& idx : r.argmax) am.push_back(findex_json(idx));
        arr.push_back({{"l", r.l}, {"value", to_string(r.value)}, {"argmax", std::move(am)}});
    }
    out["layers"] = std::move(arr);
    return out;
}

std::string hl_rows_to_csv(int n, const std::vector<hl_max_result>& rows) {
    std::ostringstream os;
    os << "l,value,argmax\n";
    for (const auto& r : rows) {
        std::string am;
        for (const auto& idx : r.argmax)
            am += (am.empty() ? "" : " ") + std::to_string(idx.m) + ":" + std::to_string(idx.k) +
                  ":" + std::to_string(idx.kp) + ":" + std::to_string(idx.mp);
        os << r.l << "," << to_string(r.value) << "," << csv_escape(am) << "\n";
    }
    (void)n;
    return os.str();
}

namespace {
struct an_row {
    int a;
    std::vector<long long> ns;
};
std::vector<an_row> an_rows(int n_max) {
    std::vector<an_row> rows;
    for (long long n = 3; n <= n_max; ++n) {
        int a = compute_A(n);
        if (rows.empty() || rows.back().a != a) rows.push_back({a, {}});
        rows.back().ns.push_back(n);
    }
    return rows;
}
} // namespace

ordered_json table_an_to_json(int n_max) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : an_rows(n_max)) arr.push_back({{"A", row.a}, {"n", row.ns}});
    return arr;
}

std::string table_an_to_csv(int n_max) {
    std::ostringstream os;
    os << "A_n,n\n";
    for (const auto& row : an_rows(n_max)) os << row.a << "," << csv_escape(join_ints(row.ns)) << "\n";
    return os.str();
}

ordered_json table_hl_to_json(int n_max) {
    ordered_json arr = ordered_json::array();
    for (int n = 1; n <= n_max; ++n) {
        auto canon = canonical_argmax(hl_argmax_table(n), n);
        arr.push_back({{"n", n}, {"l", std::vector<int>(canon.begin(), canon.end())}});
    }
    return arr;
}

std::string table_hl_to_csv(int n_max) {
    std::ostringstream os;
    os << "n,l\n";
    for (int n = 1; n <= n_max; ++n) {
        auto canon = canonical_argmax(hl_argmax_table(n), n);
        std::vector<long long> ls(canon.begin(), canon.end());
        os << n << "," << csv_escape(join_ints(ls)) << "\n";
    }
    return os.str();
}

ordered_json constants_to_json() {
    auto s = constants();
    ordered_json arr = ordered_json::array();
    for (const auto* ac : s.all()) {
        ordered_json entry;
        entry["name"] = ac->name;
        entry["value"] = as_double(ac->value);
        if (!ac->poly.empty()) {
            entry["poly"] = ac->poly;
            entry["bracket"] = {as_double(ac->lo), as_double(ac->hi)};
        }
        arr.push_back(std::move(entry));
    }
    auto rep = identity_checks();
    ordered_json out;
    out["constants"] = std::move(arr);
    out["identities"] = {{"ratio_cubed", as_double(rep.ratio_cubed)},
                         {"ratio_squared", as_double(rep.ratio_squared)},
                         {"constraint", as_double(rep.constraint)},
                         {"sum_vs_c", as_double(rep.sum_vs_c)},
                         {"perturbed_ratio", as_double(rep.perturbed_ratio)},
                         {"an_ratio_error", as_double(rep.an_ratio_error)},
                         {"pass", rep.pass}};
    return out;
}

std::string constants_to_csv() {
    auto s = constants();
    std::ostringstream os;
    os << "name,value\n";
    os.precision(17);
    for (const auto* ac : s.all()) os << ac->name << "," << as_double(ac->value) << "\n";
    return os.str();
}

ordered_json convergence_to_json(const convergence_summary& s) {
    ordered_json out;
    out["case"] = s.which;
    ordered_json grid = ordered_json::array();
    for (const auto& row : s.grid)
        grid.push_back({{"n", row.n},
                        {"exact", to_string(row.exact)},
                        {"estimate", as_double(row.estimate)},
                        {"ratio", as_double(row.ratio)}});
    out["grid"] = std::move(grid);
    out["slope"] = as_double(s.slope);
    out["rho_small"] = as_double(s.rho_small);
    out["rho_end"] = as_double(s.rho_end);
    return out;
}

std::string convergence_to_csv(const convergence_summary& s) {
    std::ostringstream os;
    os.precision(17);
    os << "n,exact,estimate,ratio\n";
    for (const auto& row : s.grid)
        os << row.n << "," << to_string(row.exact) << "," << as_double(row.estimate) << ","
           << as_double(row.ratio) << "\n";
    os << "# case=" << s.which << "\n";
    os << "# slope=" << as_double(s.slope) << "\n";
    os << "# rho_small=" << as_double(s.rho_small) << "\n";
    os << "# rho_end=" << as_double(s.rho_end) << "\n";
    return os.str();
}

ordered_json suite_to_json(const suite_report& rep) {
    ordered_json out;
    out["suite"] = rep.suite;
    out["cases_run"] = rep.cases_run;
    ordered_json fails = ordered_json::array();
    for (const auto& f : rep.failures)
        fails.push_back({{"case", f.case_key},
                         {"inputs", f.inputs},
                         {"expected", f.expected},
                         {"actual", f.actual},
                         {"provenance", f.provenance}});
    out["failures"] = std::move(fails);
    out["passed"] = rep.passed();
    return out;
}

ordered_json suites_to_json(const std::vector<suite_report>& reps) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reps) arr.push_back(suite_to_json(rep));
    return arr;
}

std::string suites_to_csv(const std::vector<suite_report>& reps) {
    std::ostringstream os;
    os << "suite,cases_run,failures,passed\n";
    for (const auto& rep : reps)
        os << rep.suite << "," << rep.cases_run << "," << rep.failures.size() << ","
           << (rep.passed() ? "true" : "false") << "\n";
    bool any = false;
    for (const auto& rep : reps) any = any || !rep.failures.empty();
    if (any) {
        os << "# failures: suite,case,inputs,expected,actual,provenance\n";
        for (const auto& rep : reps)
            for (const auto& f : rep.failures)
                os << rep.suite << "," << csv_escape(f.case_key) << "," << csv_escape(f.inputs)
                   << "," << csv_escape(f.expected) << "," << csv_escape(f.actual) << ","
                   << csv_escape(f.provenance) << "\n";
    }
    return os.str();
}

ordered_json conjecture_to_json(const conjecture_result& r) {
    ordered_json out;
    out["m"] = r.m;
    out["n"] = r.n;
    out["full_height"] = to_string(r.full_height);
    out["binomial_height"] = to_string(r.binomial_height);
    out["equal"] = r.equal;
    return out;
}

std::string conjecture_to_csv(const conjecture_result& r) {
    std::ostringstream os;
    os << "m,n,full_height,binomial_height,equal\n";
    os << r.m << "," << r.n << "," << to_string(r.full_height) << ","
       << to_string(r.binomial_height) << "," << (r.equal ? "true" : "false") << "\n";
    return os.str();
}

ordered_json monotonic_to_json(const monotonic_report& r) {
    ordered_json out;
    out["case"] = r.which;
    out["n_lo"] = r.n_lo;
    out["n_max"] = r.n_max;
    out["first_violation"] = r.first_violation;
    ordered_json hs = ordered_json::array();
    for (const auto& h : r.heights) hs.push_back(to_string(h));
    out["heights"] = std::move(hs);
    return out;
}

} // namespace resheight
