#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resheight/json_io.hpp"

using namespace resheight;

namespace {

// RESHEIGHT_NMAX overrides the default value of every defaulted envelope flag
// (tables --max, asym --n-max, verify --n-max). Explicit flags still win.
int env_nmax(int fallback) {
    const char* s = std::getenv("RESHEIGHT_NMAX");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1 || v > 1000000000)
        throw std::invalid_argument("RESHEIGHT_NMAX must be a positive integer, got '" +
                                    std::string(s) + "'");
    return static_cast<int>(v);
}

struct emitter {
    std::string fmt = "json";
    bool quiet = false;
    void out(const ordered_json& j, const std::string& csv) const {
        if (quiet) return;
        if (fmt == "csv")
            std::cout << csv;
        else
            std::cout << j.dump(2) << "\n";
    }
};

// Exact layer maximum by the default routing, falling back to the slice
// oracle for the mid layers at 15 <= n <= 30 where no formula applies.
hl_max_result hl_auto(int l, int n) {
    try {
        return Hl_max(l, n);
    } catch (const feasibility_error&) {
        if (n > 30) throw;
        return Hl_max_slice(l, n);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resheight: exact coefficient heights of generic Sylvester resultants"};
    app.require_subcommand(1);

    emitter em;
    app.add_option("--out", em.fmt, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--quiet", em.quiet, "suppress stdout (exit code still reports the outcome)");

    int exit_rc = 0;

    // expand
    auto* sc_expand =
        app.add_subcommand("expand", "fully expand Res(f, g) over indeterminate coefficients");
    int ex_m = 0, ex_n = 0;
    std::string engine = "laplace";
    sc_expand->add_option("--m", ex_m, "degree of f (<= 4)")->required();
    sc_expand->add_option("--n", ex_n, "degree of g (<= 30)")->required();
    sc_expand->add_option("--engine", engine, "expansion engine")
        ->check(CLI::IsMember({"laplace", "naive"}))
        ->capture_default_str();
    sc_expand->fallthrough();
    sc_expand->callback([&] {
        sylvester_spec spec{ex_m, ex_n};
        sparse_poly p = engine == "naive" ? naive_determinant(build_matrix(spec))
                                          : expand_resultant(spec);
        em.out(expand_to_json(spec, p), expand_to_csv(spec, p));
    });

    // quad
    auto* sc_quad = app.add_subcommand("quad", "height of Res(f, g) for deg f = 2 (closed form)");
    long long q_n = 0;
    bool q_profile = false;
    sc_quad->add_option("--n", q_n, "degree of g (>= 3)")->required();
    sc_quad->add_flag("--profile", q_profile, "include the full n*P(z) profile");
    sc_quad->fallthrough();
    sc_quad->callback([&] {
        auto q = quad_height(q_n);
        std::optional<std::vector<bigint>> prof;
        if (q_profile) prof = P_profile(q_n);
        em.out(quad_to_json(q, prof ? &*prof : nullptr),
               quad_to_csv(q, prof ? &*prof : nullptr));
    });

    // cubic
    auto* sc_cubic =
        app.add_subcommand("cubic", "per-layer heights H_l of Res(f, g) for deg f = 3");
    int c_n = 0, c_l = -1;
    bool c_all = false;
    std::string method;
    sc_cubic->add_option("--n", c_n, "degree of g")->required();
    auto* lopt = sc_cubic->add_option("--l", c_l, "single layer, 0 <= l <= n");
    sc_cubic->add_flag("--all-l", c_all, "all layers 0..n")->excludes(lopt);
    sc_cubic->add_option("--method", method,
                         "force a route: formula (printed closed forms, n >= 10) or expand "
                         "(slice oracle, n <= 30); default picks an exact route automatically")
        ->check(CLI::IsMember({"formula", "expand"}));
    sc_cubic->fallthrough();
    sc_cubic->callback([&] {
        if (!c_all && c_l < 0)
            throw std::invalid_argument("cubic: pass --l <int> or --all-l");
        auto one = [&](int l) {
            if (method == "formula") return Hl_max_formula(l, c_n);
            if (method == "expand") return Hl_max_slice(l, c_n);
            return hl_auto(l, c_n);
        };
        std::vector<hl_max_result> rows;
        if (c_all)
            for (int l = 0; l <= c_n; ++l) rows.push_back(one(l));
        else
            rows.push_back(one(c_l));
        em.out(hl_rows_to_json(c_n, rows), hl_rows_to_csv(c_n, rows));
    });

    // tables
    auto* sc_tables = app.add_subcommand("tables", "reproduce the printed tables");
    sc_tables->require_subcommand(1);
    sc_tables->fallthrough();
    auto* sc_an = sc_tables->add_subcommand("an", "A_n by groups of consecutive n (3 <= n <= max)");
    int an_max = 0;
    sc_an->add_option("--max", an_max, "largest n (default 99)");
    sc_an->fallthrough();
    sc_an->callback([&] {
        int mx = an_max > 0 ? an_max : env_nmax(99);
        if (mx < 3) throw std::invalid_argument("tables an: --max must be >= 3");
        em.out(table_an_to_json(mx), table_an_to_csv(mx));
    });
    auto* sc_hl = sc_tables->add_subcommand("hl", "maximizing layers per n (1 <= n <= max)");
    int hl_max_n = 0;
    sc_hl->add_option("--max", hl_max_n, "largest n (default 18, envelope 30)");
    sc_hl->fallthrough();
    sc_hl->callback([&] {
        int mx = hl_max_n > 0 ? hl_max_n : env_nmax(18);
        if (mx < 1) throw std::invalid_argument("tables hl: --max must be >= 1");
        em.out(table_hl_to_json(mx), table_hl_to_csv(mx));
    });

    // asym
    auto* sc_asym = app.add_subcommand("asym", "height vs the leading asymptotic term");
    std::string as_case;
    int as_nmax = 0;
    sc_asym->add_option("--case", as_case, "which height family")
        ->required()
        ->check(CLI::IsMember({"quad", "cubic"}));
    sc_asym->add_option("--n-max", as_nmax, "top of the geometric grid (default 2000)");
    sc_asym->fallthrough();
    sc_asym->callback([&] {
        auto s = measure_convergence(as_case, as_nmax > 0 ? as_nmax : env_nmax(2000));
        em.out(convergence_to_json(s), convergence_to_csv(s));
    });

    // constants
    auto* sc_const = app.add_subcommand("constants", "algebraic constants and identity checks");
    sc_const->fallthrough();
    sc_const->callback([&] { em.out(constants_to_json(), constants_to_csv()); });

    // verify
    auto* sc_verify = app.add_subcommand("verify", "run verification suites (exit 1 on failure)");
    std::vector<std::string> ver_names;
    bool ver_all = false;
    int ver_nmax = 0;
    sc_verify->add_option("suites", ver_names, "suite names (default: all)")
        ->check(CLI::IsMember(suite_names()));
    sc_verify->add_flag("--all", ver_all, "run every suite");
    sc_verify->add_option("--n-max", ver_nmax, "override each suite's default envelope");
    sc_verify->fallthrough();
    sc_verify->callback([&] {
        std::vector<std::string> run = ver_names;
        if (ver_all || run.empty()) run = suite_names();
        int nm = ver_nmax > 0 ? ver_nmax : env_nmax(0);
        std::vector<suite_report> reps;
        reps.reserve(run.size());
        for (const auto& name : run) reps.push_back(run_suite(name, nm));
        em.out(suites_to_json(reps), suites_to_csv(reps));
        for (const auto& rep : reps)
            if (!rep.passed()) exit_rc = 1;
    });

    // conjecture
    auto* sc_conj =
        app.add_subcommand("conjecture", "compare the full height against the two-term g");
    int cj_m = 0, cj_n = 0;
    sc_conj->add_option("--m", cj_m, "degree of f (<= 4)")->required();
    sc_conj->add_option("--n", cj_n, "degree of g (<= 12)")->required();
    sc_conj->fallthrough();
    sc_conj->callback([&] {
        auto r = conjecture_probe(cj_m, cj_n);
        em.out(conjecture_to_json(r), conjecture_to_csv(r));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; any parse failure is a usage error
    } catch (const feasibility_error& e) {
        std::cerr << "feasibility: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_rc;
}
