#include "resheight/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "resheight/asymptotics.hpp"
#include "resheight/cubic.hpp"
#include "resheight/errors.hpp"
#include "resheight/quad.hpp"
#include "resheight/sylvester.hpp"

namespace resheight {

namespace {

struct collector {
    suite_report& rep;
    void case_checked() { ++rep.cases_run; }
    void fail(std::string key, std::string inputs, std::string expected, std::string actual,
              std::string provenance) {
        rep.failures.push_back({std::move(key), std::move(inputs), std::move(expected),
                                std::move(actual), std::move(provenance)});
    }
    void check(bool ok, const std::string& key, const std::string& inputs,
               const std::string& expected, const std::string& actual,
               const std::string& provenance) {
        case_checked();
        if (!ok) fail(key, inputs, expected, actual, provenance);
    }
};

std::string fmt_set(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

std::string fmt_ld(long double v) {
    std::ostringstream os;
    os.precision(12);
    os << static_cast<double>(v);
    return os.str();
}

// cubic height within the oracle envelope: max over all layers
bigint cubic_height_via_layers(int n) {
    bigint best = 0;
    for (int l = 0; l <= n; ++l) {
        bigint v = Hl_max(l, n).value;
        if (v > best) best = v;
    }
    return best;
}

void suite_quad_oracle(collector& c, int n_max) {
    for (long long n = 3; n <= n_max; ++n) {
        auto poly = expand_resultant_cached(sylvester_spec{2, static_cast<int>(n)});
        quad_height_result q = quad_height(n);
        bigint h = poly->height();
        c.check(h == q.height, "quad-height/n=" + std::to_string(n), "n=" + std::to_string(n),
                to_string(q.height), to_string(h), "closed-form");
        bigint at = poly->coefficient_of(q.extremal_monomial());
        c.check(abs(at) == q.height, "quad-extremal/n=" + std::to_string(n),
                "n=" + std::to_string(n), to_string(q.height), to_string(at), "closed-form");
    }
}

void suite_cubic_oracle(collector& c, int n_max) {
    for (int n = 6; n <= n_max; ++n) {
        auto poly = expand_resultant_cached(sylvester_spec{3, n});
        bigint h = poly->height();
        bigint layered = cubic_height_via_layers(n);
        c.check(h == layered, "cubic-height/n=" + std::to_string(n), "n=" + std::to_string(n),
                to_string(h), to_string(layered), "oracle-expansion");
        auto canon = canonical_argmax(hl_argmax_table(n), n);
        auto want = printed_hl_rows().at(n);
        c.check(canon == want, "cubic-argmax/n=" + std::to_string(n), "n=" + std::to_string(n),
                fmt_set(want), fmt_set(canon), "printed-table");
    }
    auto tie = hl_argmax_table(5);
    c.check(tie == std::set<int>{1, 2, 3, 4}, "cubic-tie/n=5", "n=5", "{1,2,3,4}", fmt_set(tie),
            "printed-table");
}

void suite_f_sweep(collector& c, int n_max) {
    const int cap = n_max > 0 ? n_max : 12;
    for (int m = 0; m <= cap; ++m)
        for (int k = 0; m + k <= cap; ++k)
            for (int kp = 0; m + k + kp <= cap; ++kp)
                for (int mp = 0; m + k + kp + mp <= cap; ++mp) {
                    findex idx{m, k, kp, mp};
                    std::string key = "F/" + std::to_string(m) + "," + std::to_string(k) + "," +
                                      std::to_string(kp) + "," + std::to_string(mp);
                    bigint r = F_rec(idx), cl = F_closed(idx);
                    bool three = (r == cl);
                    bigint det;
                    if (idx.total() >= 1 && idx.total() <= 12) {
                        det = F_det_oracle(idx);
                        three = three && (r == det);
                    }
                    c.check(three, key, key.substr(2), to_string(r),
                            to_string(cl) + "/" + to_string(det), "recurrence");
                    if (r != 0)
                        c.check(mp == 2 * m + k, key + "/support", key.substr(2), "m'=2m+k",
                                "violated", "recurrence");
                }
}

void suite_homogeneity(collector& c, int n_max) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= n_max; ++n) {
            auto poly = expand_resultant_cached(sylvester_spec{m, n});
            const std::string key = "homog/m=" + std::to_string(m) + "/n=" +
                                    (n < 10 ? "0" : "") + std::to_string(n);
            const std::string in = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
            auto deg = poly->group_degrees();
            c.check(deg.f_degree == n && deg.uniform, key + "/f-degree", in, std::to_string(n),
                    std::to_string(deg.f_degree), "oracle-expansion");
            c.check(deg.g_degree == m && deg.uniform, key + "/g-degree", in, std::to_string(m),
                    std::to_string(deg.g_degree), "oracle-expansion");
            auto omega = poly->omega_degree_set();
            c.check(omega == std::set<long>{static_cast<long>(m) * n}, key + "/omega", in,
                    "{" + std::to_string(static_cast<long>(m) * n) + "}",
                    omega.size() == 1 ? "{" + std::to_string(*omega.begin()) + "}" : "non-singleton",
                    "oracle-expansion");
            bigint bound = 1;
            for (int i = 0; i < n; ++i) bound *= m + 1;
            for (int i = 0; i < m; ++i) bound *= n + 1;
            bigint h = poly->height();
            c.check(h <= bound, key + "/height-bound", in, "<= " + to_string(bound), to_string(h),
                    "oracle-expansion");
            std::vector<int> exps(static_cast<size_t>(m + n + 2), 0);
            exps[0] = n;                             // f_0^n
            exps[static_cast<size_t>(m + 1 + n)] = m; // g_n^m
            bigint lead = poly->coefficient_of(make_monomial(poly->univ(), exps));
            c.check(lead == 1, key + "/lead", in, "1", to_string(lead), "oracle-expansion");
        }
}

void suite_tables(collector& c, int n_max) {
    for (const auto& g : printed_an_groups())
        for (int n = g.lo; n <= g.hi; ++n) {
            int a = compute_A(n);
            c.check(a == g.a, "table-an/n=" + (n < 10 ? std::string("0") : "") + std::to_string(n),
                    "n=" + std::to_string(n), std::to_string(g.a), std::to_string(a),
                    "printed-table");
        }
    const int hi = std::min(n_max > 0 ? n_max : 18, 19);
    for (int n = 1; n <= hi; ++n) {
        auto canon = canonical_argmax(hl_argmax_table(n), n);
        auto want = printed_hl_rows().at(n);
        c.check(canon == want, "table-hl/n=" + (n < 10 ? std::string("0") : "") + std::to_string(n),
                "n=" + std::to_string(n), fmt_set(want), fmt_set(canon), "printed-table");
    }
}

void suite_asymptotics(collector& c, int n_max) {
    auto s = constants();
    auto near = [](long double v, long double printed, long double ulp) {
        return std::fabs(v - printed) < ulp;
    };
    c.check(near(s.alpha_quad.value, 1.6180L, 1e-4L), "const/alpha_quad", "alpha_quad", "1.6180",
            fmt_ld(s.alpha_quad.value), "printed-table");
    c.check(near(s.beta_quad.value, 2.3644L, 1e-4L), "const/beta_quad", "beta_quad", "2.3644",
            fmt_ld(s.beta_quad.value), "printed-table");
    c.check(near(s.alpha_cubic.value, 1.83928L, 1e-5L), "const/alpha_cubic", "alpha_cubic",
            "1.83928", fmt_ld(s.alpha_cubic.value), "printed-table");
    c.check(near(s.beta_cubic.value, 8.13488L, 1e-5L), "const/beta_cubic", "beta_cubic", "8.13488",
            fmt_ld(s.beta_cubic.value), "printed-table");
    c.check(near(s.c.value, 0.6184199224L, 1e-10L), "const/c", "c", "0.6184199224",
            fmt_ld(s.c.value), "printed-table");
    for (auto* ac : s.all())
        if (!ac->poly.empty())
            c.check(std::fabs(poly_eval(ac->poly, ac->value)) < 1e-12L,
                    "const/residual/" + ac->name, ac->name, "<1e-12",
                    fmt_ld(poly_eval(ac->poly, ac->value)), "closed-form");
    auto rep = identity_checks();
    c.check(rep.pass, "identity/ratios", "m_hat,k_hat,kp_hat", "1 within 1e-9",
            fmt_ld(rep.ratio_cubed) + "," + fmt_ld(rep.ratio_squared), "closed-form");
    c.check(std::fabs(rep.sum_vs_c) < 1e-9L, "identity/sum-c", "m+k+kp vs c", "0",
            fmt_ld(rep.sum_vs_c), "closed-form");
    c.check(std::fabs(rep.perturbed_ratio - 1) > 1e-4L, "identity/sensitivity", "m_hat+1e-3",
            "!=1", fmt_ld(rep.perturbed_ratio), "closed-form");
    c.check(rep.an_ratio_error < 1e-5L, "identity/an-limit", "n=1e6", "(5-sqrt5)/10",
            fmt_ld(rep.an_ratio_error), "closed-form");
    const int top = n_max > 0 ? n_max : 2000;
    auto q = measure_convergence("quad", top);
    c.check(std::fabs(1 - q.rho_end) < 0.01L, "converge/quad-end", "n=" + std::to_string(top), "<0.01",
            fmt_ld(std::fabs(1 - q.rho_end)), "closed-form");
    auto cb = measure_convergence("cubic", top);
    c.check(std::fabs(1 - cb.rho_small) < 0.15L, "converge/cubic-small",
            "n=" + std::to_string(top / 20), "<0.15", fmt_ld(std::fabs(1 - cb.rho_small)),
            "closed-form");
    c.check(cb.slope > -1.5L && cb.slope < -0.5L, "converge/cubic-slope", "grid to " +
            std::to_string(top), "[-1.5,-0.5]", fmt_ld(cb.slope), "closed-form");
    for (int l = 0; l <= 4; ++l) {
        long double r = hl_ratio(l, 640);
        c.check(std::fabs(r - 1) < 0.05L, "beta_l/l=" + std::to_string(l), "n=640", "1 within 5%",
                fmt_ld(r), "printed-table");
    }
    long double r6 = hl_ratio(6, 800);
    c.check(std::fabs(r6 - 1) < 0.05L, "beta_l/l=6", "n=800", "1 within 5%", fmt_ld(r6),
            "recurrence");
    long double r5a = hl_ratio(5, 320), r5b = hl_ratio(5, 640), r5c = hl_ratio(5, 1280);
    c.check(r5a > r5b && r5b > r5c && r5c > 1.0L, "beta_l/l=5-trend", "n=320,640,1280",
            "decreasing toward 1", fmt_ld(r5a) + "," + fmt_ld(r5b) + "," + fmt_ld(r5c),
            "printed-table");
}

void suite_symmetry(collector& c, int n_max) {
    const int cap = std::min(n_max > 0 ? n_max : 12, 14);
    for (int n = 1; n <= cap; ++n)
        for (int l = 0; l <= n / 2; ++l) {
            auto a = Hl_max(l, n);
            auto b = Hl_max(n - l, n);
            const std::string key =
                "sym/n=" + (n < 10 ? std::string("0") : "") + std::to_string(n) + "/l=" +
                std::to_string(l);
            c.check(a.value == b.value, key + "/value", "l vs n-l", to_string(a.value),
                    to_string(b.value), "oracle-expansion");
            std::set<findex> mirrored;
            for (const auto& idx : b.argmax) mirrored.insert(findex{idx.mp, idx.kp, idx.k, idx.m});
            std::set<findex> direct(a.argmax.begin(), a.argmax.end());
            c.check(direct == mirrored, key + "/argmax", "l vs n-l", "mirror-equal",
                    direct == mirrored ? "mirror-equal" : "differs", "oracle-expansion");
        }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "quad-oracle", "cubic-oracle", "f-sweep", "homogeneity",
        "tables",      "asymptotics",  "symmetry"};
    return names;
}

const std::map<int, std::set<int>>& printed_hl_rows() {
    static const std::map<int, std::set<int>> rows = {
        {1, {0}},  {2, {1}},  {3, {0}},  {4, {1}},  {5, {1, 2}}, {6, {3}},  {7, {3}},
        {8, {0}},  {9, {3}},  {10, {3}}, {11, {0}}, {12, {0}},   {13, {3}}, {14, {3}},
        {15, {3}}, {16, {3}}, {17, {3}}, {18, {0}}, {19, {0}},
    };
    return rows;
}

const std::vector<an_group>& printed_an_groups() {
    static const std::vector<an_group> rows = {
        {1, 3, 4},   {2, 5, 8},   {3, 9, 12},  {4, 13, 15}, {5, 16, 19},  {6, 20, 23},
        {7, 24, 26}, {8, 27, 30}, {9, 31, 33}, {10, 34, 37}, {11, 38, 41}, {12, 42, 44},
        {13, 45, 48}, {14, 49, 52}, {15, 53, 55}, {16, 56, 59}, {17, 60, 62}, {18, 63, 66},
        {19, 67, 70}, {20, 71, 73}, {21, 74, 77}, {22, 78, 81}, {23, 82, 84}, {24, 85, 88},
        {25, 89, 91}, {26, 92, 95}, {27, 96, 99},
    };
    return rows;
}

suite_report run_suite(const std::string& name, int n_max) {
    suite_report rep;
    rep.suite = name;
    collector c{rep};
    auto t0 = std::chrono::steady_clock::now();
    if (name == "quad-oracle")
        suite_quad_oracle(c, n_max > 0 ? n_max : 25);
    else if (name == "cubic-oracle")
        suite_cubic_oracle(c, std::min(n_max > 0 ? n_max : 12, 12));
    else if (name == "f-sweep")
        suite_f_sweep(c, std::min(n_max > 0 ? n_max : 12, 14));
    else if (name == "homogeneity")
        suite_homogeneity(c, std::min(n_max > 0 ? n_max : 12, 12));
    else if (name == "tables")
        suite_tables(c, n_max);
    else if (name == "asymptotics")
        suite_asymptotics(c, n_max);
    else if (name == "symmetry")
        suite_symmetry(c, n_max);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const failure_record& a, const failure_record& b) { return a.case_key < b.case_key; });
    return rep;
}

conjecture_result conjecture_probe(int m, int n) {
    if (m < 1 || m > 4 || n < 1 || n > 12)
        throw feasibility_error("conjecture_probe: envelope is 1 <= m <= 4, 1 <= n <= 12");
    conjecture_result out;
    out.m = m;
    out.n = n;
    auto poly = expand_resultant_cached(sylvester_spec{m, n});
    out.full_height = poly->height();
    // two-term specialization g = g_0 + g_n x^n: keep the monomials whose
    // g-part avoids g_1..g_{n-1}; their coefficients are unchanged by the
    // substitution, so the specialized height is the filtered maximum
    bigint best = 0;
    for (const auto& [mono, coeff] : poly->terms()) {
        bool interior = false;
        for (int j = 1; j < n && !interior; ++j)
            if (exponent(mono, m + 1 + j) != 0) interior = true;
        if (interior) continue;
        bigint a = abs(coeff);
        if (a > best) best = a;
    }
    out.binomial_height = best;
    out.equal = (out.full_height == out.binomial_height);
    return out;
}

monotonic_report monotonic_probe(const std::string& which, int n_max) {
    monotonic_report rep;
    rep.which = which;
    rep.n_max = n_max;
    if (n_max < rep.n_lo) throw std::domain_error("monotonic_probe: n_max must be >= 3");
    if (which == "quad") {
        for (long long n = rep.n_lo; n <= n_max; ++n) rep.heights.push_back(quad_height(n).height);
    } else if (which == "cubic") {
        if (n_max > 12) throw feasibility_error("monotonic_probe: cubic envelope is n_max <= 12");
        for (int n = rep.n_lo; n <= n_max; ++n) rep.heights.push_back(cubic_height_via_layers(n));
    } else {
        throw std::invalid_argument("monotonic_probe: case must be 'quad' or 'cubic'");
    }
    for (size_t i = 1; i < rep.heights.size(); ++i)
        if (rep.heights[i] <= rep.heights[i - 1]) {
            rep.first_violation = rep.n_lo + static_cast<int>(i);
            break;
        }
    return rep;
}

} // namespace resheight
