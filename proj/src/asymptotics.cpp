#include "resheight/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resheight/cubic.hpp"
#include "resheight/errors.hpp"
#include "resheight/quad.hpp"

namespace resheight {

long double poly_eval(const std::vector<long>& poly, long double x) {
    long double acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
    return acc;
}

namespace {

long double poly_deriv_eval(const std::vector<long>& poly, long double x) {
    long double acc = 0;
    for (size_t i = poly.size(); i-- > 1;)
        acc = acc * x + static_cast<long double>(poly[i]) * static_cast<long double>(i);
    return acc;
}

} // namespace

long double root_find(const std::vector<long>& poly, long double lo, long double hi,
                      long double tol) {
    if (tol < 1e-14L) throw std::invalid_argument("root_find: tol must be >= 1e-14");
    if (!(lo < hi)) throw bracket_error("root_find: empty bracket");
    long double flo = poly_eval(poly, lo), fhi = poly_eval(poly, hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0))
        throw bracket_error("root_find: no sign change across the bracket");
    for (int i = 0; i < 48; ++i) {
        long double mid = (lo + hi) / 2;
        long double fm = poly_eval(poly, mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    long double x = (lo + hi) / 2;
    for (int i = 0; i < 64; ++i) {
        long double d = poly_deriv_eval(poly, x);
        if (d == 0) break;
        long double step = poly_eval(poly, x) / d;
        long double nx = x - step;
        if (nx < lo || nx > hi) nx = (lo + hi) / 2; // keep Newton inside the bracket
        if (std::fabs(nx - x) <= tol * std::max<long double>(1, std::fabs(x))) {
            x = nx;
            break;
        }
        x = nx;
    }
    return x;
}

namespace {

algebraic_constant bracketed(std::string name, std::vector<long> poly, long double lo,
                             long double hi) {
    algebraic_constant c;
    c.name = std::move(name);
    c.poly = std::move(poly);
    c.lo = lo;
    c.hi = hi;
    c.value = root_find(c.poly, lo, hi);
    return c;
}

algebraic_constant radical(std::string name, long double value) {
    algebraic_constant c;
    c.name = std::move(name);
    c.value = value;
    return c;
}

} // namespace

std::vector<const algebraic_constant*> constants_set::all() const {
    return {&alpha_quad, &beta_quad, &alpha_cubic, &beta_cubic, &c, &m_hat, &k_hat, &kp_hat};
}

constants_set constants() {
    constants_set s;
    s.alpha_quad = bracketed("alpha_quad", {-1, -1, 1}, 1, 2);
    s.beta_quad = bracketed("beta_quad", {-125, 0, 0, 0, 4}, 2, 3);
    s.alpha_cubic = bracketed("alpha_cubic", {-1, -1, -1, 1}, 1, 2);
    s.beta_cubic = bracketed("beta_cubic", {-242, 110, -18, 1}, 8, 9);
    s.c = bracketed("c", {-1, 12, -44, 44}, 0.5L, 0.7L);
    // printed radical expressions
    const long double r33 = std::sqrt(33.0L);
    const long double t = std::cbrt(1331.0L + 231.0L * r33);
    const long double u = std::cbrt(3267.0L + 627.0L * r33);
    const long double v = std::cbrt(3267.0L + 561.0L * r33);
    s.m_hat = radical("m_hat", 1.0L / 3.0L - t / 66.0L - 1.0L / (3.0L * t));
    s.k_hat = radical("k_hat", u / 66.0L - 2.0L / u);
    s.kp_hat = radical("kp_hat", v / 66.0L + 1.0L / v);
    return s;
}

identity_report identity_checks() {
    const constants_set s = constants();
    const long double m = s.m_hat.value, k = s.k_hat.value, kp = s.kp_hat.value;
    identity_report r;
    r.ratio_cubed = kp * kp * kp / (m * (m + k + kp) * (m + k + kp));
    r.ratio_squared = kp * kp / (k * (m + k + kp));
    r.constraint = 3 * m + 2 * k + kp - 1;
    r.sum_vs_c = (m + k + kp) - s.c.value;
    const long double mp = m + 1e-3L;
    r.perturbed_ratio = kp * kp * kp / (mp * (mp + k + kp) * (mp + k + kp));
    const long long big_n = 1000000;
    r.an_ratio_error = std::fabs(static_cast<long double>(compute_A(big_n)) / big_n -
                                 (5.0L - std::sqrt(5.0L)) / 10.0L);
    r.pass = std::fabs(r.ratio_cubed - 1) < 1e-9L && std::fabs(r.ratio_squared - 1) < 1e-9L &&
             std::fabs(r.constraint) < 1e-10L;
    return r;
}

namespace {

// log of the leading term: log(beta) + n log(alpha) - log(pi n) (cubic)
// or - log(sqrt(pi n)) (quad)
long double log_estimate(bool cubic_case, long long n) {
    static const constants_set s = constants();
    const long double pin = std::numbers::pi_v<long double> * static_cast<long double>(n);
    if (cubic_case)
        return std::log(s.beta_cubic.value) + static_cast<long double>(n) * std::log(s.alpha_cubic.value) -
               std::log(pin);
    return std::log(s.beta_quad.value) + static_cast<long double>(n) * std::log(s.alpha_quad.value) -
           0.5L * std::log(pin);
}

error_row make_row(bool cubic_case, long long n) {
    error_row row;
    row.n = n;
    row.exact = cubic_case ? H0_max_value(static_cast<int>(n)) : quad_height(n).height;
    const long double le = log_estimate(cubic_case, n);
    row.estimate = std::exp(le);
    row.ratio = std::exp(log_abs(row.exact) - le);
    return row;
}

bool parse_case(const std::string& which) {
    if (which == "cubic") return true;
    if (which == "quad") return false;
    throw std::invalid_argument("case must be 'quad' or 'cubic', got '" + which + "'");
}

} // namespace

error_series_result error_series(const std::string& which, int n_lo, int n_hi, int step) {
    const bool cubic_case = parse_case(which);
    if (step < 1) throw std::invalid_argument("error_series: step must be >= 1");
    if (n_lo < (cubic_case ? 1 : 3))
        throw std::domain_error("error_series: n_lo below the case's domain");
    error_series_result out;
    out.which = which;
    for (long long n = n_lo; n <= n_hi; n += step) out.rows.push_back(make_row(cubic_case, n));
    return out;
}

long double least_squares_slope(const std::vector<std::pair<long double, long double>>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("least_squares_slope: need >= 2 points");
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const long double n = static_cast<long double>(pts.size());
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

convergence_summary measure_convergence(const std::string& which, int n_max) {
    const bool cubic_case = parse_case(which);
    if (n_max < 40) throw std::invalid_argument("measure_convergence: n_max too small");
    convergence_summary out;
    out.which = which;
    // 13 geometric points spanning one decade up to n_max
    for (int i = 0; i <= 12; ++i) {
        const long double x = static_cast<long double>(n_max) / 10.0L *
                              std::pow(10.0L, static_cast<long double>(i) / 12.0L);
        out.grid.push_back(make_row(cubic_case, std::llround(x)));
    }
    std::vector<std::pair<long double, long double>> pts;
    for (const auto& row : out.grid) {
        const long double err = std::fabs(1.0L - row.ratio);
        if (err > 0)
            pts.emplace_back(std::log(static_cast<long double>(row.n)), std::log(err));
    }
    out.slope = least_squares_slope(pts);
    out.rho_small = make_row(cubic_case, std::max(n_max / 20, cubic_case ? 1 : 3)).ratio;
    out.rho_end = out.grid.back().ratio;
    return out;
}

const long double beta_l_target[7] = {8.13488L, 3.71205L, 0.92093L, 1.01680L,
                                      0.31597L, 0.01923L, 0.05956L};

long double hl_ratio(int l, int n) {
    if (l < 0 || l > 6) throw std::invalid_argument("hl_ratio: l must lie in 0..6");
    bigint value = (l <= 5) ? Hl_max(l, n).value : hl_max_via_lift(6, n);
    static const constants_set s = constants();
    const long double log_est = std::log(beta_l_target[l]) +
                                static_cast<long double>(n + l) * std::log(s.alpha_cubic.value) -
                                std::log(std::numbers::pi_v<long double> * static_cast<long double>(n));
    return std::exp(log_abs(value) - log_est);
}

} // namespace resheight
