#pragma once

#include <string>
#include <vector>

#include "resheight/bigint.hpp"

namespace resheight {

// A real algebraic constant: either the bracketed root of an integer
// polynomial (poly non-empty, constant term first) or a value evaluated
// directly from a printed radical expression (poly empty).
struct algebraic_constant {
    std::string name;
    std::vector<long> poly;
    long double lo = 0;
    long double hi = 0;
    long double value = 0;
};

// Evaluate an integer-coefficient polynomial (constant term first).
long double poly_eval(const std::vector<long>& poly, long double x);

// Bisection to a narrow interval, then Newton refinement. Requires a sign
// change across [lo, hi] (else bracket_error) and tol >= 1e-14; the result
// is typically accurate to long double precision regardless of tol.
long double root_find(const std::vector<long>& poly, long double lo, long double hi,
                      long double tol = 1e-14L);

struct constants_set {
    algebraic_constant alpha_quad;  // x^2 - x - 1 on (1, 2)
    algebraic_constant beta_quad;   // 4x^4 - 125 on (2, 3)
    algebraic_constant alpha_cubic; // x^3 - x^2 - x - 1 on (1, 2)
    algebraic_constant beta_cubic;  // x^3 - 18x^2 + 110x - 242 on (8, 9)
    algebraic_constant c;           // 44x^3 - 44x^2 + 12x - 1 on (0.5, 0.7)
    algebraic_constant m_hat;       // radical
    algebraic_constant k_hat;       // radical
    algebraic_constant kp_hat;      // radical
    std::vector<const algebraic_constant*> all() const;
};

constants_set constants();

struct identity_report {
    long double ratio_cubed = 0;     // k'^3 / (m (m+k+k')^2), expect 1
    long double ratio_squared = 0;   // k'^2 / (k (m+k+k')), expect 1
    long double constraint = 0;      // 3m + 2k + k' - 1, expect 0
    long double sum_vs_c = 0;        // (m+k+k') - c, expect 0
    long double perturbed_ratio = 0; // ratio_cubed with m shifted by 1e-3
    long double an_ratio_error = 0;  // |A(10^6)/10^6 - (5-sqrt 5)/10|
    bool pass = false;               // ratios within 1e-9, constraint within 1e-10
};

identity_report identity_checks();

struct error_row {
    long long n = 0;
    bigint exact;            // closed-form height, exact integer
    long double estimate = 0; // beta alpha^n / (pi n)  (cubic)  or  / sqrt(pi n)  (quad)
    long double ratio = 0;    // exact / estimate, computed in log space
};

struct error_series_result {
    std::string which; // "quad" | "cubic"
    std::vector<error_row> rows;
};

// Exact heights vs the leading asymptotic term on an arithmetic grid.
// quad: exact = quad_height(n), n >= 3; cubic: exact = H_0(n) by closed form.
error_series_result error_series(const std::string& which, int n_lo, int n_hi, int step);

// Least-squares slope of y against x.
long double least_squares_slope(const std::vector<std::pair<long double, long double>>& pts);

struct convergence_summary {
    std::string which;
    std::vector<error_row> grid; // 13 geometric points from n_max/10 to n_max
    long double slope = 0;       // log|1 - ratio| vs log n over the grid
    long double rho_small = 0;   // ratio at n = n_max/20 (the early checkpoint)
    long double rho_end = 0;     // ratio at n = n_max
};

convergence_summary measure_convergence(const std::string& which, int n_max = 2000);

// H_l(n) * pi * n / (beta_l * alpha^(n+l)) for l in 0..6; expected -> 1.
// l <= 5 uses the formula scans; l = 6 uses the recurrence lift.
long double hl_ratio(int l, int n);

// The numeric beta_l targets for l = 0..6.
extern const long double beta_l_target[7];

} // namespace resheight
