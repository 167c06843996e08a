#include "resheight/quad.hpp"

#include <stdexcept>

namespace resheight {

long long p_n_eval(long long n, long long z) {
    return (n - 2 * z + 1) * (n - 2 * z + 2) - z * (n - z);
}

namespace {
void require_n_ge_3(long long n, const char* who) {
    if (n < 3)
        throw std::domain_error(std::string(who) + ": n must be >= 3, got " + std::to_string(n));
}
} // namespace

int compute_A(long long n) {
    require_n_ge_3(n, "compute_A");
    // p_n is strictly decreasing on [0, n/2]: find the largest z with
    // p_n(z) >= 0. An exact root (p_n(z) = 0) is its own floor.
    long long lo = 0, hi = n / 2;
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (p_n_eval(n, mid) >= 0)
            lo = mid;
        else
            hi = mid - 1;
    }
    return static_cast<int>(lo);
}

int compute_A_closed(long long n) {
    require_n_ge_3(n, "compute_A_closed");
    // Root r = (6 + 5n - sqrt(D))/10 with D = 5n^2 - 4. With s = isqrt(D) and
    // X = 6 + 5n - s: if D is a perfect square the root is X/10 exactly;
    // otherwise r = (X - frac)/10 with frac in (0,1), so the floor drops by
    // one exactly when 10 | X.
    unsigned long long D = 5ull * static_cast<unsigned long long>(n) * static_cast<unsigned long long>(n) - 4ull;
    unsigned long long s = static_cast<unsigned long long>(std::sqrt(static_cast<double>(D)));
    while (s > 0 && s * s > D) --s;
    while ((s + 1) * (s + 1) <= D) ++s;
    long long X = 6 + 5 * n - static_cast<long long>(s);
    if (s * s == D) return static_cast<int>(X / 10);
    return static_cast<int>(X % 10 == 0 ? X / 10 - 1 : X / 10);
}

quad_height_result quad_height(long long n) {
    require_n_ge_3(n, "quad_height");
    quad_height_result r;
    r.n = n;
    r.A = compute_A(n);
    const unsigned long A = static_cast<unsigned long>(r.A);
    r.height = bigint(static_cast<long>(n)) * factorial(static_cast<unsigned long>(n) - A - 1) /
               (factorial(static_cast<unsigned long>(n - 2 * r.A)) * factorial(A));
    r.extremal_exps.assign(static_cast<size_t>(n) + 4, 0);
    r.extremal_exps[0] = r.A;                              // f_0
    r.extremal_exps[1] = static_cast<int>(n) - 2 * r.A;    // f_1
    r.extremal_exps[2] = r.A;                              // f_2
    r.extremal_exps[3] = 1;                                // g_0
    r.extremal_exps[static_cast<size_t>(n) + 3] = 1;       // g_n
    return r;
}

sparse_poly girard_power_sum(int n) {
    if (n < 1) throw std::domain_error("girard_power_sum: n must be >= 1");
    sparse_poly out(universe{2, 0});
    const int outer = (n % 2 == 0) ? 1 : -1; // (-1)^n
    for (int i0 = 0; 2 * i0 <= n; ++i0) {
        const int i1 = n - 2 * i0;
        // (-1)^(2 i1 + i0) = (-1)^i0
        const int sgn = ((i0 % 2 == 0) ? 1 : -1) * outer;
        bigint num = bigint(n) * factorial(static_cast<unsigned long>(i1 + i0 - 1));
        bigint den = factorial(static_cast<unsigned long>(i1)) * factorial(static_cast<unsigned long>(i0));
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw std::logic_error("girard_power_sum: non-integral coefficient");
        bigint c = num / den;
        out.add_term(make_monomial(out.univ(), {i0, i1}), sgn > 0 ? c : bigint(-c));
    }
    return out;
}

std::vector<bigint> P_profile(long long n) {
    require_n_ge_3(n, "P_profile");
    std::vector<bigint> out;
    out.reserve(static_cast<size_t>(n / 2) + 1);
    for (long long z = 0; 2 * z <= n; ++z) {
        bigint num = bigint(static_cast<long>(n)) * factorial(static_cast<unsigned long>(n - z - 1));
        bigint den = factorial(static_cast<unsigned long>(n - 2 * z)) * factorial(static_cast<unsigned long>(z));
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw std::logic_error("P_profile: non-integral scaled entry");
        out.push_back(num / den);
    }
    return out;
}

} // namespace resheight
