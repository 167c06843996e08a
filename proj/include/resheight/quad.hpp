#pragma once

#include <vector>

#include "resheight/sparse_poly.hpp"

namespace resheight {

// p_n(z) = (n-2z+1)(n-2z+2) - z(n-z). On [0, n/2] this is strictly
// decreasing with p_n(0) > 0 and p_n(n/2) < 0 (n >= 3), so it has a unique
// root there; the height formula pivots on its floor.
long long p_n_eval(long long n, long long z);

// A_n: floor of the unique root of p_n in [0, n/2], by exact integer binary
// search on the sign of p_n — no floating point anywhere. n >= 3.
int compute_A(long long n);

// The same floor through the closed-form root (6 + 5n - sqrt(5n^2-4))/10,
// evaluated with an integer square root. Kept separate so the two routes
// cross-check each other.
int compute_A_closed(long long n);

// Height of Res(f_0 + f_1 x + f_2 x^2, g) for generic g of degree n, with the
// monomial attaining it: g_0 g_n f_0^A f_1^{n-2A} f_2^A, A = A_n. The height
// is n (n-A-1)! / ((n-2A)! A!).
struct quad_height_result {
    long long n = 0;
    int A = 0;
    bigint height;
    std::vector<int> extremal_exps; // over universe (3, n+1), f-first

    universe univ() const { return universe{3, static_cast<int>(n) + 1}; }
    monomial extremal_monomial() const { return make_monomial(univ(), extremal_exps); }
};
quad_height_result quad_height(long long n);

// Power sum of the roots of f_0 + f_1 x + x^2 as a polynomial in f_0, f_1
// (leading coefficient normalized away), by the Girard formula
//   (-1)^n n sum_{i1 + 2 i0 = n} (-1)^(2 i1 + i0) ((i1+i0-1)!/(i1! i0!)) f_1^i1 f_0^i0
// implemented exactly as written. Universe (2, 0).
sparse_poly girard_power_sum(int n);

// The height profile n*P(z) for z = 0..floor(n/2), P(z) = (n-z-1)!/((n-2z)! z!).
// P itself is not always integral (n=8, z=2 gives 5/2); the uniform scaling
// by n keeps every entry an exact integer, moves no argmax, and makes the
// peak entry literally the height. n >= 3.
std::vector<bigint> P_profile(long long n);

} // namespace resheight
