#pragma once

#include <map>
#include <set>
#include <vector>

#include "resheight/sylvester.hpp"

namespace resheight {

// Exponent index (m, k, k', m') of the monomial f_0^m f_1^k f_2^k' f_3^m'.
struct findex {
    int m = 0, k = 0, kp = 0, mp = 0;
    friend auto operator<=>(const findex&, const findex&) = default;
    int total() const { return m + k + kp + mp; }
};

// F(m,k,k',m'): coefficient family of the banded cubic determinant, by the
// recurrence F(m,k,k',m') = F(m,k,k'-1,m') - F(m,k-1,k',m'-1) + F(m-1,k,k',m'-2)
// with F(0,0,0,0) = 1 and F = 0 when any component is negative. Memoized.
bigint F_rec(const findex& idx);

// Closed form: (-1)^k C(m+k, k) C(k'+k+m, k+m) when m' = 2m+k and all
// components are nonnegative; 0 otherwise.
bigint F_closed(const findex& idx);

// The d x d banded matrix with entry f_{2+i-j} (zero outside 0..3); its
// determinant generates the F values.
symbolic_matrix f_banded_matrix(int d);

// Reads F(m,k,k',m') off a symbolic expansion of det(f_banded_matrix(d)),
// d = m+k+k'+m'. Independent of both the recurrence and the closed form.
// Envelope: 1 <= d <= 12.
bigint F_det_oracle(const findex& idx);

// (-1)^k (3m+2k+k') (m+k+k'-1)! / (k! m! k'!) with m' implied as 2m+k.
// Inputs nonnegative, not all zero.
bigint H0_closed(int m, int k, int kp);

// The printed F-combination for H_l, evaluated through F_closed. l in 0..5.
bigint Hl_formula(int l, const findex& idx);

// Exact coefficient layer of Res(3, n) for the g-monomial g_0 g_l g_n
// (multiset: l may equal 0 or n): map from f-exponent index to coefficient.
// Every key satisfies m' = 2m+k-l (omega-homogeneity). Envelope: n <= 30.
std::map<findex, bigint> hl_slice(int l, int n);

struct hl_max_result {
    int l = 0;
    int n = 0;
    bigint value;               // max |H_l| over the degree-n support
    std::vector<findex> argmax; // every attaining index, sorted
};

// max |H_l(m,k,k',m')| over m+k+k'+m' = n, with all attaining indices.
// Routes: the slice oracle while n <= 14 (exact for every l, including the
// boundary rows where the closed formulas deviate); for larger n, l <= 5
// through the closed formulas and n-l <= 5 through the reciprocal symmetry
// H_l(n) = H_{n-l}(n). Beyond that: feasibility error.
hl_max_result Hl_max(int l, int n);

// The slice-oracle route alone: exact for every 0 <= l <= n, n <= 30.
hl_max_result Hl_max_slice(int l, int n);

// The printed-formula route alone: l <= 5 directly, n-l <= 5 by symmetry.
// Requires n >= 10 — on a few boundary cells with n <= 9 the printed closed
// forms deviate from the true layer, so small n must go through the oracle.
hl_max_result Hl_max_formula(int l, int n);

// max |H_0| at degree n by an incremental product/exact-division walk over
// the (m, k) support — an independent confirmation path for the l = 0 column
// that stays cheap out to n in the thousands.
bigint H0_max_value(int n);

// H_l coefficient layer at large n, computed by lifting the three-term layer
// recurrence from slice seeds at n = 12, 13, 14. Exact. n >= 15, l <= 12.
std::map<findex, bigint> hl_slice_lifted(int l, int n);
bigint hl_max_via_lift(int l, int n);

// Every l attaining max_l H_l(n). Oracle slices for n <= 14; for n <= 30 the
// formula family covers l <= 5 and l >= n-5 with slices filling the middle.
std::set<int> hl_argmax_table(int n);

// Table form: fold each l to min(l, n-l), since H_l(n) = H_{n-l}(n).
std::set<int> canonical_argmax(const std::set<int>& ls, int n);

// A_1=1, A_2=2, A_3=4, A_m = A_{m-1}+A_{m-2}+A_{m-3}; B_m = A_{m-1}+A_{m-2}
// (m >= 3); C_m = A_{m-1} (m >= 2). Vectors are 1-indexed (entry 0 unused);
// entries before a sequence's first defined m are 0.
struct tribonacci_bounds_result {
    std::vector<bigint> A, B, C;
};
tribonacci_bounds_result tribonacci_bounds(int M);

} // namespace resheight
