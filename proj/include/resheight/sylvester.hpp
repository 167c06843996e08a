#pragma once

#include <memory>
#include <vector>

#include "resheight/sparse_poly.hpp"

namespace resheight {

// The generic resultant instance: f of degree m against g of degree n, both
// with indeterminate coefficients. The Sylvester matrix has order m+n.
struct sylvester_spec {
    int m = 0;
    int n = 0;
};

// Dense matrix of symbolic entries over a universe. Each entry is either a
// single variable (index into the universe) or zero (var < 0). Rich enough
// for the Sylvester matrix, its submatrices, and the banded matrices of the
// cubic-case determinant family.
struct symbolic_matrix {
    universe univ;
    int order = 0;
    std::vector<int> vars; // row-major, order*order, -1 for zero

    int at(int r, int c) const { return vars[static_cast<size_t>(r) * order + c]; }
    void set(int r, int c, int v) { vars[static_cast<size_t>(r) * order + c] = v; }

    symbolic_matrix remove_rows(const std::vector<int>& rows, int keep_cols_from,
                                int keep_cols_to) const;
};

// The matrix of the resultant definition: order m+n; column c < n carries
// f_{r-c} at row r (0 <= r-c <= m), column n+c' carries g_{r-c'} at row r
// (0 <= r-c' <= n). The resultant of this library is literally the
// determinant of this matrix — the sign convention is fixed here and
// everything else reads signs off it.
symbolic_matrix build_matrix(const sylvester_spec& spec);

// Cofactor-expansion determinant, the slow independent oracle. Order <= 10.
sparse_poly naive_determinant(const symbolic_matrix& mat);

// Determinant of the f-block (first n columns) with the m rows in
// `removed_rows` deleted, i.e. an n x n minor of the banded f part. Computed
// by a column sweep whose state is the set of consumed rows inside the
// current width-(m+1) band window. Result lives in the f-only universe
// (m+1, 0).
sparse_poly f_band_minor(const sylvester_spec& spec, const std::vector<int>& removed_rows);

// Exact expansion of the resultant as a polynomial in all m+n+2 coefficient
// variables: Laplace expansion over the m g-columns, each complementary
// f-minor computed by f_band_minor. Envelope: m <= 4, n <= 30.
sparse_poly expand_resultant(const sylvester_spec& spec);

// Same expansion, memoized process-wide. The verification suites query the
// same small resultants repeatedly; this shares the result without changing
// the algorithm. Never mutate through the pointer.
std::shared_ptr<const sparse_poly> expand_resultant_cached(const sylvester_spec& spec);

// Coefficient slice of the resultant: the map from f-exponent vectors to the
// coefficient of f^(exps) * (product of the g-variables listed in g_multiset)
// in Res(spec). Only the row subsets whose g-minor can produce that g-monomial
// are visited, so this is far cheaper than a full expansion when n is large.
// g_multiset holds m indices in 0..n (repeats allowed), sorted.
std::unordered_map<monomial, bigint> resultant_g_slice(const sylvester_spec& spec,
                                                       const std::vector<int>& g_multiset);

} // namespace resheight
