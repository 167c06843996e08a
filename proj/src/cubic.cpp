#include "resheight/cubic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "resheight/errors.hpp"

namespace resheight {

namespace {

// One summand coeff * F(m-dm, k-dk, k'-dkp, m'-dmp) of an H_l formula.
struct hl_term {
    int c, dm, dk, dkp, dmp;
};

// The printed F-combinations for H_0..H_5. Every tuple satisfies
// 2*dm + dk - dmp = l, so on the degree-n support (where m' = 2m+k-l) each
// shifted index lands back on the F support m' = 2m+k.
const std::vector<hl_term> hl_table[6] = {
    // H_0
    {{1, 1, 0, 0, 2}, {-1, 0, 0, 1, 0}, {2, 0, 0, 0, 0}},
    // H_1
    {{2, 1, 0, 1, 1}, {-1, 0, 1, 1, 0}, {2, 0, 1, 0, 0}, {-3, 1, 0, 0, 1}},
    // H_2
    {{2, 1, 0, 2, 0},
     {-4, 1, 0, 1, 0},
     {-1, 2, 1, 0, 3},
     {-3, 2, 0, 0, 2},
     {1, 1, 2, 0, 2},
     {-1, 0, 2, 1, 0},
     {2, 0, 2, 0, 0}},
    // H_3
    {{-2, 2, 0, 2, 1},
     {3, 1, 1, 2, 0},
     {-6, 1, 1, 1, 0},
     {1, 3, 0, 0, 3},
     {5, 2, 0, 0, 1},
     {-2, 2, 1, 0, 2},
     {-1, 2, 2, 0, 3},
     {1, 1, 3, 0, 2},
     {-1, 0, 3, 1, 0},
     {2, 0, 3, 0, 0}},
    // H_4
    {{-2, 5, 0, 0, 6},
     {-1, 4, 0, 0, 4},
     {3, 3, 1, 1, 3},
     {-9, 2, 2, 1, 2},
     {1, 2, 3, 0, 3},
     {-7, 2, 2, 0, 2},
     {13, 3, 1, 0, 3},
     {6, 3, 0, 2, 2},
     {2, 2, 0, 3, 0},
     {1, 1, 4, 0, 2},
     {-1, 0, 4, 1, 0},
     {2, 0, 4, 0, 0},
     {4, 1, 2, 2, 0},
     {-8, 1, 2, 1, 0}},
    // H_5
    {{2, 3, 0, 3, 1},
     {18, 3, 1, 2, 2},
     {-7, 3, 0, 2, 1},
     {12, 4, 1, 1, 4},
     {-13, 4, 0, 1, 3},
     {-1, 5, 1, 0, 6},
     {-3, 5, 0, 0, 5},
     {5, 2, 1, 2, 0},
     {2, 1, 5, 0, 2},
     {1, 0, 5, 0, 0},
     {-1, 0, 6, 0, 1},
     {5, 1, 4, 1, 1},
     {-5, 1, 3, 1, 0},
     {-15, 2, 4, 0, 3},
     {-25, 2, 3, 0, 2},
     {10, 3, 2, 1, 3},
     {15, 4, 2, 0, 5}},
};

struct findex_hash {
    size_t operator()(const findex& i) const {
        size_t h = static_cast<size_t>(i.m);
        h = h * 131 + static_cast<size_t>(i.k);
        h = h * 131 + static_cast<size_t>(i.kp);
        h = h * 131 + static_cast<size_t>(i.mp);
        return h;
    }
};

} // namespace

bigint F_rec(const findex& idx) {
    if (idx.m < 0 || idx.k < 0 || idx.kp < 0 || idx.mp < 0) return 0;
    if (idx.m == 0 && idx.k == 0 && idx.kp == 0 && idx.mp == 0) return 1;
    thread_local std::unordered_map<findex, bigint, findex_hash> memo;
    auto it = memo.find(idx);
    if (it != memo.end()) return it->second;
    bigint v = F_rec({idx.m, idx.k, idx.kp - 1, idx.mp}) -
               F_rec({idx.m, idx.k - 1, idx.kp, idx.mp - 1}) +
               F_rec({idx.m - 1, idx.k, idx.kp, idx.mp - 2});
    memo.emplace(idx, v);
    return v;
}

bigint F_closed(const findex& idx) {
    if (idx.m < 0 || idx.k < 0 || idx.kp < 0 || idx.mp < 0) return 0;
    if (idx.mp != 2 * idx.m + idx.k) return 0;
    bigint v = binomial(static_cast<unsigned long>(idx.m + idx.k), static_cast<unsigned long>(idx.k)) *
               binomial(static_cast<unsigned long>(idx.kp + idx.k + idx.m),
                        static_cast<unsigned long>(idx.k + idx.m));
    return (idx.k % 2) ? bigint(-v) : v;
}

symbolic_matrix f_banded_matrix(int d) {
    if (d < 1) throw std::invalid_argument("f_banded_matrix: order must be >= 1");
    symbolic_matrix mat;
    mat.univ = universe{4, 0};
    mat.order = d;
    mat.vars.assign(static_cast<size_t>(d) * d, -1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int v = 2 + i - j;
            if (v >= 0 && v <= 3) mat.set(i, j, v);
        }
    return mat;
}

namespace {

const sparse_poly& f_banded_det(int d) {
    static std::mutex mu;
    static std::map<int, sparse_poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Orders beyond the cofactor oracle reuse the band sweep: the d x d
    // banded matrix is the f-block minor of a degree-(3, d) Sylvester matrix
    // with rows {0, 1, d+2} removed (kept rows r = 2..d+1 give f_{2+i-j}).
    sparse_poly det = (d <= 10) ? naive_determinant(f_banded_matrix(d))
                                : f_band_minor(sylvester_spec{3, d}, {0, 1, d + 2});
    return cache.emplace(d, std::move(det)).first->second;
}

} // namespace

bigint F_det_oracle(const findex& idx) {
    if (idx.m < 0 || idx.k < 0 || idx.kp < 0 || idx.mp < 0) return 0;
    const int d = idx.total();
    if (d < 1 || d > 12)
        throw feasibility_error("F_det_oracle: order " + std::to_string(d) +
                                " outside the envelope 1..12");
    const sparse_poly& det = f_banded_det(d);
    return det.coefficient_of(make_monomial(universe{4, 0}, {idx.m, idx.k, idx.kp, idx.mp}));
}

bigint H0_closed(int m, int k, int kp) {
    if (m < 0 || k < 0 || kp < 0)
        throw std::domain_error("H0_closed: exponents must be nonnegative");
    if (m == 0 && k == 0 && kp == 0)
        throw std::domain_error("H0_closed: all-zero index has no degree");
    bigint num = bigint(3 * m + 2 * k + kp) * factorial(static_cast<unsigned long>(m + k + kp - 1));
    bigint den = factorial(static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(m)) *
                 factorial(static_cast<unsigned long>(kp));
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("H0_closed: non-integral value");
    bigint v = num / den;
    return (k % 2) ? bigint(-v) : v;
}

bigint Hl_formula(int l, const findex& idx) {
    if (l < 0 || l > 5)
        throw std::invalid_argument("Hl_formula: no printed formula for l = " + std::to_string(l) +
                                    " (supported: 0..5)");
    bigint out = 0;
    for (const auto& t : hl_table[l])
        out += t.c * F_closed({idx.m - t.dm, idx.k - t.dk, idx.kp - t.dkp, idx.mp - t.dmp});
    return out;
}

std::map<findex, bigint> hl_slice(int l, int n) {
    if (n < 1) throw std::domain_error("hl_slice: n must be >= 1");
    if (l < 0 || l > n)
        throw std::invalid_argument("hl_slice: l must lie in 0..n, got l=" + std::to_string(l));
    if (n > 30)
        throw feasibility_error("hl_slice: n = " + std::to_string(n) +
                                " outside the slice envelope n <= 30");
    auto raw = resultant_g_slice(sylvester_spec{3, n}, {0, l, n});
    std::map<findex, bigint> out;
    for (const auto& [mo, c] : raw) {
        findex idx{exponent(mo, 0), exponent(mo, 1), exponent(mo, 2), exponent(mo, 3)};
        if (idx.mp != 2 * idx.m + idx.k - l)
            throw std::logic_error("hl_slice: coefficient off the omega-homogeneous support");
        out.emplace(idx, c);
    }
    return out;
}

namespace {

// acc *= a (a-1) ... (a-d+1)
void mul_falling(bigint& acc, int a, int d) {
    for (int i = 0; i < d; ++i) acc *= static_cast<unsigned long>(a - i);
}

bigint slice_max(int l, int n, std::vector<findex>* argmax) {
    bigint best = 0;
    std::vector<findex> arg;
    for (const auto& [idx, c] : hl_slice(l, n)) {
        bigint a = abs(c);
        if (a > best) {
            best = a;
            arg.assign(1, idx);
        } else if (a != 0 && a == best) {
            arg.push_back(idx);
        }
    }
    if (argmax) *argmax = std::move(arg);
    return best;
}

// Full scan of |H_l| over the degree-n support via the printed formula,
// evaluated in factored form: every F value in the sum equals
// (+-) C(m+k, k) C(k'+k+m, k+m) times a bounded rational, so each index
// costs one big multiplication plus small-integer work, with the two
// binomials maintained incrementally along k.
hl_max_result scan_formula(int l, int n) {
    hl_max_result out;
    out.l = l;
    out.n = n;
    const auto& terms = hl_table[l];
    for (int m = 0; 3 * m <= n + l; ++m) {
        const int k_lo = std::max(0, l - 2 * m);       // m' = 2m+k-l >= 0
        const int k_hi = (n - 3 * m + l) / 2;          // k' = n-3m-2k+l >= 0
        if (k_hi < k_lo) continue;
        bigint B1, B2; // C(m+k, k) and C(k'+k+m, k+m) at the current k
        mpz_bin_uiui(B1.get_mpz_t(), static_cast<unsigned long>(m + k_lo),
                     static_cast<unsigned long>(k_lo));
        mpz_bin_uiui(B2.get_mpz_t(), static_cast<unsigned long>(n - 2 * m - k_lo + l),
                     static_cast<unsigned long>(k_lo + m));
        for (int k = k_lo;; ++k) {
            const int kp = n - 3 * m - 2 * k + l;
            const int mp = 2 * m + k - l;
            mpq_class total = 0;
            for (const auto& t : terms) {
                const int am = m - t.dm, ak = k - t.dk, akp = kp - t.dkp, amp = mp - t.dmp;
                if (am < 0 || ak < 0 || akp < 0 || amp < 0) continue;
                // amp == 2*am + ak holds identically here, so
                // F(am,ak,akp,amp) = (-1)^ak C(am+ak, ak) C(akp+ak+am, ak+am),
                // and both binomials are bounded-shift neighbours of B1, B2.
                bigint num = 1, den = 1;
                mul_falling(num, k, t.dk);
                mul_falling(num, m, t.dm);
                mul_falling(den, m + k, t.dm + t.dk);
                mul_falling(num, k + m, t.dk + t.dm);
                mul_falling(num, kp, t.dkp);
                mul_falling(den, kp + k + m, t.dkp + t.dk + t.dm);
                num *= (ak % 2) ? -t.c : t.c;
                mpq_class q(num, den);
                q.canonicalize();
                total += q;
            }
            if (total != 0) {
                bigint exact = B1 * B2;
                exact *= total.get_num();
                if (!mpz_divisible_p(exact.get_mpz_t(), total.get_den().get_mpz_t()))
                    throw std::logic_error("scan_formula: non-integral H value");
                mpz_divexact(exact.get_mpz_t(), exact.get_mpz_t(), total.get_den().get_mpz_t());
                bigint a = abs(exact);
                if (a > out.value) {
                    out.value = a;
                    out.argmax.assign(1, findex{m, k, kp, mp});
                } else if (a == out.value) {
                    out.argmax.push_back(findex{m, k, kp, mp});
                }
            }
            if (k == k_hi) break;
            // B1 -> C(m+k+1, k+1); B2 -> C(k'+k+m-1, k+m+1), all exact steps
            B1 *= static_cast<unsigned long>(m + k + 1);
            mpz_divexact_ui(B1.get_mpz_t(), B1.get_mpz_t(), static_cast<unsigned long>(k + 1));
            B2 *= static_cast<unsigned long>(kp) * static_cast<unsigned long>(kp - 1);
            mpz_divexact_ui(B2.get_mpz_t(), B2.get_mpz_t(),
                            static_cast<unsigned long>(kp + k + m) * static_cast<unsigned long>(k + m + 1));
        }
    }
    std::sort(out.argmax.begin(), out.argmax.end());
    return out;
}

findex reversed(const findex& i) { return findex{i.mp, i.kp, i.k, i.m}; }

} // namespace

namespace {
// Reciprocal symmetry: reversing both polynomials maps the layer l to n-l
// and the index (m,k,k',m') to (m',k',k,m).
hl_max_result mirrored_scan(int l, int n) {
    hl_max_result mirrored = scan_formula(n - l, n);
    hl_max_result out;
    out.l = l;
    out.n = n;
    out.value = mirrored.value;
    out.argmax.reserve(mirrored.argmax.size());
    for (const auto& idx : mirrored.argmax) out.argmax.push_back(reversed(idx));
    std::sort(out.argmax.begin(), out.argmax.end());
    return out;
}
} // namespace

hl_max_result Hl_max_slice(int l, int n) {
    if (n < 1) throw std::domain_error("Hl_max_slice: n must be >= 1");
    if (l < 0 || l > n)
        throw std::invalid_argument("Hl_max_slice: l must lie in 0..n, got l=" +
                                    std::to_string(l));
    hl_max_result out;
    out.l = l;
    out.n = n;
    out.value = slice_max(l, n, &out.argmax);
    return out;
}

hl_max_result Hl_max_formula(int l, int n) {
    if (l < 0 || l > n)
        throw std::invalid_argument("Hl_max_formula: l must lie in 0..n, got l=" +
                                    std::to_string(l));
    if (n < 10)
        throw feasibility_error("Hl_max_formula: the printed closed forms deviate from the true "
                                "layer on boundary cells with n <= 9; use the oracle route there");
    if (l <= 5) return scan_formula(l, n);
    if (n - l <= 5) return mirrored_scan(l, n);
    throw feasibility_error("Hl_max_formula: no printed formula for l=" + std::to_string(l) +
                            ", n=" + std::to_string(n) + " (l and n-l both > 5)");
}

hl_max_result Hl_max(int l, int n) {
    if (n < 1) throw std::domain_error("Hl_max: n must be >= 1");
    if (l < 0 || l > n)
        throw std::invalid_argument("Hl_max: l must lie in 0..n, got l=" + std::to_string(l));
    // Inside the expansion envelope the slice oracle is exact everywhere,
    // including the boundary rows l = n, n-1 and the handful of cells where
    // the printed formulas deviate (all at n <= 9); the formula scans take
    // over outside it, where they have no known defects.
    if (n <= 14) return Hl_max_slice(l, n);
    if (l <= 5) return scan_formula(l, n);
    if (n - l <= 5) return mirrored_scan(l, n);
    throw feasibility_error("Hl_max: (l=" + std::to_string(l) + ", n=" + std::to_string(n) +
                            ") has no formula (l and n-l both > 5) and exceeds the oracle envelope "
                            "n <= 14");
}

bigint H0_max_value(int n) {
    if (n < 1) throw std::domain_error("H0_max_value: n must be >= 1");
    // Walk v(m,k) = n (n-2m-k-1)! / (m! k! (n-3m-2k)!) = |H_0| on its support
    // by exact multiply/divide steps; v(0,0) = 1.
    bigint best = 0, vm = 1;
    for (int m = 0; 3 * m <= n; ++m) {
        bigint v = vm;
        const int kmax = (n - 3 * m) / 2;
        for (int k = 0;; ++k) {
            if (v > best) best = v;
            if (k == kmax) break;
            const int kp = n - 3 * m - 2 * k; // >= 2 while a step remains
            v *= static_cast<unsigned long>(kp) * static_cast<unsigned long>(kp - 1);
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(),
                            static_cast<unsigned long>(n - 2 * m - k - 1) *
                                static_cast<unsigned long>(k + 1));
        }
        if (3 * (m + 1) <= n) {
            vm *= static_cast<unsigned long>(n - 3 * m) * static_cast<unsigned long>(n - 3 * m - 1);
            vm *= static_cast<unsigned long>(n - 3 * m - 2);
            mpz_divexact_ui(vm.get_mpz_t(), vm.get_mpz_t(),
                            static_cast<unsigned long>(n - 2 * m - 1) *
                                static_cast<unsigned long>(n - 2 * m - 2));
            mpz_divexact_ui(vm.get_mpz_t(), vm.get_mpz_t(), static_cast<unsigned long>(m + 1));
        }
    }
    return best;
}

std::map<findex, bigint> hl_slice_lifted(int l, int n) {
    if (l < 0 || l > 11)
        throw feasibility_error("hl_slice_lifted: the recurrence needs seed levels above l; "
                                "seeds at n = 12..14 cover only l <= 11");
    if (n < 15)
        throw std::invalid_argument("hl_slice_lifted: n must be >= 15 (use hl_slice below that)");

    // Layer recurrence on the (m, k) grid, k' and m' implied by (l, level):
    // H@v(m,k) = H@(v-1)(m,k) - H@(v-2)(m,k-1) + H@(v-3)(m-1,k).
    const int M = (n + l) / 3, K = (n + l) / 2;
    const size_t stride = static_cast<size_t>(K) + 1;
    const size_t cells = (static_cast<size_t>(M) + 1) * stride;
    auto at = [stride](std::vector<bigint>& g, int m, int k) -> bigint& {
        return g[static_cast<size_t>(m) * stride + static_cast<size_t>(k)];
    };

    std::vector<bigint> levels[4];
    for (auto& g : levels) g.assign(cells, bigint(0));
    // levels[v % 4] holds layer v; seed 12, 13, 14
    for (int v = 12; v <= 14; ++v)
        for (const auto& [idx, c] : hl_slice(l, v)) {
            if (idx.m > M || idx.k > K) throw std::logic_error("hl_slice_lifted: seed out of grid");
            at(levels[v % 4], idx.m, idx.k) = c;
        }

    for (int v = 15; v <= n; ++v) {
        std::vector<bigint>& cur = levels[v % 4];
        std::vector<bigint>& p1 = levels[(v - 1) % 4];
        std::vector<bigint>& p2 = levels[(v - 2) % 4];
        std::vector<bigint>& p3 = levels[(v - 3) % 4];
        for (int m = 0; 3 * m <= v + l && m <= M; ++m) {
            const int k_lo = std::max(0, l - 2 * m);
            const int k_hi = std::min(K, (v - 3 * m + l) / 2);
            for (int k = k_lo; k <= k_hi; ++k) {
                bigint val = at(p1, m, k);
                if (k > 0) val -= at(p2, m, k - 1);
                if (m > 0) val += at(p3, m - 1, k);
                at(cur, m, k) = std::move(val);
            }
            // cells outside a layer's support region are never written: the
            // regions grow with the level, so such cells still hold the
            // initial zero, which is the true coefficient there.
        }
    }

    std::map<findex, bigint> out;
    std::vector<bigint>& fin = levels[n % 4];
    for (int m = 0; 3 * m <= n + l && m <= M; ++m) {
        const int k_lo = std::max(0, l - 2 * m);
        const int k_hi = std::min(K, (n - 3 * m + l) / 2);
        for (int k = k_lo; k <= k_hi; ++k) {
            bigint& v = at(fin, m, k);
            if (v != 0) out.emplace(findex{m, k, n - 3 * m - 2 * k + l, 2 * m + k - l}, v);
        }
    }
    return out;
}

bigint hl_max_via_lift(int l, int n) {
    bigint best = 0;
    for (const auto& [idx, c] : hl_slice_lifted(l, n)) {
        bigint a = abs(c);
        if (a > best) best = a;
    }
    return best;
}

std::set<int> hl_argmax_table(int n) {
    if (n < 1) throw std::domain_error("hl_argmax_table: n must be >= 1");
    if (n > 30)
        throw feasibility_error("hl_argmax_table: n = " + std::to_string(n) +
                                " exceeds the slice envelope n <= 30");
    std::vector<bigint> vals(static_cast<size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
        if (n <= 14)
            vals[static_cast<size_t>(l)] = slice_max(l, n, nullptr);
        else if (l <= 5 || n - l <= 5)
            vals[static_cast<size_t>(l)] = Hl_max(l, n).value;
        else
            vals[static_cast<size_t>(l)] = slice_max(l, n, nullptr);
    }
    bigint best = 0;
    for (const auto& v : vals)
        if (v > best) best = v;
    std::set<int> out;
    for (int l = 0; l <= n; ++l)
        if (vals[static_cast<size_t>(l)] == best) out.insert(l);
    return out;
}

std::set<int> canonical_argmax(const std::set<int>& ls, int n) {
    std::set<int> out;
    for (int l : ls) out.insert(std::min(l, n - l));
    return out;
}

tribonacci_bounds_result tribonacci_bounds(int M) {
    if (M < 3) throw std::invalid_argument("tribonacci_bounds: M must be >= 3");
    tribonacci_bounds_result r;
    r.A.assign(static_cast<size_t>(M) + 1, 0);
    r.B.assign(static_cast<size_t>(M) + 1, 0);
    r.C.assign(static_cast<size_t>(M) + 1, 0);
    r.A[1] = 1;
    r.A[2] = 2;
    r.A[3] = 4;
    for (int m = 4; m <= M; ++m) r.A[m] = r.A[m - 1] + r.A[m - 2] + r.A[m - 3];
    for (int m = 3; m <= M; ++m) r.B[m] = r.A[m - 1] + r.A[m - 2];
    for (int m = 2; m <= M; ++m) r.C[m] = r.A[m - 1];
    return r;
}

} // namespace resheight
