#include "resheight/sylvester.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "resheight/errors.hpp"

namespace resheight {

namespace {

void check_spec(const sylvester_spec& spec) {
    if (spec.m < 1 || spec.n < 1)
        throw std::invalid_argument("sylvester spec requires m >= 1 and n >= 1, got m=" +
                                    std::to_string(spec.m) + ", n=" + std::to_string(spec.n));
}

// Parity of the permutation sending (0..k-1) to `perm`: +1 / -1.
int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

} // namespace

symbolic_matrix symbolic_matrix::remove_rows(const std::vector<int>& rows, int keep_cols_from,
                                             int keep_cols_to) const {
    std::vector<bool> drop(static_cast<size_t>(order), false);
    for (int r : rows) drop[static_cast<size_t>(r)] = true;
    int new_order = keep_cols_to - keep_cols_from;
    symbolic_matrix out;
    out.univ = univ;
    out.order = new_order;
    out.vars.assign(static_cast<size_t>(new_order) * new_order, -1);
    int rr = 0;
    for (int r = 0; r < order; ++r) {
        if (drop[static_cast<size_t>(r)]) continue;
        for (int c = keep_cols_from; c < keep_cols_to; ++c)
            out.set(rr, c - keep_cols_from, at(r, c));
        ++rr;
    }
    return out;
}

symbolic_matrix build_matrix(const sylvester_spec& spec) {
    check_spec(spec);
    const int m = spec.m, n = spec.n, order = m + n;
    symbolic_matrix mat;
    mat.univ = universe{m + 1, n + 1};
    mat.order = order;
    mat.vars.assign(static_cast<size_t>(order) * order, -1);
    for (int c = 0; c < n; ++c)
        for (int r = c; r <= c + m; ++r)
            mat.set(r, c, r - c); // f_{r-c}
    for (int cp = 0; cp < m; ++cp)
        for (int r = cp; r <= cp + n; ++r)
            mat.set(r, n + cp, (m + 1) + (r - cp)); // g_{r-cp}
    return mat;
}

sparse_poly naive_determinant(const symbolic_matrix& mat) {
    if (mat.order > 10)
        throw feasibility_error("naive_determinant: order " + std::to_string(mat.order) +
                                " exceeds the oracle envelope of 10");
    sparse_poly result(mat.univ);
    if (mat.order == 0) {
        result.add_term(monomial(static_cast<size_t>(mat.univ.arity()), char16_t(0)), 1);
        return result;
    }
    std::vector<bool> used(static_cast<size_t>(mat.order), false);
    std::vector<int> exps(static_cast<size_t>(mat.univ.arity()), 0);

    // Expand along columns left to right; each full path is one signed
    // permutation product of single variables.
    auto rec = [&](auto&& self, int col, int sign) -> void {
        if (col == mat.order) {
            result.add_term(make_monomial(mat.univ, exps), sign);
            return;
        }
        int skipped = 0; // unused rows passed over; each flips the cofactor sign
        for (int r = 0; r < mat.order; ++r) {
            if (used[static_cast<size_t>(r)]) continue;
            int v = mat.at(r, col);
            if (v >= 0) {
                used[static_cast<size_t>(r)] = true;
                ++exps[static_cast<size_t>(v)];
                self(self, col + 1, (skipped & 1) ? -sign : sign);
                --exps[static_cast<size_t>(v)];
                used[static_cast<size_t>(r)] = false;
            }
            ++skipped;
        }
    };
    rec(rec, 0, 1);
    return result;
}

sparse_poly f_band_minor(const sylvester_spec& spec, const std::vector<int>& removed_rows) {
    check_spec(spec);
    const int m = spec.m, n = spec.n;
    if (static_cast<int>(removed_rows.size()) != m)
        throw std::invalid_argument("f_band_minor: expected exactly m=" + std::to_string(m) +
                                    " removed rows, got " + std::to_string(removed_rows.size()));
    std::vector<bool> removed(static_cast<size_t>(m + n), false);
    for (int r : removed_rows) {
        if (r < 0 || r >= m + n)
            throw std::invalid_argument("f_band_minor: removed row " + std::to_string(r) +
                                        " out of range");
        if (removed[static_cast<size_t>(r)])
            throw std::invalid_argument("f_band_minor: duplicate removed row " + std::to_string(r));
        removed[static_cast<size_t>(r)] = true;
    }

    const universe fu{m + 1, 0};
    const int full = (1 << (m + 1)) - 1;
    using term_map = std::unordered_map<monomial, bigint>;

    // State: bitmask over the band window rows c..c+m; bit j set means row
    // c+j is unavailable (removed, or already consumed by an earlier column).
    std::unordered_map<int, term_map> states;
    int mask0 = 0;
    for (int j = 0; j <= m; ++j)
        if (removed[static_cast<size_t>(j)]) mask0 |= 1 << j;
    states[mask0][monomial(static_cast<size_t>(m + 1), char16_t(0))] = 1;

    for (int c = 0; c < n; ++c) {
        std::unordered_map<int, term_map> next;
        for (const auto& [mask, poly] : states) {
            int free_below = 0; // free offsets below j: parity gives the sign
            for (int j = 0; j <= m; ++j) {
                if (mask & (1 << j)) continue;
                const int sign = (free_below & 1) ? -1 : 1;
                ++free_below;
                const int nm = mask | (1 << j);
                // Row c must be gone before the window slides past it.
                if (!(nm & 1)) continue;
                int nxt;
                if (c + 1 < n) {
                    nxt = nm >> 1;
                    if (removed[static_cast<size_t>(c + 1 + m)]) nxt |= 1 << m;
                } else {
                    if (nm != full) continue; // some kept row was never consumed
                    nxt = nm;
                }
                term_map& tgt = next[nxt];
                for (const auto& [e, co] : poly) {
                    monomial e2 = e;
                    e2[static_cast<size_t>(j)] = static_cast<char16_t>(e2[static_cast<size_t>(j)] + 1);
                    bigint& slot = tgt[e2];
                    slot += sign > 0 ? co : -co;
                    if (slot == 0) tgt.erase(e2);
                }
            }
        }
        states = std::move(next);
    }

    sparse_poly out(fu);
    for (const auto& [mask, poly] : states)
        for (const auto& [e, co] : poly) out.add_term(e, co);
    return out;
}

namespace {

// All permutations of 0..k-1 with their signs, for the tiny g-minors.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int k) {
    std::vector<int> p(static_cast<size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> out;
    do {
        out.emplace_back(p, permutation_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Signed g-monomial content of the m x m minor over rows S of the g-block:
// map from g-exponent vector (length n+1) to the signed multiplicity.
std::unordered_map<monomial, bigint> g_minor(const std::vector<int>& S, int m, int n,
                                             const std::vector<std::pair<std::vector<int>, int>>& perms) {
    std::unordered_map<monomial, bigint> out;
    std::vector<int> exps(static_cast<size_t>(n + 1));
    for (const auto& [perm, sign] : perms) {
        std::fill(exps.begin(), exps.end(), 0);
        bool ok = true;
        for (int i = 0; i < m; ++i) {
            int d = S[static_cast<size_t>(i)] - perm[static_cast<size_t>(i)];
            if (d < 0 || d > n) {
                ok = false;
                break;
            }
            ++exps[static_cast<size_t>(d)];
        }
        if (!ok) continue;
        monomial key(static_cast<size_t>(n + 1), char16_t(0));
        for (int j = 0; j <= n; ++j)
            key[static_cast<size_t>(j)] = static_cast<char16_t>(exps[static_cast<size_t>(j)]);
        bigint& slot = out[key];
        slot += sign;
        if (slot == 0) out.erase(key);
    }
    return out;
}

} // namespace

sparse_poly expand_resultant(const sylvester_spec& spec) {
    check_spec(spec);
    const int m = spec.m, n = spec.n;
    if (m > 4 || n > 30)
        throw feasibility_error("expand_resultant: spec (" + std::to_string(m) + ", " +
                                std::to_string(n) + ") outside the envelope m <= 4, n <= 30");

    const universe full_u{m + 1, n + 1};
    sparse_poly result(full_u);
    const auto perms = signed_permutations(m);
    // Sum of the g-column indices (0-based): fixed part of the Laplace sign.
    int gcols_sum = 0;
    for (int c = n; c < n + m; ++c) gcols_sum += c;

    std::map<std::vector<int>, sparse_poly> minor_memo;

    std::vector<int> S(static_cast<size_t>(m));
    auto visit = [&](auto&& self, int pos, int start) -> void {
        if (pos == m) {
            auto gm = g_minor(S, m, n, perms);
            if (gm.empty()) return;
            int row_sum = 0;
            for (int r : S) row_sum += r;
            const int eps = ((row_sum + gcols_sum) & 1) ? -1 : 1;

            auto it = minor_memo.find(S);
            if (it == minor_memo.end()) it = minor_memo.emplace(S, f_band_minor(spec, S)).first;
            const sparse_poly& fm = it->second;

            monomial key(static_cast<size_t>(full_u.arity()), char16_t(0));
            for (const auto& [ge, gc] : gm) {
                for (const auto& [fe, fc] : fm.terms()) {
                    for (int i = 0; i <= m; ++i) key[static_cast<size_t>(i)] = fe[static_cast<size_t>(i)];
                    for (int j = 0; j <= n; ++j) key[static_cast<size_t>(m + 1 + j)] = ge[static_cast<size_t>(j)];
                    bigint prod = gc * fc;
                    result.add_term(key, eps > 0 ? prod : bigint(-prod));
                }
            }
            return;
        }
        for (int r = start; r < m + n; ++r) {
            S[static_cast<size_t>(pos)] = r;
            self(self, pos + 1, r + 1);
        }
    };
    visit(visit, 0, 0);
    return result;
}

std::shared_ptr<const sparse_poly> expand_resultant_cached(const sylvester_spec& spec) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const sparse_poly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(spec.m, spec.n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto p = std::make_shared<const sparse_poly>(expand_resultant(spec));
    cache.emplace(key, p);
    return p;
}

std::unordered_map<monomial, bigint> resultant_g_slice(const sylvester_spec& spec,
                                                       const std::vector<int>& g_multiset) {
    check_spec(spec);
    const int m = spec.m, n = spec.n;
    if (static_cast<int>(g_multiset.size()) != m)
        throw std::invalid_argument("resultant_g_slice: need exactly m g-indices");
    for (int v : g_multiset)
        if (v < 0 || v > n)
            throw std::invalid_argument("resultant_g_slice: g-index out of range");

    int gcols_sum = 0;
    for (int c = n; c < n + m; ++c) gcols_sum += c;

    // For each distinct assignment of the multiset values to the g-columns,
    // column j contributes g_{v_j} exactly at row v_j + j. Distinct rows give
    // one permutation term of one minor; identical row sets from different
    // assignments accumulate (and may cancel).
    std::map<std::vector<int>, bigint> weight_by_rows;
    std::vector<int> vals = g_multiset;
    std::sort(vals.begin(), vals.end());
    do {
        std::vector<int> rows(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) rows[static_cast<size_t>(j)] = vals[static_cast<size_t>(j)] + j;
        std::vector<int> sorted_rows = rows;
        std::sort(sorted_rows.begin(), sorted_rows.end());
        if (std::adjacent_find(sorted_rows.begin(), sorted_rows.end()) != sorted_rows.end())
            continue; // two columns demand the same row: no such permutation term
        // Local permutation: column j uses position of rows[j] in sorted order.
        std::vector<int> local(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j)
            local[static_cast<size_t>(j)] = static_cast<int>(
                std::lower_bound(sorted_rows.begin(), sorted_rows.end(), rows[static_cast<size_t>(j)]) -
                sorted_rows.begin());
        int sign = permutation_sign(local);
        int row_sum = 0;
        for (int r : sorted_rows) row_sum += r;
        const int eps = ((row_sum + gcols_sum) & 1) ? -sign : sign;
        weight_by_rows[sorted_rows] += eps;
    } while (std::next_permutation(vals.begin(), vals.end()));

    std::unordered_map<monomial, bigint> out;
    for (const auto& [rows, w] : weight_by_rows) {
        if (w == 0) continue;
        sparse_poly fm = f_band_minor(spec, rows);
        for (const auto& [fe, fc] : fm.terms()) {
            bigint& slot = out[fe];
            slot += w * fc;
            if (slot == 0) out.erase(fe);
        }
    }
    return out;
}

} // namespace resheight
