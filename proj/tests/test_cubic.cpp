#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "resheight/cubic.hpp"
#include "resheight/errors.hpp"
#include "resheight/sylvester.hpp"

using namespace resheight;

namespace {

bigint slice_max_of(const std::map<findex, bigint>& s) {
    bigint best = 0;
    for (const auto& [k, v] : s) {
        bigint a = abs(v);
        if (a > best) best = a;
    }
    return best;
}

// brute-force max |Hl_formula| with attaining indices over the degree-n support
bigint formula_max(int l, int n, std::vector<findex>* argmax = nullptr) {
    bigint best = 0;
    std::vector<findex> arg;
    for (int m = 0; 3 * m <= n + l; ++m)
        for (int k = std::max(0, l - 2 * m); 3 * m + 2 * k <= n + l; ++k) {
            findex idx{m, k, n - 3 * m - 2 * k + l, 2 * m + k - l};
            if (idx.mp < 0) continue;
            bigint a = abs(Hl_formula(l, idx));
            if (a > best) {
                best = a;
                arg.assign(1, idx);
            } else if (a != 0 && a == best)
                arg.push_back(idx);
        }
    if (argmax) *argmax = std::move(arg);
    return best;
}

} // namespace

TEST_CASE("F pins") {
    CHECK(F_rec({0, 0, 0, 0}) == 1);
    CHECK(F_rec({0, 1, 1, 1}) == -2);
    CHECK(F_rec({1, 0, 0, 2}) == 1);
    CHECK(F_rec({0, 0, 3, 0}) == 1);
    CHECK(F_rec({2, 0, 0, 4}) == 1);
    CHECK(F_rec({0, 2, 1, 2}) == 3);
    CHECK(F_rec({0, 1, 0, 1}) == -1);
    CHECK(F_closed({0, 1, 1, 1}) == -2);
    CHECK(F_det_oracle({0, 1, 1, 1}) == -2);
}

TEST_CASE("F three-way agreement and vanishing law") {
    for (int m = 0; m <= 14; ++m)
        for (int k = 0; m + k <= 14; ++k)
            for (int kp = 0; m + k + kp <= 14; ++kp)
                for (int mp = 0; m + k + kp + mp <= 14; ++mp) {
                    findex idx{m, k, kp, mp};
                    bigint r = F_rec(idx);
                    REQUIRE(r == F_closed(idx));
                    if (r != 0) REQUIRE(mp == 2 * m + k);
                    if (idx.total() >= 1 && idx.total() <= 12) REQUIRE(r == F_det_oracle(idx));
                }
}

TEST_CASE("banded determinant routes agree") {
    for (int d = 1; d <= 10; ++d) {
        sparse_poly a = naive_determinant(f_banded_matrix(d));
        sparse_poly b = f_band_minor(sylvester_spec{3, d}, {0, 1, d + 2});
        CHECK(a == b);
    }
    CHECK_THROWS_AS(F_det_oracle({0, 0, 0, 0}), feasibility_error);  // d = 0
    CHECK_THROWS_AS(F_det_oracle({5, 3, 0, 5}), feasibility_error); // d = 13
}

TEST_CASE("H0_closed equals both printed combinations") {
    long cnt = 0;
    for (int m = 0; 3 * m <= 20; ++m)
        for (int k = 0; 3 * m + 2 * k <= 20; ++k)
            for (int kp = 0; 3 * m + 2 * k + kp <= 20; ++kp) {
                if (m == 0 && k == 0 && kp == 0) continue;
                int mp = 2 * m + k;
                bigint h = H0_closed(m, k, kp);
                REQUIRE(h == Hl_formula(0, {m, k, kp, mp}));
                REQUIRE(h == F_closed({m, k, kp, mp}) - F_closed({m, k - 1, kp, mp - 1}) +
                                 2 * F_closed({m - 1, k, kp, mp - 2}));
                ++cnt;
            }
    CHECK(cnt == 357);
    CHECK(H0_closed(0, 0, 5) == 1);
    CHECK(H0_closed(0, 0, 1) == 1);
}

TEST_CASE("H_l family satisfies the F-recurrence off each row's shift set") {
    // The linear recurrence breaks exactly where one of a row's shift tuples
    // lands on the origin of its F term (F(0) = 1 seeds the chain there).
    const std::vector<std::vector<findex>> shifts = {
        {{1, 0, 0, 2}, {0, 0, 1, 0}, {0, 0, 0, 0}},
        {{1, 0, 1, 1}, {0, 1, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}},
        {{1, 0, 2, 0}, {1, 0, 1, 0}, {2, 1, 0, 3}, {2, 0, 0, 2}, {1, 2, 0, 2}, {0, 2, 1, 0},
         {0, 2, 0, 0}},
        {{2, 0, 2, 1}, {1, 1, 2, 0}, {1, 1, 1, 0}, {3, 0, 0, 3}, {2, 0, 0, 1}, {2, 1, 0, 2},
         {2, 2, 0, 3}, {1, 3, 0, 2}, {0, 3, 1, 0}, {0, 3, 0, 0}},
        {{5, 0, 0, 6}, {4, 0, 0, 4}, {3, 1, 1, 3}, {2, 2, 1, 2}, {2, 3, 0, 3}, {2, 2, 0, 2},
         {3, 1, 0, 3}, {3, 0, 2, 2}, {2, 0, 3, 0}, {1, 4, 0, 2}, {0, 4, 1, 0}, {0, 4, 0, 0},
         {1, 2, 2, 0}, {1, 2, 1, 0}},
        {{3, 0, 3, 1}, {3, 1, 2, 2}, {3, 0, 2, 1}, {4, 1, 1, 4}, {4, 0, 1, 3}, {5, 1, 0, 6},
         {5, 0, 0, 5}, {2, 1, 2, 0}, {1, 5, 0, 2}, {0, 5, 0, 0}, {0, 6, 0, 1}, {1, 4, 1, 1},
         {1, 3, 1, 0}, {2, 4, 0, 3}, {2, 3, 0, 2}, {3, 2, 1, 3}, {4, 2, 0, 5}},
    };
    int exceptions = 0;
    for (int l = 0; l <= 5; ++l) {
        std::set<findex> ss(shifts[static_cast<size_t>(l)].begin(),
                            shifts[static_cast<size_t>(l)].end());
        for (int m = 0; m <= 10; ++m)
            for (int k = 0; m + k <= 10; ++k)
                for (int kp = 0; m + k + kp <= 10; ++kp)
                    for (int mp = 0; m + k + kp + mp <= 10; ++mp) {
                        if (m + k + kp + mp == 0) continue;
                        findex idx{m, k, kp, mp};
                        bigint lhs = Hl_formula(l, idx);
                        bigint rhs = Hl_formula(l, {m, k, kp - 1, mp}) -
                                     Hl_formula(l, {m, k - 1, kp, mp - 1}) +
                                     Hl_formula(l, {m - 1, k, kp, mp - 2});
                        bool broke = (lhs != rhs);
                        if (broke) ++exceptions;
                        REQUIRE(broke == (ss.count(idx) > 0));
                    }
    }
    CHECK(exceptions == 51); // shift tuples with 1 <= total <= 10
}

TEST_CASE("formula-vs-slice defect list is frozen") {
    // Per layer the slice equals (-1)^l times the printed formula, except on
    // these cells (all n <= 9: the n = l, l+1 boundary rows of every layer
    // plus a handful of isolated misprints in the l = 4, 5 rows).
    using defect = std::tuple<int, int, int, int, int, int, long, long>;
    const std::vector<defect> expected = {
        {1, 1, 0, 1, 0, 0, -1, -2}, {2, 2, 0, 2, 0, 0, 1, 2},   {2, 2, 1, 0, 1, 0, -2, -4},
        {2, 3, 1, 1, 0, 1, -1, 0},  {3, 3, 0, 3, 0, 0, -1, -2}, {3, 3, 1, 1, 1, 0, 3, 6},
        {3, 3, 2, 0, 0, 1, -3, -5}, {3, 4, 1, 2, 0, 1, 1, 0},   {4, 4, 0, 4, 0, 0, 1, 2},
        {4, 4, 1, 2, 1, 0, -4, -8}, {4, 4, 2, 0, 2, 0, 2, 0},   {4, 4, 2, 1, 0, 1, 4, 0},
        {4, 5, 1, 3, 0, 1, -1, 0},  {4, 5, 2, 1, 1, 1, 7, 0},   {4, 5, 3, 0, 0, 2, -3, 0},
        {5, 5, 2, 2, 0, 1, -5, 0},  {5, 5, 3, 0, 1, 1, 5, 0},   {4, 6, 2, 2, 0, 2, -9, -7},
        {4, 6, 3, 0, 1, 2, 2, 0},   {5, 6, 1, 4, 0, 1, 1, 0},   {5, 6, 2, 2, 1, 1, -9, 0},
        {5, 6, 3, 1, 0, 2, 4, 0},   {4, 7, 3, 1, 0, 3, 11, 13}, {5, 7, 2, 3, 0, 2, 11, 25},
        {5, 7, 3, 1, 1, 2, -13, 0}, {5, 7, 4, 0, 0, 3, 3, 0},   {4, 8, 4, 0, 0, 4, -3, -1},
        {5, 8, 3, 2, 0, 3, -14, 0}, {5, 9, 4, 1, 0, 4, 1, 0},
    };
    std::vector<defect> found;
    for (int n = 1; n <= 12; ++n)
        for (int l = 0; l <= std::min(n, 5); ++l) {
            int eps = (l % 2) ? -1 : 1;
            auto sl = hl_slice(l, n);
            std::map<findex, bigint> fm;
            for (int m = 0; 3 * m <= n + l; ++m)
                for (int k = std::max(0, l - 2 * m); 3 * m + 2 * k <= n + l; ++k) {
                    findex idx{m, k, n - 3 * m - 2 * k + l, 2 * m + k - l};
                    if (idx.mp < 0) continue;
                    bigint v = Hl_formula(l, idx);
                    if (v != 0) fm[idx] = eps * v;
                }
            std::set<findex> keys;
            for (auto& [k2, v] : sl) keys.insert(k2);
            for (auto& [k2, v] : fm) keys.insert(k2);
            for (const auto& key : keys) {
                bigint a = sl.count(key) ? sl.at(key) : bigint(0);
                bigint b = fm.count(key) ? fm.at(key) : bigint(0);
                if (a != b)
                    found.emplace_back(l, n, key.m, key.k, key.kp, key.mp, a.get_si(), b.get_si());
            }
        }
    CHECK(found == expected);
}

TEST_CASE("per-layer maxima: formula equals oracle off the 8 pinned cells") {
    const std::set<std::pair<int, int>> bad = {
        {1, 1}, {2, 2}, {3, 3}, {4, 4}, {4, 5}, {4, 6}, {5, 6}, {5, 7}};
    for (int n = 1; n <= 14; ++n)
        for (int l = 0; l <= std::min(n, 5); ++l) {
            bool same = (formula_max(l, n) == slice_max_of(hl_slice(l, n)));
            REQUIRE(same == !bad.count({l, n}));
        }
    // Hl_max routes small n through the slice oracle, so it is exact there
    CHECK(Hl_max(5, 7).value == 13); // the formula alone would give 25
    CHECK(Hl_max(4, 6).value == 9);
}

TEST_CASE("scan route equals brute formula enumeration for n >= 15") {
    for (int n = 15; n <= 40; ++n)
        for (int l = 0; l <= 5; ++l) {
            auto fast = Hl_max(l, n);
            std::vector<findex> arg;
            REQUIRE(fast.value == formula_max(l, n, &arg));
            REQUIRE(fast.argmax == arg);
        }
}

TEST_CASE("formula and mirror routes equal the slice oracle at 15 <= n <= 25") {
    for (int n = 15; n <= 25; ++n) {
        for (int l = 0; l <= 5; ++l)
            REQUIRE(Hl_max(l, n).value == slice_max_of(hl_slice(l, n)));
        for (int l = n - 5; l <= n; ++l) {
            auto fm = Hl_max(l, n);
            auto sl = hl_slice(l, n);
            REQUIRE(fm.value == slice_max_of(sl));
            std::vector<findex> arg;
            bigint best = 0;
            for (const auto& [idx, v] : sl) {
                bigint a = abs(v);
                if (a > best) {
                    best = a;
                    arg.assign(1, idx);
                } else if (a != 0 && a == best)
                    arg.push_back(idx);
            }
            REQUIRE(fm.argmax == arg);
        }
    }
}

TEST_CASE("explicit route selectors") {
    for (int n = 1; n <= 14; ++n)
        for (int l = 0; l <= n; ++l) {
            auto a = Hl_max(l, n);
            auto b = Hl_max_slice(l, n);
            REQUIRE(a.value == b.value);
            REQUIRE(a.argmax == b.argmax);
        }
    for (int n = 10; n <= 16; ++n)
        for (int l = 0; l <= n; ++l) {
            if (l > 5 && n - l > 5) continue;
            auto f = Hl_max_formula(l, n);
            auto s = Hl_max_slice(l, n);
            REQUIRE(f.value == s.value);
            REQUIRE(f.argmax == s.argmax);
        }
    CHECK_THROWS_AS(Hl_max_formula(3, 9), feasibility_error);  // small n: oracle only
    CHECK_THROWS_AS(Hl_max_formula(7, 14), feasibility_error); // no formula for mid layers
    CHECK_THROWS_AS(Hl_max_slice(2, 31), feasibility_error);   // past the slice envelope
}

TEST_CASE("H0 walk equals the layer maximum out to large n") {
    for (int n = 1; n <= 200; ++n) REQUIRE(H0_max_value(n) == Hl_max(0, n).value);
    bigint big = H0_max_value(2000);
    CHECK(big == Hl_max(0, 2000).value);
    CHECK(to_string(big).size() == 527);
}

TEST_CASE("H0 slice equals the closed form at n = 13, 14") {
    for (int n = 13; n <= 14; ++n) {
        auto sl = hl_slice(0, n);
        for (int m = 0; 3 * m <= n; ++m)
            for (int k = 0; 3 * m + 2 * k <= n; ++k) {
                int kp = n - 3 * m - 2 * k;
                findex idx{m, k, kp, 2 * m + k};
                bigint got = sl.count(idx) ? sl.at(idx) : bigint(0);
                REQUIRE(got == H0_closed(m, k, kp));
            }
    }
}

TEST_CASE("layer lift equals the slice oracle") {
    for (int n = 15; n <= 25; n += 5)
        for (int l : {0, 1, 3, 6, 10, 11}) REQUIRE(hl_slice_lifted(l, n) == hl_slice(l, n));
    CHECK_THROWS_AS(hl_slice_lifted(12, 20), feasibility_error); // degenerate seed slice
    CHECK(to_string(hl_max_via_lift(6, 200)).size() == 51);
}

TEST_CASE("argmax table matches the printed rows") {
    const std::map<int, std::set<int>> pins = {
        {1, {0}},  {2, {1}},  {3, {0}},  {4, {1}},  {5, {1, 2}}, {6, {3}},  {7, {3}},
        {8, {0}},  {9, {3}},  {10, {3}}, {11, {0}}, {12, {0}},   {13, {3}}, {14, {3}},
        {15, {3}}, {16, {3}}, {17, {3}}, {18, {0}}, {19, {0}},
    };
    for (const auto& [n, want] : pins) REQUIRE(canonical_argmax(hl_argmax_table(n), n) == want);
    CHECK((hl_argmax_table(5) == std::set<int>{1, 2, 3, 4})); // the full (unfolded) tie
}

TEST_CASE("cubic height series matches the expansion oracle pins") {
    const std::vector<long> series = {1, 3, 3, 5, 7, 18, 24, 32, 63, 105, 165, 252};
    for (int n = 1; n <= 12; ++n) {
        bigint best = 0;
        for (int l = 0; l <= n; ++l) {
            bigint sm = Hl_max(l, n).value;
            if (sm > best) best = sm;
        }
        REQUIRE(best == series[static_cast<size_t>(n - 1)]);
    }
}

TEST_CASE("tribonacci bounds") {
    auto tb = tribonacci_bounds(200);
    CHECK(tb.A[1] == 1);
    CHECK(tb.A[2] == 2);
    CHECK(tb.A[3] == 4);
    CHECK(tb.A[4] == 7);
    CHECK(tb.A[5] == 13);
    CHECK(tb.B[3] == tb.A[2] + tb.A[1]);
    CHECK(tb.C[2] == tb.A[1]);
    const long double alpha = 1.83928675521416113255L;
    auto bound_ok = [&](const bigint& v, long double c0, int mm) {
        return log_abs(v) <= std::log(c0) + mm * std::log(alpha) + 1e-12L;
    };
    for (int m = 3; m <= 200; ++m) REQUIRE(bound_ok(tb.A[m], 0.7L, m));
    for (int m = 5; m <= 200; ++m) REQUIRE(bound_ok(tb.B[m], 0.6L, m));
    for (int m = 4; m <= 200; ++m) REQUIRE(bound_ok(tb.C[m], 0.4L, m));
    long double ratio = to_long_double(tb.A[61]) / to_long_double(tb.A[60]);
    CHECK(std::fabs(static_cast<double>(ratio - alpha)) < 1e-6);
}

TEST_CASE("error routes") {
    CHECK_THROWS_AS(Hl_max(8, 40), feasibility_error);
    CHECK_THROWS_AS(Hl_formula(6, {0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(H0_closed(0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(H0_closed(-1, 0, 2), std::domain_error);
    CHECK_THROWS_AS(Hl_max(-1, 5), std::invalid_argument);
    CHECK_THROWS_AS(Hl_max(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(Hl_max(0, 0), std::domain_error);
    CHECK_THROWS_AS(hl_slice(0, 31), feasibility_error);
}
