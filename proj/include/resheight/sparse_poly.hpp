#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resheight/bigint.hpp"
#include "resheight/errors.hpp"

namespace resheight {

// Variable universe of a polynomial: nf variables f_0..f_{nf-1} followed by
// ng variables g_0..g_{ng-1}. A resultant instance Res(m, n) lives in the
// universe (m+1, n+1); f-only polynomials (band minors, Girard sums) use
// ng = 0.
struct universe {
    int nf = 0;
    int ng = 0;

    int arity() const { return nf + ng; }
    bool operator==(const universe&) const = default;
};

// Exponent vector over a universe, stored as one char16_t per variable
// (the extremal quadratic monomial at n carries an exponent near 0.45n, so a
// single byte would cap usable n around 570; 16 bits reach n ~ 1.4e5). The
// string compares lexicographically with f-variables first, which is the
// canonical term order.
using monomial = std::u16string;

inline monomial make_monomial(const universe& u, const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) != u.arity())
        throw universe_error("monomial arity " + std::to_string(exps.size()) +
                             " does not match universe arity " + std::to_string(u.arity()));
    monomial m(static_cast<size_t>(u.arity()), char16_t(0));
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 0xffff)
            throw std::overflow_error("monomial exponent " + std::to_string(exps[i]) +
                                      " outside the representable range 0..65535");
        m[i] = static_cast<char16_t>(exps[i]);
    }
    return m;
}

inline int exponent(const monomial& m, int var) { return static_cast<int>(m[static_cast<size_t>(var)]); }

// Sparse multivariate polynomial with exact bigint coefficients. Zero
// coefficients are never stored; the zero polynomial has an empty term map.
class sparse_poly {
public:
    explicit sparse_poly(universe u) : u_(u) {}
    sparse_poly(universe u, const monomial& m, bigint c) : u_(u) {
        if (c != 0) terms_[m] = std::move(c);
    }

    const universe& univ() const { return u_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const monomial& m, const bigint& c) {
        if (static_cast<int>(m.size()) != u_.arity())
            throw universe_error("term arity mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::unordered_map<monomial, bigint>& terms() const { return terms_; }

    // Terms in canonical (lexicographic, f-first) order for serialization.
    std::vector<std::pair<monomial, bigint>> sorted_terms() const;

    bigint coefficient_of(const monomial& m) const {
        if (static_cast<int>(m.size()) != u_.arity())
            throw universe_error("monomial arity mismatch in coefficient_of");
        auto it = terms_.find(m);
        return it == terms_.end() ? bigint(0) : it->second;
    }

    // Largest absolute coefficient; 0 for the zero polynomial.
    bigint height() const;

    // Max total degree in the f-variables and in the g-variables. `uniform`
    // is false when some pair of terms disagrees (a resultant is homogeneous
    // in each group, so disagreement is worth reporting, not throwing).
    struct group_degrees_result {
        int f_degree = 0;
        int g_degree = 0;
        bool uniform = true;
    };
    group_degrees_result group_degrees() const;

    // Set of weighted degrees sum_i i*alpha_i + sum_j j*beta_j over all terms;
    // a resultant yields the singleton {m*n}.
    std::set<long> omega_degree_set() const;

    sparse_poly operator+(const sparse_poly& o) const;
    sparse_poly operator-(const sparse_poly& o) const;
    sparse_poly operator*(const sparse_poly& o) const;
    bool operator==(const sparse_poly& o) const { return u_ == o.u_ && terms_ == o.terms_; }

private:
    void require_same_universe(const sparse_poly& o) const {
        if (!(u_ == o.u_))
            throw universe_error("polynomials from different variable universes");
    }

    universe u_;
    std::unordered_map<monomial, bigint> terms_;
};

} // namespace resheight
