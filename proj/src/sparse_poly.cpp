#include "resheight/sparse_poly.hpp"

#include <algorithm>

namespace resheight {

namespace {
bigint factorial_impl(unsigned long n) {
    bigint r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}
} // namespace

bigint factorial(unsigned long n) { return factorial_impl(n); }

bigint binomial(unsigned long n, unsigned long k) {
    bigint r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<std::pair<monomial, bigint>> sparse_poly::sorted_terms() const {
    std::vector<std::pair<monomial, bigint>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bigint sparse_poly::height() const {
    bigint best = 0;
    for (const auto& [m, c] : terms_) {
        bigint a = abs(c);
        if (a > best) best = a;
    }
    return best;
}

sparse_poly::group_degrees_result sparse_poly::group_degrees() const {
    group_degrees_result r;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int fd = 0, gd = 0;
        for (int i = 0; i < u_.nf; ++i) fd += exponent(m, i);
        for (int j = 0; j < u_.ng; ++j) gd += exponent(m, u_.nf + j);
        if (first) {
            r.f_degree = fd;
            r.g_degree = gd;
            first = false;
        } else {
            if (fd != r.f_degree || gd != r.g_degree) r.uniform = false;
            r.f_degree = std::max(r.f_degree, fd);
            r.g_degree = std::max(r.g_degree, gd);
        }
    }
    return r;
}

std::set<long> sparse_poly::omega_degree_set() const {
    std::set<long> out;
    for (const auto& [m, c] : terms_) {
        long w = 0;
        for (int i = 0; i < u_.nf; ++i) w += static_cast<long>(i) * exponent(m, i);
        for (int j = 0; j < u_.ng; ++j) w += static_cast<long>(j) * exponent(m, u_.nf + j);
        out.insert(w);
    }
    return out;
}

sparse_poly sparse_poly::operator+(const sparse_poly& o) const {
    require_same_universe(o);
    sparse_poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

sparse_poly sparse_poly::operator-(const sparse_poly& o) const {
    require_same_universe(o);
    sparse_poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

sparse_poly sparse_poly::operator*(const sparse_poly& o) const {
    require_same_universe(o);
    sparse_poly r(u_);
    monomial prod(static_cast<size_t>(u_.arity()), char16_t(0));
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < u_.arity(); ++i)
                prod[static_cast<size_t>(i)] =
                    static_cast<char16_t>(ma[static_cast<size_t>(i)] + mb[static_cast<size_t>(i)]);
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

} // namespace resheight
