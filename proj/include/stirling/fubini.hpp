#pragma once

// Higher-order Fubini (ordered Bell) polynomials: F(p, n; x) weights row n of
// S^p with m!, F(p, n) = F(p, n; 1). The geometric half-weighted sum
// sum_k B(p-1, n; k) / 2^{k+1} converges to F(p, n); the unshifted variant
// (coefficient order p instead of p-1) is kept as a diagnostic because it
// reproduces F(p+1, n) instead.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirling/bell.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/series.hpp"
#include "stirling/stirling_matrix.hpp"

namespace stirling {

inline int_polynomial fubini_polynomial(unsigned p, unsigned n)
{
    if (p < 1)
        throw std::invalid_argument("fubini_polynomial requires p >= 1");
    const stirling_matrix s = matrix_power(static_cast<int>(p), n);
    std::vector<big_int> c(std::size_t(n) + 1);
    big_int m_fact = 1;
    for (unsigned m = 0; m <= n; ++m) {
        if (m > 0)
            m_fact *= m;
        c[m] = m_fact * s.at(n, m);
    }
    return int_polynomial(std::move(c));
}

inline big_int fubini_number(unsigned p, unsigned n)
{
    return fubini_polynomial(p, n).eval(big_int(1));
}

namespace detail {

// sum_{k>=0} P(k) / 2^{k+1} for a polynomial P of degree <= n with
// nonnegative coefficients. Past k > n/ln 2 the term ratio is bounded by
// r(k) = ((k+1)/k)^n / 2 < 1, so the geometric tail bound applies.
inline numeric_approx half_weighted_sum(const int_polynomial& poly, unsigned n, double tol,
                                        unsigned max_terms, const char* guard)
{
    double sum = 0.0;
    double weight = 0.5; // 1 / 2^{k+1}
    for (unsigned k = 0; k < max_terms; ++k) {
        const double term = weight * guarded_double(poly.eval(big_int(k)), guard);
        sum += term;
        if (!std::isfinite(sum) || sum > 1e300)
            throw std::overflow_error(guard);
        if (k >= 1) {
            const double ratio = 0.5 * std::pow((k + 1.0) / k, double(n));
            if (ratio < 1.0 && term < tol * std::max(1.0, sum))
                return {sum, term * ratio / (1.0 - ratio)};
        }
        weight *= 0.5;
    }
    throw std::runtime_error("tolerance not reached");
}

} // namespace detail

inline numeric_approx fubini_geometric_sum(unsigned p, unsigned n, double tol,
                                           unsigned max_terms = 500)
{
    if (p < 1)
        throw std::invalid_argument("fubini_geometric_sum requires p >= 1");
    if (!(tol > 0))
        throw std::invalid_argument("fubini_geometric_sum requires tol > 0");
    return detail::half_weighted_sum(bell_polynomial(p - 1, n), n, tol, max_terms,
                                     "fubini_geometric_sum overflow guard");
}

// Diagnostic only: the same sum built from B(p, n; k) rather than
// B(p-1, n; k). Converges fine, but to F(p+1, n), so it deviates from
// F(p, n) for every p >= 1 once n >= 2.
inline numeric_approx fubini_geometric_sum_unshifted(unsigned p, unsigned n, double tol,
                                                     unsigned max_terms = 500)
{
    if (p < 1)
        throw std::invalid_argument("fubini_geometric_sum_unshifted requires p >= 1");
    if (!(tol > 0))
        throw std::invalid_argument("fubini_geometric_sum_unshifted requires tol > 0");
    return detail::half_weighted_sum(bell_polynomial(p, n), n, tol, max_terms,
                                     "fubini_geometric_sum_unshifted overflow guard");
}

// sum_n F(p, n; x) t^n / n! = 1 / (1 - x sigma_p(t)) as a truncated identity.
inline bool fubini_egf_check(unsigned p, const rational& x, unsigned order)
{
    if (p < 1)
        throw std::invalid_argument("fubini_egf_check requires p >= 1");
    std::vector<rational> lhs(std::size_t(order) + 1);
    big_int n_fact = 1;
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0)
            n_fact *= n;
        lhs[n] = fubini_polynomial(p, n).eval(x) / rational(n_fact);
    }
    const egf_series rhs = series_reciprocal(
        egf_series::constant(1, order) - x * sigma(static_cast<int>(p), order));
    return egf_series(order, std::move(lhs)) == rhs;
}

} // namespace stirling
