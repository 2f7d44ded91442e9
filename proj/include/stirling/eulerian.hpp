#pragma once

// Higher-order Eulerian numbers A(p; n, m), built from S^p by the inversion
// formula A(p; n, m) = sum_k k! S^p(n, k) C(n-k, m) (-1)^{n-k-m}. For p = 1
// this is the classical ascent-count triangle. Note the order matters: the
// triangle for S^p is not the p-th matrix power of the p = 1 triangle.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirling/fubini.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/series.hpp"
#include "stirling/stirling_matrix.hpp"

namespace stirling {

class eulerian_matrix {
public:
    eulerian_matrix(unsigned p, unsigned n_max)
        : order_p_(p), n_max_(n_max),
          entries_(std::size_t(n_max + 1) * (n_max + 1))
    {
        if (p < 1)
            throw std::invalid_argument("eulerian_matrix requires p >= 1");
        const stirling_matrix s = matrix_power(static_cast<int>(p), n_max);
        std::vector<big_int> k_fact(std::size_t(n_max) + 1);
        k_fact[0] = 1;
        for (unsigned k = 1; k <= n_max; ++k)
            k_fact[k] = k_fact[k - 1] * k;
        for (unsigned n = 0; n <= n_max; ++n)
            for (unsigned m = 0; m <= n; ++m) {
                big_int acc = 0;
                // C(n-k, m) vanishes for k > n-m.
                for (unsigned k = 0; k + m <= n; ++k) {
                    const big_int term = k_fact[k] * s.at(n, k) * binomial(n - k, m);
                    acc += (n - k - m) % 2 == 0 ? term : -term;
                }
                entries_[idx_(n, m)] = std::move(acc);
            }
    }

    unsigned order_p() const { return order_p_; }
    unsigned size() const { return n_max_; }

    const big_int& at(unsigned n, unsigned m) const
    {
        if (n > n_max_ || m > n_max_)
            throw std::out_of_range("eulerian_matrix: index past size");
        return entries_[idx_(n, m)];
    }

    friend bool operator==(const eulerian_matrix&, const eulerian_matrix&) = default;

private:
    std::size_t idx_(unsigned n, unsigned m) const { return std::size_t(n) * (n_max_ + 1) + m; }

    unsigned order_p_;
    unsigned n_max_;
    std::vector<big_int> entries_;
};

// Row n as a polynomial in x.
inline int_polynomial eulerian_polynomial(unsigned p, unsigned n)
{
    const eulerian_matrix a(p, n);
    std::vector<big_int> c(std::size_t(n) + 1);
    for (unsigned m = 0; m <= n; ++m)
        c[m] = a.at(n, m);
    return int_polynomial(std::move(c));
}

// m! S^p(n, m) = sum_k A(p; n, k) C(k, n-m) for all 0 <= m <= n <= n_max.
inline bool check_stirling_recovery(unsigned p, unsigned n_max)
{
    const eulerian_matrix a(p, n_max);
    const stirling_matrix s = matrix_power(static_cast<int>(p), n_max);
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned m = 0; m <= n; ++m) {
            big_int rhs = 0;
            for (unsigned k = 0; k <= n; ++k)
                rhs += a.at(n, k) * binomial(k, n - m);
            if (factorial(m) * s.at(n, m) != rhs)
                return false;
        }
    return true;
}

// F(p, n; x) = sum_k A(p; n, k) (x+1)^k x^{n-k}.
inline bool check_fubini_expansion(unsigned p, const rational& x, unsigned n_max)
{
    const eulerian_matrix a(p, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        rational rhs = 0;
        for (unsigned k = 0; k <= n; ++k)
            rhs += rational(a.at(n, k)) * rational_pow(x + 1, k) * rational_pow(x, n - k);
        if (fubini_polynomial(p, n).eval(x) != rhs)
            return false;
    }
    return true;
}

// F(p, n; x) = x^n A_n(p; (x+1)/x), undefined at x = 0.
inline bool check_fubini_substitution(unsigned p, const rational& x, unsigned n_max)
{
    if (x == 0)
        throw std::domain_error("division by zero in argument transform");
    const rational u = (x + 1) / x;
    for (unsigned n = 0; n <= n_max; ++n) {
        const rational rhs = rational_pow(x, n) * eulerian_polynomial(p, n).eval(u);
        if (fubini_polynomial(p, n).eval(x) != rhs)
            return false;
    }
    return true;
}

// Defining expansion: F(p, n; x) / x^n = sum_k A(p; n, k) ((x+1)/x)^k,
// checked as an exact rational identity at the given point.
inline bool check_defining_basis(unsigned p, const rational& x, unsigned n_max)
{
    if (x == 0)
        throw std::domain_error("division by zero in argument transform");
    const eulerian_matrix a(p, n_max);
    const rational u = (x + 1) / x;
    for (unsigned n = 0; n <= n_max; ++n) {
        rational rhs = 0;
        for (unsigned k = 0; k <= n; ++k)
            rhs += rational(a.at(n, k)) * rational_pow(u, k);
        const rational lhs = fubini_polynomial(p, n).eval(x) / rational_pow(x, n);
        if (lhs != rhs)
            return false;
    }
    return true;
}

// sum_n A_n(p; x) t^n / n! = (x-1) / (x - exp(sigma_{p-1}((x-1)t))) as a
// truncated identity; the closed form has a pole at x = 1.
inline bool eulerian_egf_check(unsigned p, const rational& x, unsigned order)
{
    if (p < 1)
        throw std::invalid_argument("eulerian_egf_check requires p >= 1");
    if (x == 1)
        throw std::domain_error("EGF closed form singular at x=1");

    const eulerian_matrix a(p, order);
    std::vector<rational> lhs(std::size_t(order) + 1);
    big_int n_fact = 1;
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0)
            n_fact *= n;
        rational row = 0;
        for (unsigned m = 0; m <= n; ++m)
            row += rational(a.at(n, m)) * rational_pow(x, m);
        lhs[n] = row / rational(n_fact);
    }

    const egf_series inner = scale_argument(sigma(static_cast<int>(p) - 1, order), x - 1);
    const egf_series denom = egf_series::constant(x, order) - series_exp(inner);
    const egf_series rhs = (x - 1) * series_reciprocal(denom);
    return egf_series(order, std::move(lhs)) == rhs;
}

} // namespace stirling
