#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A series of order N stores the Taylor coefficients c_0..c_N and represents
// sum c_n x^n + O(x^{N+1}). The EGF coefficient a_n = n! c_n is what the
// combinatorial identities are stated in. All arithmetic is exact, so results
// are independent of evaluation order; values are immutable once built.

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirling/rational.hpp"

namespace stirling {

class egf_series {
public:
    // Zero series of the given order.
    explicit egf_series(unsigned order) : coeffs_(std::size_t(order) + 1) {}

    egf_series(unsigned order, std::vector<rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != std::size_t(order) + 1)
            throw std::invalid_argument("egf_series: need order + 1 coefficients");
    }

    static egf_series constant(const rational& c, unsigned order)
    {
        egf_series f(order);
        f.coeffs_[0] = c;
        return f;
    }

    // The series x (truncated; at order 0 that leaves the zero series).
    static egf_series identity(unsigned order)
    {
        egf_series f(order);
        if (order >= 1)
            f.coeffs_[1] = 1;
        return f;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const rational& coeff(unsigned n) const
    {
        if (n >= coeffs_.size())
            throw std::out_of_range("egf_series: coefficient index past order");
        return coeffs_[n];
    }

    // a_n = n! c_n
    rational egf_coeff(unsigned n) const { return coeff(n) * rational(factorial(n)); }

    friend bool operator==(const egf_series&, const egf_series&) = default;

private:
    std::vector<rational> coeffs_;

    friend egf_series operator+(const egf_series&, const egf_series&);
    friend egf_series operator-(const egf_series&, const egf_series&);
    friend egf_series operator*(const egf_series&, const egf_series&);
    friend egf_series operator*(const rational&, const egf_series&);
    friend egf_series operator-(const egf_series&);
    friend egf_series series_exp(const egf_series&);
    friend egf_series series_reciprocal(const egf_series&);
    friend egf_series scale_argument(const egf_series&, const rational&);
    friend egf_series truncate(const egf_series&, unsigned);
    friend egf_series derivative(const egf_series&);
};

namespace detail {

inline void require_same_order(const egf_series& f, const egf_series& g, const char* what)
{
    if (f.order() != g.order())
        throw std::invalid_argument(std::string(what) + ": order mismatch");
}

} // namespace detail

inline egf_series operator+(const egf_series& f, const egf_series& g)
{
    detail::require_same_order(f, g, "series addition");
    egf_series r(f.order());
    for (unsigned n = 0; n <= f.order(); ++n)
        r.coeffs_[n] = f.coeff(n) + g.coeff(n);
    return r;
}

inline egf_series operator-(const egf_series& f, const egf_series& g)
{
    detail::require_same_order(f, g, "series subtraction");
    egf_series r(f.order());
    for (unsigned n = 0; n <= f.order(); ++n)
        r.coeffs_[n] = f.coeff(n) - g.coeff(n);
    return r;
}

inline egf_series operator-(const egf_series& f)
{
    egf_series r(f.order());
    for (unsigned n = 0; n <= f.order(); ++n)
        r.coeffs_[n] = -f.coeff(n);
    return r;
}

// Cauchy product, truncated at the common order.
inline egf_series operator*(const egf_series& f, const egf_series& g)
{
    detail::require_same_order(f, g, "series multiplication");
    egf_series r(f.order());
    for (unsigned n = 0; n <= f.order(); ++n) {
        rational acc = 0;
        for (unsigned k = 0; k <= n; ++k)
            acc += f.coeff(k) * g.coeff(n - k);
        r.coeffs_[n] = std::move(acc);
    }
    return r;
}

inline egf_series operator*(const rational& c, const egf_series& f)
{
    egf_series r(f.order());
    for (unsigned n = 0; n <= f.order(); ++n)
        r.coeffs_[n] = c * f.coeff(n);
    return r;
}

// e^x - 1: coefficients 1/n! for n >= 1.
inline egf_series exp_minus_one(unsigned order)
{
    std::vector<rational> c(std::size_t(order) + 1);
    rational term = 1;
    for (unsigned n = 1; n <= order; ++n) {
        term /= n;
        c[n] = term;
    }
    return egf_series(order, std::move(c));
}

// ln(1 + x): coefficients (-1)^{n+1}/n for n >= 1.
inline egf_series log_one_plus(unsigned order)
{
    std::vector<rational> c(std::size_t(order) + 1);
    for (unsigned n = 1; n <= order; ++n) {
        c[n] = rational(1, n);
        if (n % 2 == 0)
            c[n] = -c[n];
    }
    return egf_series(order, std::move(c));
}

// outer(inner) by Horner evaluation; truncation order is preserved because
// inner has no constant term.
inline egf_series compose(const egf_series& outer, const egf_series& inner)
{
    detail::require_same_order(outer, inner, "compose");
    if (inner.coeff(0) != 0)
        throw std::invalid_argument("composition requires zero constant term");
    const unsigned n = outer.order();
    egf_series acc = egf_series::constant(outer.coeff(n), n);
    for (unsigned i = n; i-- > 0;)
        acc = acc * inner + egf_series::constant(outer.coeff(i), n);
    return acc;
}

// sigma tower: sigma(1) = e^x - 1, sigma(-1) = ln(1+x), sigma(0) = x,
// sigma(p) = p-fold self-composition of the base for the sign of p.
inline egf_series sigma(int p, unsigned order)
{
    const egf_series base = p >= 0 ? exp_minus_one(order) : log_one_plus(order);
    egf_series f = egf_series::identity(order);
    for (long i = 0, reps = std::abs(static_cast<long>(p)); i < reps; ++i)
        f = compose(base, f);
    return f;
}

inline egf_series series_pow(const egf_series& f, unsigned m)
{
    egf_series r = egf_series::constant(1, f.order());
    for (unsigned i = 0; i < m; ++i)
        r = r * f;
    return r;
}

// exp(f) for f with zero constant term, via g' = f' g:
// g_0 = 1, g_n = (1/n) sum_{k=1..n} k f_k g_{n-k}.
inline egf_series series_exp(const egf_series& f)
{
    if (f.coeff(0) != 0)
        throw std::invalid_argument("series_exp requires zero constant term");
    const unsigned order = f.order();
    egf_series g(order);
    g.coeffs_[0] = 1;
    for (unsigned n = 1; n <= order; ++n) {
        rational acc = 0;
        for (unsigned k = 1; k <= n; ++k)
            acc += rational(k) * f.coeff(k) * g.coeffs_[n - k];
        g.coeffs_[n] = acc / n;
    }
    return g;
}

// 1/f for f with nonzero constant term.
inline egf_series series_reciprocal(const egf_series& f)
{
    if (f.coeff(0) == 0)
        throw std::invalid_argument("not invertible");
    const unsigned order = f.order();
    egf_series g(order);
    g.coeffs_[0] = rational(1) / f.coeff(0);
    for (unsigned n = 1; n <= order; ++n) {
        rational acc = 0;
        for (unsigned k = 1; k <= n; ++k)
            acc += f.coeff(k) * g.coeffs_[n - k];
        g.coeffs_[n] = -acc / f.coeff(0);
    }
    return g;
}

// f(r x): c_n -> c_n r^n.
inline egf_series scale_argument(const egf_series& f, const rational& r)
{
    egf_series g(f.order());
    rational pw = 1;
    for (unsigned n = 0; n <= f.order(); ++n) {
        g.coeffs_[n] = f.coeff(n) * pw;
        pw *= r;
    }
    return g;
}

inline egf_series truncate(const egf_series& f, unsigned new_order)
{
    if (new_order > f.order())
        throw std::invalid_argument("truncate: order may not increase");
    egf_series g(new_order);
    for (unsigned n = 0; n <= new_order; ++n)
        g.coeffs_[n] = f.coeff(n);
    return g;
}

// Termwise d/dx; drops the order by one.
inline egf_series derivative(const egf_series& f)
{
    if (f.order() == 0)
        throw std::invalid_argument("derivative: order 0 series");
    egf_series g(f.order() - 1);
    for (unsigned n = 0; n < f.order(); ++n)
        g.coeffs_[n] = rational(n + 1) * f.coeff(n + 1);
    return g;
}

} // namespace stirling
