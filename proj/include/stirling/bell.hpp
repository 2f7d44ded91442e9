#pragma once

// Higher-order Bell polynomials and numbers: B(p, n; x) has the row of S^p
// as its coefficient list, B(p, n) = B(p, n; 1). Two floating-point routes
// (a weighted Poisson-style sum and a contour quadrature) cross-check the
// exact values; both carry an error estimate and refuse to overflow.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirling/polynomial.hpp"
#include "stirling/series.hpp"
#include "stirling/stirling_matrix.hpp"

namespace stirling {

struct numeric_approx {
    double value = 0.0;
    double est_error = 0.0;
};

namespace detail {

// Conversions into the float oracles refuse past 1e300 instead of silently
// saturating to inf.
inline double guarded_double(const big_int& v, const char* context)
{
    const double d = v.convert_to<double>();
    if (!std::isfinite(d) || std::fabs(d) > 1e300)
        throw std::overflow_error(context);
    return d;
}

} // namespace detail

inline int_polynomial bell_polynomial(unsigned p, unsigned n)
{
    const stirling_matrix s = matrix_power(static_cast<int>(p), n);
    std::vector<big_int> c(std::size_t(n) + 1);
    for (unsigned m = 0; m <= n; ++m)
        c[m] = s.at(n, m);
    return int_polynomial(std::move(c));
}

inline rational bell_eval(unsigned p, unsigned n, const rational& x)
{
    return bell_polynomial(p, n).eval(x);
}

inline big_int bell_number(unsigned p, unsigned n)
{
    return bell_polynomial(p, n).eval(big_int(1));
}

// B(p, n; x) = e^{-x} sum_{k>=0} x^k B(p-1, n; k) / k!  for x > 0.
//
// Terms are positive and eventually decay faster than geometrically: the
// coefficient polynomial has nonnegative coefficients, so
// B(k+1) <= ((k+1)/k)^n B(k) and term_{k+1}/term_k <= r(k) with
// r(k) = x/(k+1) ((k+1)/k)^n, decreasing in k. Summation stops once the mode
// is passed (k > x), r(k) < 1, and the term is below tol relative to the
// partial sum; est_error is the geometric tail bound term r/(1-r), scaled by
// the same e^{-x} as the value.
inline numeric_approx dobinski_sum(unsigned p, unsigned n, double x, double tol,
                                   unsigned max_terms = 500)
{
    if (p < 1)
        throw std::invalid_argument("dobinski_sum requires p >= 1");
    if (!(x > 0))
        throw std::invalid_argument("dobinski_sum requires x > 0");
    if (!(tol > 0))
        throw std::invalid_argument("dobinski_sum requires tol > 0");

    const int_polynomial poly = bell_polynomial(p - 1, n);
    double sum = 0.0;
    double weight = 1.0; // x^k / k!
    for (unsigned k = 0; k < max_terms; ++k) {
        const double term =
            weight * detail::guarded_double(poly.eval(big_int(k)), "dobinski_sum overflow guard");
        sum += term;
        if (!std::isfinite(sum) || sum > 1e300)
            throw std::overflow_error("dobinski_sum overflow guard");
        if (k >= 1 && k > x) {
            const double ratio = x / (k + 1) * std::pow((k + 1.0) / k, double(n));
            if (ratio < 1.0 && term < tol * std::max(1.0, sum)) {
                const double damp = std::exp(-x);
                return {damp * sum, damp * term * ratio / (1.0 - ratio)};
            }
        }
        weight *= x / (k + 1);
    }
    throw std::runtime_error("tolerance not reached");
}

// B(p, n; x) = (2 n! / pi) Im integral_0^pi exp(x sigma_p(e^{it})) sin(nt) dt
// with sigma_p the p-fold iterate of z -> e^z - 1. Composite Simpson on a
// uniform grid; est_error compares against the doubled grid.
inline numeric_approx cesaro_integral(unsigned p, unsigned n, double x, unsigned quad_points)
{
    if (n < 1)
        throw std::invalid_argument("cesaro_integral requires n >= 1");
    if (quad_points < 8)
        throw std::invalid_argument("cesaro_integral requires quad_points >= 8");

    const double pi = std::numbers::pi;
    const double scale =
        2.0 * detail::guarded_double(factorial(n), "quadrature overflow") / pi;

    const auto integrand = [&](double t) {
        std::complex<double> z = std::polar(1.0, t);
        for (unsigned i = 0; i < p; ++i) {
            if (z.real() > 700.0)
                throw std::overflow_error("quadrature overflow");
            z = std::exp(z) - 1.0;
        }
        const std::complex<double> w = x * z;
        if (w.real() > 700.0)
            throw std::overflow_error("quadrature overflow");
        return std::exp(w).imag() * std::sin(n * t);
    };

    const auto simpson = [&](unsigned intervals) {
        intervals += intervals % 2;
        const double h = pi / intervals;
        double acc = integrand(0.0) + integrand(pi);
        for (unsigned i = 1; i < intervals; ++i)
            acc += (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * h);
        return acc * h / 3.0;
    };

    const double coarse = simpson(quad_points);
    const double fine = simpson(2 * quad_points);

    numeric_approx r;
    r.value = scale * coarse;
    r.est_error = std::fabs(scale * (fine - coarse));
    if (!std::isfinite(r.value) || std::fabs(r.value) > 1e300)
        throw std::overflow_error("quadrature overflow");
    return r;
}

} // namespace stirling
