#pragma once

// The integer sequence fixed by the Stirling transform up to an index shift:
// C_0 = 0, C_1 = 1, C_{n+1} = sum_k S(n,k) C_k for n >= 1, so applying the
// transform reproduces the sequence shifted by one from row 1 on (row 0
// gives 0, not C_1; the seeds are not produced by the recurrence).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stirling/rational.hpp"
#include "stirling/series.hpp"
#include "stirling/stirling_matrix.hpp"

namespace stirling {

inline big_int_sequence eigensequence(unsigned n_max)
{
    big_int_sequence c(std::size_t(n_max) + 1);
    if (n_max >= 1)
        c[1] = 1;
    if (n_max >= 2) {
        const stirling_matrix s = stirling2_triangle(n_max - 1);
        for (unsigned n = 1; n + 1 <= n_max; ++n) {
            big_int acc = 0;
            for (unsigned k = 1; k <= n; ++k)
                acc += s.at(n, k) * c[k];
            c[n + 1] = acc;
        }
    }
    return c;
}

// C_{n+2} = 1 + sum_k C(n,k) C'_k with C' the image of C under the squared
// transform, for all n with n+2 <= n_max.
inline bool check_binomial_identity(unsigned n_max)
{
    const big_int_sequence c = eigensequence(n_max);
    if (n_max < 2)
        return true;
    const stirling_matrix s2 = matrix_power(2, n_max);
    std::vector<big_int> image(std::size_t(n_max) + 1);
    for (unsigned k = 0; k <= n_max; ++k) {
        big_int acc = 0;
        for (unsigned j = 0; j <= k; ++j)
            acc += s2.at(k, j) * c[j];
        image[k] = acc;
    }
    for (unsigned n = 0; n + 2 <= n_max; ++n) {
        big_int rhs = 1;
        for (unsigned k = 0; k <= n; ++k)
            rhs += binomial(n, k) * image[k];
        if (c[n + 2] != rhs)
            return false;
    }
    return true;
}

// C_{n+2} = sum_k S(n,k) (C_{k+1} + k C_k) for all n with n+2 <= n_max.
inline bool check_shifted_recurrence(unsigned n_max)
{
    const big_int_sequence c = eigensequence(n_max);
    if (n_max < 2)
        return true;
    const stirling_matrix s = stirling2_triangle(n_max - 2);
    for (unsigned n = 0; n + 2 <= n_max; ++n) {
        big_int rhs = 0;
        for (unsigned k = 0; k <= n; ++k)
            rhs += s.at(n, k) * (c[k + 1] + big_int(k) * c[k]);
        if (c[n + 2] != rhs)
            return false;
    }
    return true;
}

// With f the EGF of C: f'(x) = f(e^x - 1) + 1, and differentiating once
// more, f''(x) = e^x [f(sigma_2(x)) + 1]. Both are verified as truncated
// series identities at the given order.
inline bool check_egf_ode(unsigned order)
{
    const big_int_sequence c = eigensequence(order);
    std::vector<rational> coeffs(std::size_t(order) + 1);
    big_int n_fact = 1;
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0)
            n_fact *= n;
        coeffs[n] = rational(c[n]) / rational(n_fact);
    }
    const egf_series f(order, std::move(coeffs));

    if (order >= 1) {
        const egf_series lhs = derivative(f);
        const egf_series rhs =
            truncate(compose(f, sigma(1, order)), order - 1) +
            egf_series::constant(1, order - 1);
        if (lhs != rhs)
            return false;
    }

    if (order >= 2) {
        const egf_series lhs = derivative(derivative(f));
        const egf_series ex = exp_minus_one(order) + egf_series::constant(1, order);
        const egf_series bracket =
            compose(f, sigma(2, order)) + egf_series::constant(1, order);
        // the product is exact through the full order, so truncating after
        // multiplying loses nothing
        if (lhs != truncate(ex * bracket, order - 2))
            return false;
    }

    return true;
}

} // namespace stirling
