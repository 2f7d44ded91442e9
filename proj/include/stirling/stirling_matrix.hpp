#pragma once

// Stirling triangles of both kinds and exact integer powers of the
// second-kind triangle. The matrices are unit lower-triangular, so every
// integer power (negative ones included) stays integral.

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirling/rational.hpp"

namespace stirling {

// Lower triangle of S^p entries for 0 <= m <= n <= size(), tagged with the
// power p it was built as.
class stirling_matrix {
public:
    int power() const { return power_; }
    unsigned size() const { return n_max_; }

    // Entry (n, m); zero above the diagonal.
    const big_int& at(unsigned n, unsigned m) const
    {
        if (n > n_max_)
            throw std::out_of_range("stirling_matrix: row past size");
        if (m > n)
            return zero_();
        return tri_[idx_(n, m)];
    }

    static stirling_matrix identity(unsigned n_max)
    {
        stirling_matrix r(0, n_max);
        for (unsigned n = 0; n <= n_max; ++n)
            r.cell_(n, n) = 1;
        return r;
    }

    friend bool operator==(const stirling_matrix&, const stirling_matrix&) = default;

    friend stirling_matrix stirling2_triangle(unsigned);
    friend stirling_matrix stirling1_signed_triangle(unsigned);
    friend stirling_matrix matrix_mul(const stirling_matrix&, const stirling_matrix&);

private:
    stirling_matrix(int power, unsigned n_max)
        : power_(power), n_max_(n_max), tri_(std::size_t(n_max + 1) * (n_max + 2) / 2)
    {
    }

    static const big_int& zero_()
    {
        static const big_int z{};
        return z;
    }

    std::size_t idx_(unsigned n, unsigned m) const { return std::size_t(n) * (n + 1) / 2 + m; }
    big_int& cell_(unsigned n, unsigned m) { return tri_[idx_(n, m)]; }

    int power_;
    unsigned n_max_;
    std::vector<big_int> tri_;
};

// Second kind: S(n,m) = S(n-1,m-1) + m S(n-1,m), S(0,0) = 1.
inline stirling_matrix stirling2_triangle(unsigned n_max)
{
    stirling_matrix r(1, n_max);
    r.cell_(0, 0) = 1;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned m = 1; m <= n; ++m)
            r.cell_(n, m) = r.at(n - 1, m - 1) + big_int(m) * r.at(n - 1, m);
    return r;
}

// Signed first kind: s(n,m) = s(n-1,m-1) - (n-1) s(n-1,m), s(0,0) = 1.
// This triangle is the inverse of the second-kind one.
inline stirling_matrix stirling1_signed_triangle(unsigned n_max)
{
    stirling_matrix r(-1, n_max);
    r.cell_(0, 0) = 1;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned m = 1; m <= n; ++m)
            r.cell_(n, m) = r.at(n - 1, m - 1) - big_int(n - 1) * r.at(n - 1, m);
    return r;
}

inline stirling_matrix matrix_mul(const stirling_matrix& a, const stirling_matrix& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("matrix_mul: size mismatch");
    stirling_matrix r(a.power() + b.power(), a.size());
    for (unsigned n = 0; n <= a.size(); ++n)
        for (unsigned m = 0; m <= n; ++m) {
            big_int acc = 0;
            for (unsigned k = m; k <= n; ++k)
                acc += a.at(n, k) * b.at(k, m);
            r.cell_(n, m) = std::move(acc);
        }
    return r;
}

// S^p for any integer p; p < 0 is the |p|-th power of the signed first-kind
// triangle, p = 0 the identity.
inline stirling_matrix matrix_power(int p, unsigned n_max)
{
    if (p == 0)
        return stirling_matrix::identity(n_max);
    const stirling_matrix base = p > 0 ? stirling2_triangle(n_max) : stirling1_signed_triangle(n_max);
    stirling_matrix r = base;
    for (long i = 1, reps = std::abs(static_cast<long>(p)); i < reps; ++i)
        r = matrix_mul(r, base);
    return r;
}

inline big_int entry(int p, unsigned n, unsigned m)
{
    if (m > n)
        throw std::invalid_argument("above diagonal");
    return matrix_power(p, n).at(n, m);
}

// S^p(n,m) = (1/m!) sum_{k=0..m} C(m,k) (-1)^{m-k} B(k), where B is the row
// polynomial of S^{p-1} at row n. The m! division is exact; a remainder means
// the construction is broken, hence the hard error.
inline big_int stirling_power_via_bell(unsigned p, unsigned n, unsigned m)
{
    if (p < 1)
        throw std::invalid_argument("stirling_power_via_bell requires p >= 1");
    if (m > n)
        throw std::invalid_argument("above diagonal");
    const stirling_matrix s = matrix_power(static_cast<int>(p) - 1, n);
    big_int sum = 0;
    for (unsigned k = 0; k <= m; ++k) {
        big_int row_value = 0;
        big_int kp = 1;
        for (unsigned j = 0; j <= n; ++j) {
            row_value += s.at(n, j) * kp;
            kp *= k;
        }
        const big_int term = binomial(m, k) * row_value;
        sum += (m - k) % 2 == 0 ? term : -term;
    }
    const big_int m_fact = factorial(m);
    if (sum % m_fact != 0)
        throw std::logic_error("divisibility violated");
    return sum / m_fact;
}

} // namespace stirling
