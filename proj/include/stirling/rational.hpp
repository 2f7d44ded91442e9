#pragma once

// Exact integer and rational scalars plus the small combinatorial helpers
// used throughout the library. Rationals are always stored reduced with a
// positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirling {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

using big_int_sequence = std::vector<big_int>;

inline big_int factorial(unsigned n)
{
    big_int f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// C(n, k); zero for k > n. Division is exact at every step of the product.
inline big_int binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    big_int c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

inline big_int int_pow(big_int base, unsigned long long e)
{
    big_int r = 1;
    for (; e != 0; e >>= 1) {
        if (e & 1)
            r *= base;
        base *= base;
    }
    return r;
}

inline rational rational_pow(const rational& base, long long e)
{
    if (e == 0)
        return rational(1);
    const bool invert = e < 0;
    const unsigned long long k =
        invert ? 0ULL - static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
    if (invert && base == 0)
        throw std::domain_error("rational_pow: zero base with negative exponent");
    rational r(int_pow(numerator(base), k), int_pow(denominator(base), k));
    if (invert)
        r = rational(1) / r;
    return r;
}

inline bool is_integer(const rational& r)
{
    return denominator(r) == 1;
}

// "num" when integral, "num/den" otherwise; both forms parse back exactly.
inline std::string to_string(const rational& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

// Accepts an optionally signed decimal numerator with an optional unsigned
// "/den" suffix. The result is normalized on construction.
inline rational parse_rational(const std::string& text)
{
    const auto fail = [&]() -> rational {
        throw std::invalid_argument("expected NUM or NUM/DEN, got '" + text + "'");
    };

    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        ++i;
    if (i == num_begin)
        return fail();
    big_int num(text.substr(num_begin, i - num_begin));
    if (negative)
        num = -num;

    if (i == text.size())
        return rational(num);

    if (text[i] != '/')
        return fail();
    const std::size_t den_begin = ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        ++i;
    if (i == den_begin || i != text.size())
        return fail();
    const big_int den(text.substr(den_begin));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return rational(num, den);
}

} // namespace stirling
