#pragma once

// Dense polynomials with exact integer coefficients, indexed by exponent.
// The zero polynomial is stored as an empty coefficient list; otherwise the
// leading coefficient is nonzero.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirling/rational.hpp"

namespace stirling {

class int_polynomial {
public:
    int_polynomial() = default;

    explicit int_polynomial(std::vector<big_int> coeffs) : coeffs_(std::move(coeffs))
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    bool is_zero() const { return coeffs_.empty(); }

    unsigned degree() const
    {
        if (is_zero())
            throw std::logic_error("degree of zero polynomial");
        return static_cast<unsigned>(coeffs_.size()) - 1;
    }

    // Coefficient of x^m; zero past the degree.
    const big_int& coeff(unsigned m) const
    {
        static const big_int zero{};
        return m < coeffs_.size() ? coeffs_[m] : zero;
    }

    const std::vector<big_int>& coefficients() const { return coeffs_; }

    big_int eval(const big_int& x) const
    {
        big_int acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * x + coeffs_[i];
        return acc;
    }

    rational eval(const rational& x) const
    {
        rational acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * x + rational(coeffs_[i]);
        return acc;
    }

    friend bool operator==(const int_polynomial&, const int_polynomial&) = default;

private:
    std::vector<big_int> coeffs_;
};

} // namespace stirling
