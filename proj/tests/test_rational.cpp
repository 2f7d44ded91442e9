#include <catch2/catch_amalgamated.hpp>

#include <stirling/rational.hpp>

using namespace stirling;

TEST_CASE("factorial small values")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == big_int("2432902008176640000"));
    CHECK(factorial(25) == big_int("15511210043330985984000000"));
}

TEST_CASE("binomial values and Pascal rule")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(52, 5) == 2598960);
    for (unsigned n = 1; n <= 25; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("rational normalization invariants")
{
    const rational r(big_int(-4), big_int(6));
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);

    const rational sum = rational(1, 6) + rational(1, 3);
    CHECK(numerator(sum) == 1);
    CHECK(denominator(sum) == 2);

    CHECK(is_integer(rational(8, 4)));
    CHECK_FALSE(is_integer(rational(8, 3)));
}

TEST_CASE("rational_pow")
{
    CHECK(rational_pow(rational(2, 3), 0) == rational(1));
    CHECK(rational_pow(rational(2, 3), 3) == rational(8, 27));
    CHECK(rational_pow(rational(2, 3), -2) == rational(9, 4));
    CHECK(rational_pow(rational(-1, 2), 3) == rational(-1, 8));
    CHECK(rational_pow(rational(0), 5) == rational(0));
    CHECK(rational_pow(rational(0), 0) == rational(1));
    CHECK_THROWS_AS(rational_pow(rational(0), -1), std::domain_error);
}

TEST_CASE("to_string and parse_rational round-trip")
{
    CHECK(to_string(rational(7)) == "7");
    CHECK(to_string(rational(-3, 4)) == "-3/4");
    CHECK(to_string(rational(4, 2)) == "2");

    CHECK(parse_rational("123") == rational(123));
    CHECK(parse_rational("-7") == rational(-7));
    CHECK(parse_rational("+7") == rational(7));
    CHECK(parse_rational("3/4") == rational(3, 4));
    CHECK(parse_rational("-6/8") == rational(-3, 4));

    const rational vals[] = {rational(0), rational(1), rational(-5, 7), rational(22, 3),
                             rational(big_int("123456789123456789"), big_int(97))};
    for (const rational& v : vals)
        CHECK(parse_rational(to_string(v)) == v);
}

TEST_CASE("parse_rational rejects malformed input")
{
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1 / 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
}
