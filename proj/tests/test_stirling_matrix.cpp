#include <catch2/catch_amalgamated.hpp>

#include <stirling/series.hpp>
#include <stirling/stirling_matrix.hpp>

#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace stirling;

TEST_CASE("second-kind triangle matches set-partition enumeration")
{
    const stirling_matrix s = stirling2_triangle(8);
    CHECK(s.power() == 1);
    CHECK(s.size() == 8);
    CHECK(s.at(4, 2) == 7);
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; m <= n; ++m)
            CHECK(s.at(n, m) == oracles::count_set_partitions(n, m));
}

TEST_CASE("second-kind triangle structure")
{
    const stirling_matrix s = stirling2_triangle(20);
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(s.at(n, n) == 1);
        if (n >= 1)
            CHECK(s.at(n, 0) == 0);
    }
    // zero above the diagonal through the accessor
    CHECK(s.at(3, 5) == 0);

    // row sums are the ordinary Bell numbers
    for (unsigned n = 1; n <= 7; ++n) {
        big_int row_sum = 0;
        for (unsigned m = 0; m <= n; ++m)
            row_sum += s.at(n, m);
        CHECK(row_sum == reference::bell_table[0][n - 1]);
    }
}

TEST_CASE("signed first-kind triangle matches cycle enumeration")
{
    const stirling_matrix s = stirling1_signed_triangle(7);
    CHECK(s.power() == -1);
    CHECK(s.at(3, 2) == -3);
    CHECK(s.at(4, 2) == 11);
    for (unsigned n = 0; n <= 7; ++n)
        for (unsigned m = 0; m <= n; ++m) {
            const big_int unsigned_count = oracles::count_permutations_with_cycles(n, m);
            const big_int expected = (n - m) % 2 == 0 ? unsigned_count : -unsigned_count;
            CHECK(s.at(n, m) == expected);
        }
}

TEST_CASE("the two triangles are mutually inverse")
{
    const unsigned n_max = 30;
    const stirling_matrix product =
        matrix_mul(stirling2_triangle(n_max), stirling1_signed_triangle(n_max));
    CHECK(product == stirling_matrix::identity(n_max));
    CHECK(product.power() == 0);
}

TEST_CASE("matrix_power basics")
{
    CHECK(matrix_power(0, 5) == stirling_matrix::identity(5));

    // column m = 1 of S^2 carries the ordinary Bell numbers
    const stirling_matrix s2 = matrix_power(2, 7);
    CHECK(s2.power() == 2);
    for (unsigned n = 1; n <= 7; ++n)
        CHECK(s2.at(n, 1) == reference::bell_table[0][n - 1]);

    // column m = 1 of S^3 carries the order-2 Bell numbers
    const stirling_matrix s3 = matrix_power(3, 7);
    for (unsigned n = 1; n <= 7; ++n)
        CHECK(s3.at(n, 1) == reference::bell_table[1][n - 1]);

    // squared triangle against the dense brute-force product
    const auto brute =
        oracles::matrix_product(oracles::stirling2_rows(10), oracles::stirling2_rows(10));
    const stirling_matrix s2_wide = matrix_power(2, 10);
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned m = 0; m <= n; ++m)
            CHECK(s2_wide.at(n, m) == brute[n][m]);

    // negative power against the brute-force inverse of the square
    const auto inv = oracles::unit_lower_inverse(brute);
    const stirling_matrix sm2 = matrix_power(-2, 10);
    CHECK(sm2.power() == -2);
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned m = 0; m <= n; ++m)
            CHECK(sm2.at(n, m) == inv[n][m]);
}

TEST_CASE("inverse law at size 30")
{
    const stirling_matrix id = stirling_matrix::identity(30);
    for (int p = 1; p <= 3; ++p)
        CHECK(matrix_mul(matrix_power(p, 30), matrix_power(-p, 30)) == id);
}

TEST_CASE("semigroup law at size 15")
{
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            CHECK(matrix_mul(matrix_power(a, 15), matrix_power(b, 15)) ==
                  matrix_power(a + b, 15));
}

TEST_CASE("matrix_mul rejects mismatched sizes")
{
    CHECK_THROWS_AS(matrix_mul(stirling2_triangle(4), stirling2_triangle(5)),
                    std::invalid_argument);
}

TEST_CASE("entry accessor")
{
    CHECK(entry(1, 4, 2) == 7);
    CHECK(entry(-1, 3, 2) == -3);
    CHECK(entry(2, 3, 1) == 5);
    CHECK(entry(0, 6, 6) == 1);
    CHECK_THROWS_WITH(entry(1, 2, 3), "above diagonal");
}

TEST_CASE("column m of S^p carries the EGF coefficients of sigma_p^m / m!")
{
    const unsigned n_max = 15;
    for (int p = -3; p <= 3; ++p) {
        const stirling_matrix s = matrix_power(p, n_max);
        const egf_series sig = sigma(p, n_max);
        egf_series pw = egf_series::constant(1, n_max);
        rational m_fact = 1;
        for (unsigned m = 0; m <= n_max; ++m) {
            if (m > 0) {
                pw = pw * sig;
                m_fact *= m;
            }
            for (unsigned n = 0; n <= n_max; ++n)
                CHECK(rational(s.at(n, m)) == pw.egf_coeff(n) / m_fact);
        }
    }
}

TEST_CASE("finite-difference route to S^p entries")
{
    CHECK(stirling_power_via_bell(1, 4, 2) == 7);
    CHECK(stirling_power_via_bell(2, 3, 1) == 5);
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(stirling_power_via_bell(3, n, n) == 1);

    for (unsigned p = 1; p <= 3; ++p) {
        const stirling_matrix s = matrix_power(static_cast<int>(p), 12);
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned m = 0; m <= n; ++m)
                CHECK(stirling_power_via_bell(p, n, m) == s.at(n, m));
    }

    CHECK_THROWS_AS(stirling_power_via_bell(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_WITH(stirling_power_via_bell(1, 2, 3), "above diagonal");
}

TEST_CASE("row access past the stored size throws")
{
    const stirling_matrix s = stirling2_triangle(4);
    CHECK_THROWS_AS(s.at(5, 0), std::out_of_range);
}
