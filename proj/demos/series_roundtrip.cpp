// Composes the order-3 iterated exponential with its order -3 inverse and
// prints the coefficients, which collapse back to the identity series.

#include <iostream>

#include <stirling/stirling.hpp>

int main()
{
    const unsigned order = 10;
    const stirling::egf_series f = stirling::sigma(3, order);
    const stirling::egf_series g = stirling::sigma(-3, order);
    const stirling::egf_series round_trip = stirling::compose(f, g);

    std::cout << "EGF coefficients of the order-3 map composed with its inverse:\n";
    for (unsigned n = 0; n <= order; ++n)
        std::cout << "  n = " << n << ": "
                  << stirling::to_string(round_trip.egf_coeff(n)) << "\n";

    std::cout << "identity series: "
              << (round_trip == stirling::egf_series::identity(order) ? "yes" : "no")
              << "\n";
    return 0;
}
