// Prints the first few rows of the higher-order Bell number family as a
// markdown table, one row per composition order.

#include <iostream>

#include <stirling/stirling.hpp>

int main()
{
    stirling::table_request req;
    req.family = "bell";
    req.p = 5;
    req.n_max = 7;
    std::cout << stirling::render(stirling::build_table(req),
                                  stirling::output_format::markdown);
    return 0;
}
