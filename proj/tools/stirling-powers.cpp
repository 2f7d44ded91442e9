// Command-line front end: exact tables of Stirling-matrix powers and the
// derived Bell / Fubini / Eulerian families, plus a self-verification mode
// that runs every identity check the library implements.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <stirling/stirling.hpp>

int main(int argc, char** argv)
{
    CLI::App app{"Exact powers of Stirling matrices and the derived number families"};
    app.require_subcommand(1);

    stirling::table_request req;
    std::string x_text;
    std::string format = "json";
    unsigned seed_cap = 0;

    CLI::App* table = app.add_subcommand("table", "print a number-family table");
    table->add_option("--family", req.family,
                      "stirling | bell | fubini | eulerian | eigenseq")
        ->required();
    table->add_option("-p,--p", req.p, "matrix power / family order (default 1)");
    table->add_option("--n-max", req.n_max, "largest index n (default 7)");
    table->add_option("--x", x_text, "evaluation point NUM or NUM/DEN (bell and fubini only)");
    table->add_option("--format", format, "csv | json | markdown (default json)");
    table->add_option("--seed-cap", seed_cap, "raise the built-in n-max/|p| request caps");

    unsigned max_n = 10;
    unsigned max_p = 3;
    double tol = 1e-10;
    CLI::App* verify = app.add_subcommand("verify", "run every identity check");
    verify->add_option("--max-n", max_n, "largest n / series order (default 10)");
    verify->add_option("--max-p", max_p, "largest power (default 3)");
    verify->add_option("--tol", tol, "summation tolerance for the numeric checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) {
            if (!x_text.empty())
                req.x = stirling::parse_rational(x_text);
            stirling::table_caps caps;
            if (seed_cap > 0)
                caps.n_cap = caps.p_cap = seed_cap;
            const stirling::rendered_table t = stirling::build_table(req, caps);
            std::cout << stirling::render(t, stirling::parse_format(format));
            return 0;
        }
        return stirling::emit_report(stirling::run_verification(max_n, max_p, tol), std::cout);
    } catch (const stirling::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
