#pragma once

// One-shot verification suite: every identity the library implements, run at
// caller-chosen sizes, reported as named PASS/FAIL results. Output order is
// deterministic (sorted by check name). Degenerate sizes pass trivially.

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "stirling/bell.hpp"
#include "stirling/eulerian.hpp"
#include "stirling/fubini.hpp"
#include "stirling/series.hpp"
#include "stirling/stirling_matrix.hpp"
#include "stirling/transform.hpp"

namespace stirling {

struct check_result {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline double rel_gap(double approx, double exact)
{
    return std::fabs(approx - exact) / std::max(1.0, std::fabs(exact));
}

} // namespace detail

inline std::vector<check_result> run_verification(unsigned max_n, unsigned max_p,
                                                  double tol = 1e-10)
{
    std::vector<check_result> out;
    const auto add = [&out](std::string name, bool pass, std::string detail) {
        out.push_back({std::move(name), pass, std::move(detail)});
    };
    const int ip = static_cast<int>(max_p);

    {
        bool ok = true;
        const stirling_matrix id = stirling_matrix::identity(max_n);
        for (unsigned p = 1; p <= max_p && ok; ++p)
            ok = matrix_mul(matrix_power(static_cast<int>(p), max_n),
                            matrix_power(-static_cast<int>(p), max_n)) == id;
        add("matrix-inverse-law", ok,
            "S^p S^-p = I for p=1.." + std::to_string(max_p) + ", n_max=" + std::to_string(max_n));
    }

    {
        bool ok = true;
        const int bound = std::min(2, ip);
        for (int a = -bound; a <= bound && ok; ++a)
            for (int b = -bound; b <= bound && ok; ++b)
                ok = matrix_mul(matrix_power(a, max_n), matrix_power(b, max_n)) ==
                     matrix_power(a + b, max_n);
        add("matrix-semigroup-law", ok,
            "S^a S^b = S^(a+b) for |a|,|b|<=" + std::to_string(bound) +
                ", n_max=" + std::to_string(max_n));
    }

    {
        // column m of S^p carries the EGF coefficients of sigma_p^m / m!
        bool ok = true;
        for (int p = -ip; p <= ip && ok; ++p) {
            const stirling_matrix s = matrix_power(p, max_n);
            const egf_series sig = sigma(p, max_n);
            egf_series pw = egf_series::constant(1, max_n);
            rational m_fact = 1;
            for (unsigned m = 0; m <= max_n && ok; ++m) {
                if (m > 0) {
                    pw = pw * sig;
                    m_fact *= m;
                }
                for (unsigned n = 0; n <= max_n && ok; ++n)
                    ok = rational(s.at(n, m)) == pw.egf_coeff(n) / m_fact;
            }
        }
        add("stirling-column-egf", ok,
            "EGF coefficients of sigma_p^m/m! match column m, |p|<=" + std::to_string(max_p) +
                ", n_max=" + std::to_string(max_n));
    }

    {
        bool ok = true;
        for (unsigned p = 1; p <= max_p && ok; ++p)
            for (unsigned n = 0; n <= max_n && ok; ++n)
                for (unsigned m = 0; m <= n && ok; ++m)
                    ok = stirling_power_via_bell(p, n, m) ==
                         matrix_power(static_cast<int>(p), n).at(n, m);
        add("stirling-explicit-formula", ok,
            "finite-difference formula matches matrix entries, p<=" + std::to_string(max_p) +
                ", n<=" + std::to_string(max_n));
    }

    {
        bool ok = true;
        double worst = 0.0;
        const unsigned n_hi = std::min(max_n, 8u);
        for (unsigned p = 1; p <= max_p && ok; ++p)
            for (unsigned n = 0; n <= n_hi && ok; ++n) {
                const double exact = bell_number(p, n).convert_to<double>();
                const double gap = detail::rel_gap(dobinski_sum(p, n, 1.0, tol).value, exact);
                worst = std::max(worst, gap);
                ok = gap <= 1e-6;
            }
        std::ostringstream d;
        d << "x=1, p<=" << max_p << ", n<=" << n_hi << ", worst rel gap " << worst;
        add("bell-dobinski-sum", ok, d.str());
    }

    {
        bool ok = true;
        double worst = 0.0;
        const unsigned p_hi = std::min(max_p, 2u);
        const unsigned n_hi = std::min(max_n, 7u);
        for (unsigned p = 0; p <= p_hi && ok; ++p)
            for (unsigned n = 1; n <= n_hi && ok; ++n) {
                const double exact = bell_number(p, n).convert_to<double>();
                const double gap = std::fabs(cesaro_integral(p, n, 1.0, 512).value - exact);
                worst = std::max(worst, gap);
                ok = gap < 0.5;
            }
        std::ostringstream d;
        d << "512 points, x=1, p<=" << p_hi << ", n in 1.." << n_hi << ", worst abs gap "
          << worst;
        add("bell-cesaro-integral", ok, d.str());
    }

    {
        bool ok = true;
        double worst = 0.0;
        const unsigned n_hi = std::min(max_n, 8u);
        for (unsigned p = 1; p <= max_p && ok; ++p)
            for (unsigned n = 0; n <= n_hi && ok; ++n) {
                const double exact = fubini_number(p, n).convert_to<double>();
                const double gap = detail::rel_gap(fubini_geometric_sum(p, n, tol).value, exact);
                worst = std::max(worst, gap);
                ok = gap <= 1e-6;
            }
        std::ostringstream d;
        d << "p<=" << max_p << ", n<=" << n_hi << ", worst rel gap " << worst;
        add("fubini-half-weighted-sum", ok, d.str());
    }

    {
        // The half-weighted sum built without the order shift reproduces the
        // next order up, so it must deviate; this check documents that.
        if (max_p < 2 || max_n < 2) {
            add("fubini-half-weighted-sum-unshifted-diagnostic", true,
                "skipped (needs max_p >= 2 and max_n >= 2)");
        } else {
            double best_shifted = 0.0;
            double max_unshifted = 0.0;
            unsigned at_p = 0, at_n = 0;
            const unsigned n_hi = std::min(max_n, 8u);
            for (unsigned p = 2; p <= max_p; ++p)
                for (unsigned n = 2; n <= n_hi; ++n) {
                    const double exact = fubini_number(p, n).convert_to<double>();
                    best_shifted = std::max(
                        best_shifted,
                        detail::rel_gap(fubini_geometric_sum(p, n, tol).value, exact));
                    const double gap = detail::rel_gap(
                        fubini_geometric_sum_unshifted(p, n, tol).value, exact);
                    if (gap > max_unshifted) {
                        max_unshifted = gap;
                        at_p = p;
                        at_n = n;
                    }
                }
            std::ostringstream d;
            d << "shifted form worst rel residual " << best_shifted
              << "; unshifted form rel residual " << max_unshifted << " at p=" << at_p
              << ", n=" << at_n << " (reproduces the next order up)";
            add("fubini-half-weighted-sum-unshifted-diagnostic", max_unshifted > 1e-3, d.str());
        }
    }

    {
        bool ok = true;
        const unsigned order = std::min(max_n, 10u);
        const rational points[] = {rational(1), rational(2), rational(-1), rational(1, 2)};
        for (unsigned p = 1; p <= max_p && ok; ++p)
            for (const rational& x : points) {
                ok = fubini_egf_check(p, x, order);
                if (!ok)
                    break;
            }
        add("fubini-egf", ok,
            "1/(1 - x sigma_p) at x in {1, 2, -1, 1/2}, order " + std::to_string(order) +
                ", p<=" + std::to_string(max_p));
    }

    {
        bool ok = true;
        const unsigned n_hi = std::min(max_n, 12u);
        for (unsigned p = 1; p <= max_p && ok; ++p)
            ok = check_stirling_recovery(p, n_hi);
        add("eulerian-stirling-recovery", ok,
            "m! S^p(n,m) recovered from the triangle, p<=" + std::to_string(max_p) +
                ", n<=" + std::to_string(n_hi));
    }

    {
        bool expansion_ok = true, substitution_ok = true;
        const unsigned n_hi = std::min(max_n, 12u);
        const rational points[] = {rational(1), rational(2), rational(-2), rational(1, 2)};
        for (unsigned p = 1; p <= max_p; ++p)
            for (const rational& x : points) {
                expansion_ok = expansion_ok && check_fubini_expansion(p, x, n_hi);
                substitution_ok = substitution_ok && check_fubini_substitution(p, x, n_hi);
            }
        const std::string where =
            "x in {1, 2, -2, 1/2}, p<=" + std::to_string(max_p) + ", n<=" + std::to_string(n_hi);
        add("eulerian-fubini-expansion", expansion_ok, where);
        add("eulerian-fubini-substitution", substitution_ok, where);
    }

    {
        bool ok = true;
        const unsigned n_hi = std::min(max_n, 10u);
        const rational points[] = {rational(1), rational(2), rational(-2), rational(1, 2)};
        for (unsigned p = 1; p <= max_p && ok; ++p)
            for (const rational& x : points) {
                ok = check_defining_basis(p, x, n_hi);
                if (!ok)
                    break;
            }
        add("eulerian-defining-basis", ok,
            "4 rational points, p<=" + std::to_string(max_p) + ", n<=" + std::to_string(n_hi));
    }

    {
        bool ok = true;
        const unsigned order = std::min(max_n, 6u);
        const rational points[] = {rational(2), rational(3)};
        for (unsigned p = 1; p <= max_p && ok; ++p)
            for (const rational& x : points) {
                ok = eulerian_egf_check(p, x, order);
                if (!ok)
                    break;
            }
        add("eulerian-egf", ok,
            "(x-1)/(x - exp(sigma_{p-1}((x-1)t))) at x in {2, 3}, order " +
                std::to_string(order) + ", p<=" + std::to_string(max_p));
    }

    add("eigenseq-binomial-identity", check_binomial_identity(max_n),
        "n_max=" + std::to_string(max_n));
    add("eigenseq-shifted-recurrence", check_shifted_recurrence(max_n),
        "n_max=" + std::to_string(max_n));
    add("eigenseq-egf-ode", check_egf_ode(max_n),
        "both derivative forms, order " + std::to_string(max_n));

    std::sort(out.begin(), out.end(),
              [](const check_result& a, const check_result& b) { return a.name < b.name; });
    return out;
}

// Prints one line per result plus a summary; returns the process exit code.
inline int emit_report(const std::vector<check_result>& results, std::ostream& os)
{
    bool all = true;
    for (const check_result& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty())
            os << "  (" << r.detail << ")";
        os << "\n";
        all = all && r.pass;
    }
    os << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? 0 : 1;
}

} // namespace stirling
