#pragma once

// Table assembly and csv/json/markdown rendering for the command-line tool.
// Every cell is rendered as an exact decimal string ("num/den" when the value
// is not integral), so emitted tables parse back losslessly.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stirling/bell.hpp"
#include "stirling/eulerian.hpp"
#include "stirling/fubini.hpp"
#include "stirling/rational.hpp"
#include "stirling/series.hpp"
#include "stirling/stirling_matrix.hpp"
#include "stirling/transform.hpp"

namespace stirling {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class output_format { csv, json, markdown };

inline output_format parse_format(const std::string& name)
{
    if (name == "csv")
        return output_format::csv;
    if (name == "json")
        return output_format::json;
    if (name == "markdown")
        return output_format::markdown;
    throw usage_error("unknown format '" + name + "' (expected csv, json or markdown)");
}

struct table_request {
    std::string family; // stirling | bell | fubini | eulerian | eigenseq
    int p = 1;
    unsigned n_max = 7;
    std::optional<rational> x; // evaluation point, bell and fubini only
};

// Request bounds; --seed-cap raises both.
struct table_caps {
    unsigned n_cap = 200;
    unsigned p_cap = 16;
};

struct rendered_table {
    std::string family;
    int p = 0;
    std::string corner;                  // markdown corner label
    std::vector<std::string> col_labels; // markdown header
    std::vector<std::string> row_labels; // markdown stubs
    std::vector<std::vector<std::string>> rows;
};

inline rendered_table build_table(const table_request& req, const table_caps& caps = {})
{
    if (req.n_max > caps.n_cap)
        throw usage_error("n-max " + std::to_string(req.n_max) + " exceeds cap " +
                          std::to_string(caps.n_cap));
    if (req.p > static_cast<int>(caps.p_cap) || req.p < -static_cast<int>(caps.p_cap))
        throw usage_error("|p| = " + std::to_string(std::abs(req.p)) + " exceeds cap " +
                          std::to_string(caps.p_cap));

    rendered_table t;
    t.family = req.family;
    t.p = req.p;

    const bool polynomial_family = req.family == "bell" || req.family == "fubini";
    if (req.x && !polynomial_family)
        throw usage_error("--x applies only to bell and fubini tables");

    if (req.family == "stirling" || req.family == "eulerian") {
        // full rectangle with explicit zeros above the diagonal
        t.corner = req.family + " p=" + std::to_string(req.p);
        for (unsigned m = 0; m <= req.n_max; ++m)
            t.col_labels.push_back("m=" + std::to_string(m));
        if (req.family == "stirling") {
            const stirling_matrix s = matrix_power(req.p, req.n_max);
            for (unsigned n = 0; n <= req.n_max; ++n) {
                t.row_labels.push_back("n=" + std::to_string(n));
                std::vector<std::string> row;
                for (unsigned m = 0; m <= req.n_max; ++m)
                    row.push_back(s.at(n, m).str());
                t.rows.push_back(std::move(row));
            }
        } else {
            if (req.p < 1)
                throw usage_error("eulerian table defined for p >= 1");
            const eulerian_matrix a(static_cast<unsigned>(req.p), req.n_max);
            for (unsigned n = 0; n <= req.n_max; ++n) {
                t.row_labels.push_back("n=" + std::to_string(n));
                std::vector<std::string> row;
                for (unsigned m = 0; m <= req.n_max; ++m)
                    row.push_back(a.at(n, m).str());
                t.rows.push_back(std::move(row));
            }
        }
        return t;
    }

    if (polynomial_family) {
        if (req.family == "bell" && req.p < 0)
            throw usage_error("bell table defined for p >= 0");
        if (req.family == "fubini" && req.p < 1)
            throw usage_error("fubini table defined for p >= 1");
        t.corner = req.family;
        if (req.x)
            t.corner += " x=" + to_string(*req.x);
        for (unsigned n = 1; n <= req.n_max; ++n)
            t.col_labels.push_back("n=" + std::to_string(n));
        // rows follow the printed-table convention: one row per order
        // 1..p (order 0 only when p = 0 was asked for explicitly)
        std::vector<unsigned> orders;
        if (req.p == 0)
            orders.push_back(0);
        else
            for (int q = 1; q <= req.p; ++q)
                orders.push_back(static_cast<unsigned>(q));
        for (const unsigned q : orders) {
            t.row_labels.push_back("p=" + std::to_string(q));
            std::vector<std::string> row;
            for (unsigned n = 1; n <= req.n_max; ++n) {
                rational v;
                if (req.family == "bell")
                    v = req.x ? bell_eval(q, n, *req.x) : rational(bell_number(q, n));
                else
                    v = req.x ? fubini_polynomial(q, n).eval(*req.x)
                              : rational(fubini_number(q, n));
                row.push_back(to_string(v));
            }
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    if (req.family == "eigenseq") {
        t.corner = "eigenseq";
        for (unsigned n = 0; n <= req.n_max; ++n)
            t.col_labels.push_back("n=" + std::to_string(n));
        t.row_labels.push_back("C");
        const big_int_sequence c = eigensequence(req.n_max);
        std::vector<std::string> row;
        for (const big_int& v : c)
            row.push_back(v.str());
        t.rows.push_back(std::move(row));
        return t;
    }

    throw usage_error("unknown family '" + req.family +
                      "' (expected stirling, bell, fubini, eulerian or eigenseq)");
}

inline std::string render(const rendered_table& t, output_format fmt)
{
    if (fmt == output_format::csv) {
        std::string out;
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i > 0)
                    out += ',';
                out += row[i];
            }
            out += '\n';
        }
        return out;
    }

    if (fmt == output_format::json) {
        nlohmann::json j;
        j["family"] = t.family;
        j["p"] = t.p;
        j["rows"] = t.rows;
        return j.dump(2) + "\n";
    }

    std::string out = "| " + t.corner + " |";
    for (const auto& c : t.col_labels)
        out += " " + c + " |";
    out += "\n|";
    for (std::size_t i = 0; i <= t.col_labels.size(); ++i)
        out += " --- |";
    out += "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += "| " + t.row_labels[r] + " |";
        for (const auto& cell : t.rows[r])
            out += " " + cell + " |";
        out += "\n";
    }
    return out;
}

// Series values serialize as arrays of exact rational strings.
inline nlohmann::json series_to_json(const egf_series& f)
{
    nlohmann::json j = nlohmann::json::array();
    for (unsigned n = 0; n <= f.order(); ++n)
        j.push_back(to_string(f.coeff(n)));
    return j;
}

inline egf_series series_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("series_from_json: expected a nonempty array");
    std::vector<rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j)
        coeffs.push_back(parse_rational(item.get<std::string>()));
    const unsigned order = static_cast<unsigned>(coeffs.size()) - 1;
    return egf_series(order, std::move(coeffs));
}

} // namespace stirling
