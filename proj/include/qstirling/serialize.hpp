#ifndef QSTIRLING_SERIALIZE_HPP
#define QSTIRLING_SERIALIZE_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstirling/analytic.hpp"
#include "qstirling/fermionic.hpp"
#include "qstirling/laurent.hpp"
#include "qstirling/report.hpp"
#include "qstirling/stirling_q.hpp"

/*
 * Wire formats.
 *
 * Rational        "num/den", plain "num" when the denominator is 1
 * LaurentPoly     [[exponent, "num/den"], ...] sorted ascending by exponent
 * q-tables        {"kind": "s1"|"s2", "max_n": N, "rows": [[poly, ...], ...]}
 * fermionic       {"kind": "sf1"|"sf2", "max_n": N, "rows": [[int, ...], ...]}
 * bell            {"kind": "bell", "max_n": N, "values": [poly, ...]}
 * eulerian        {"kind": "eulerian", "max_n": N, "rows": [[string, ...], ...]}
 * CSV             one (n,k,value) line per entry; polynomials stringified
 */

namespace qstirling {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& t : p.terms()) arr.push_back(json::array({t.exp, t.coef.to_string()}));
    return arr;
}

inline LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& term : j) {
        int exp = term.at(0).get<int>();
        Rational coef(term.at(1).get<std::string>());
        p += LaurentPoly::monomial(exp, coef);
    }
    return p;
}

inline json to_json(const QStirlingTable& t) {
    json rows = json::array();
    for (int n = 0; n <= t.max_n(); ++n) {
        json row = json::array();
        for (int k = 0; k <= n; ++k) row.push_back(to_json(t.at(n, k)));
        rows.push_back(std::move(row));
    }
    return json{{"kind", to_string(t.kind())}, {"max_n", t.max_n()}, {"rows", std::move(rows)}};
}

inline QStirlingTable qstirling_table_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "s1" && kind != "s2")
        throw std::invalid_argument("table: unknown kind '" + kind + "'");
    const int max_n = j.at("max_n").get<int>();
    const auto& rows_json = j.at("rows");
    if (static_cast<int>(rows_json.size()) != max_n + 1)
        throw std::invalid_argument("table: rows/max_n mismatch");
    std::vector<std::vector<LaurentPoly>> rows;
    rows.reserve(rows_json.size());
    for (const auto& row_json : rows_json) {
        std::vector<LaurentPoly> row;
        row.reserve(row_json.size());
        for (const auto& cell : row_json) row.push_back(laurent_from_json(cell));
        rows.push_back(std::move(row));
    }
    return QStirlingTable::from_rows(kind == "s1" ? StirlingKind::first : StirlingKind::second,
                                     std::move(rows));
}

inline std::vector<std::vector<long long>> fermionic_rows_from_json(const json& j) {
    std::vector<std::vector<long long>> rows;
    for (const auto& row_json : j.at("rows")) {
        std::vector<long long> row;
        for (const auto& cell : row_json) row.push_back(cell.get<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<LaurentPoly> bell_values_from_json(const json& j) {
    std::vector<LaurentPoly> values;
    for (const auto& cell : j.at("values")) values.push_back(laurent_from_json(cell));
    return values;
}

// rows evaluated at a rational point, entries as "num/den" strings
inline json table_rows_at(const QStirlingTable& t, const Rational& q0) {
    json rows = json::array();
    for (int n = 0; n <= t.max_n(); ++n) {
        json row = json::array();
        for (int k = 0; k <= n; ++k) row.push_back(t.at(n, k).eval(q0).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json fermionic_to_json(const FermionicTable& t, bool first_kind) {
    json rows = json::array();
    for (int n = 0; n <= t.max_n; ++n) {
        json row = json::array();
        for (int k = 0; k <= n; ++k) row.push_back(first_kind ? t.sf(n, k) : t.Sf(n, k));
        rows.push_back(std::move(row));
    }
    return json{{"kind", first_kind ? "sf1" : "sf2"}, {"max_n", t.max_n},
                {"rows", std::move(rows)}};
}

inline json to_json(const QBellSequence& b) {
    json values = json::array();
    for (const auto& v : b.values) values.push_back(to_json(v));
    return json{{"kind", "bell"}, {"max_n", b.max_n}, {"values", std::move(values)}};
}

inline json eulerian_to_json(int max_n) {
    json rows = json::array();
    for (int n = 1; n <= max_n; ++n) {
        json row = json::array();
        for (int k = 0; k <= n - 1; ++k) row.push_back(eulerian(n, k).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"kind", "eulerian"}, {"max_n", max_n}, {"rows", std::move(rows)}};
}

inline json to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(
            json{{"location", f.location}, {"expected", f.expected}, {"actual", f.actual}});
    json range = json::object();
    for (const auto& [key, value] : r.range) range[key] = value;
    json out{{"suite", r.suite},
             {"range", std::move(range)},
             {"checks_run", r.checks_run},
             {"failures", std::move(failures)},
             {"passed", r.passed()}};
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

inline json to_json(const ZetaReport& r) {
    json out{{"k", r.k}, {"terms_used", r.terms_used}, {"partial_sum", r.partial_sum}};
    out["reference"] = r.reference ? json(*r.reference) : json(nullptr);
    out["abs_error"] = r.abs_error ? json(*r.abs_error) : json(nullptr);
    return out;
}

inline json to_json(const InterpResult& r) {
    return json{{"z", {{"re", r.z.real()}, {"im", r.z.imag()}}},
                {"k", r.k},
                {"q", r.q},
                {"value", {{"re", r.value.real()}, {"im", r.value.imag()}}}};
}

inline json to_json(const HigherBernoulli& b) {
    return json{{"order", b.order}, {"index", b.index}, {"value", b.value.to_string()}};
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline std::string table_to_csv(const QStirlingTable& t,
                                const std::optional<Rational>& q0 = std::nullopt) {
    std::ostringstream os;
    os << "n,k,value\n";
    for (int n = 0; n <= t.max_n(); ++n)
        for (int k = 0; k <= n; ++k) {
            os << n << ',' << k << ',';
            if (q0) os << t.at(n, k).eval(*q0).to_string();
            else os << t.at(n, k).to_string();
            os << '\n';
        }
    return os.str();
}

inline std::string fermionic_to_csv(const FermionicTable& t, bool first_kind) {
    std::ostringstream os;
    os << "n,k,value\n";
    for (int n = 0; n <= t.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            os << n << ',' << k << ',' << (first_kind ? t.sf(n, k) : t.Sf(n, k)) << '\n';
    return os.str();
}

inline std::string bell_to_csv(const QBellSequence& b,
                               const std::optional<Rational>& q0 = std::nullopt) {
    std::ostringstream os;
    os << "n,value\n";
    for (int n = 0; n <= b.max_n; ++n) {
        os << n << ',';
        if (q0) os << b.values[static_cast<std::size_t>(n)].eval(*q0).to_string();
        else os << b.values[static_cast<std::size_t>(n)].to_string();
        os << '\n';
    }
    return os.str();
}

inline std::string eulerian_to_csv(int max_n) {
    std::ostringstream os;
    os << "n,k,value\n";
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k <= n - 1; ++k)
            os << n << ',' << k << ',' << eulerian(n, k).to_string() << '\n';
    return os.str();
}

} // namespace qstirling

#endif // QSTIRLING_SERIALIZE_HPP
