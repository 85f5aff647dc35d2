#ifndef QSTIRLING_CLI_APP_HPP
#define QSTIRLING_CLI_APP_HPP

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qstirling/qstirling.hpp"
#include "qstirling/serialize.hpp"
#include "qstirling/verify.hpp"

namespace qstirling::cli {

// exit codes: 0 success / suite passed, 1 verification failures, 2 usage or
// domain errors
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

inline int exit_code_for(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return kVerifyFailed;
    return kOk;
}

inline std::size_t truncation_from_env() {
    const char* env = std::getenv("QSTIRLING_TRUNCATION");
    if (env == nullptr) return kDefaultTruncation;
    const long v = std::strtol(env, nullptr, 10);
    if (v < 2) throw std::invalid_argument("QSTIRLING_TRUNCATION must be an integer >= 2");
    return static_cast<std::size_t>(v);
}

namespace detail {

inline int run_table(const std::string& kind, int n, const std::optional<std::string>& q_str,
                     const std::string& format, std::ostream& out) {
    const bool csv = format == "csv";
    std::optional<Rational> q0;
    if (q_str) q0 = Rational(*q_str);
    const bool integer_kind = kind == "sf1" || kind == "sf2" || kind == "eulerian";
    if (q0 && integer_kind)
        throw std::invalid_argument("--q does not apply to integer triangle '" + kind + "'");
    if (q0 && kind == "s1" && q0->is_zero())
        throw std::invalid_argument(
            "table s1: --q must be nonzero (first-kind entries carry negative exponents)");

    if (kind == "s1" || kind == "s2") {
        const QStirlingTable t = QStirlingTable::build(
            kind == "s1" ? StirlingKind::first : StirlingKind::second, n);
        if (csv) {
            out << table_to_csv(t, q0);
        } else if (q0) {
            json doc{{"kind", kind}, {"max_n", n}, {"q", q0->to_string()},
                     {"rows", table_rows_at(t, *q0)}};
            out << doc.dump(2) << "\n";
        } else {
            out << to_json(t).dump(2) << "\n";
        }
        return kOk;
    }
    if (kind == "sf1" || kind == "sf2") {
        const FermionicTable t = FermionicTable::build(n);
        if (csv) out << fermionic_to_csv(t, kind == "sf1");
        else out << fermionic_to_json(t, kind == "sf1").dump(2) << "\n";
        return kOk;
    }
    if (kind == "bell") {
        const QBellSequence b = QBellSequence::build(build_second_table(n));
        if (csv) {
            out << bell_to_csv(b, q0);
        } else if (q0) {
            json values = json::array();
            for (const auto& v : b.values) values.push_back(v.eval(*q0).to_string());
            json doc{{"kind", "bell"}, {"max_n", n}, {"q", q0->to_string()},
                     {"values", std::move(values)}};
            out << doc.dump(2) << "\n";
        } else {
            out << to_json(b).dump(2) << "\n";
        }
        return kOk;
    }
    // eulerian
    if (csv) out << eulerian_to_csv(n);
    else out << eulerian_to_json(n).dump(2) << "\n";
    return kOk;
}

inline int run_verify(const std::string& suite, std::optional<int> n, std::ostream& out) {
    const std::size_t truncation = truncation_from_env();
    const auto pick = [&](int dflt) { return n ? *n : dflt; };
    std::vector<VerificationReport> reports;
    if (suite == "orthogonality") reports.push_back(verify_orthogonality(pick(25)));
    else if (suite == "closed-form") reports.push_back(verify_closed_form(pick(15)));
    else if (suite == "newton-gregory") reports.push_back(verify_newton_gregory(pick(15)));
    else if (suite == "connection") reports.push_back(verify_connection(pick(8)));
    else if (suite == "fermionic") reports.push_back(verify_fermionic(pick(40)));
    else if (suite == "inversion") reports.push_back(verify_inversion(pick(40)));
    else if (suite == "specialization") reports.push_back(verify_specialization(pick(30)));
    else if (suite == "gessel") reports.push_back(verify_gessel(pick(10), truncation));
    else if (suite == "eulerian-bernoulli")
        reports.push_back(verify_eulerian_bernoulli(pick(8), truncation));
    else reports = verify_all(n, truncation);

    if (suite == "all") {
        json suites = json::array();
        for (const auto& r : reports) suites.push_back(to_json(r));
        json doc{{"suites", std::move(suites)}, {"passed", exit_code_for(reports) == kOk}};
        out << doc.dump(2) << "\n";
    } else {
        out << to_json(reports.front()).dump(2) << "\n";
    }
    return exit_code_for(reports);
}

} // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-deformed Stirling tables, identity verification, and interpolation"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "Emit a triangle or sequence");
    std::string kind;
    int table_n = 0;
    std::optional<std::string> q_str;
    std::string format = "json";
    table->add_option("kind", kind, "one of s1, s2, sf1, sf2, bell, eulerian")
        ->required()
        ->check(CLI::IsMember({"s1", "s2", "sf1", "sf2", "bell", "eulerian"}));
    table->add_option("--n", table_n, "maximum row index (>= 1)")->required();
    table->add_option("--q", q_str, "evaluate entries at this rational, e.g. 1, -1, 2/3");
    table->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Run an identity verification suite");
    std::string suite;
    std::optional<int> verify_n;
    verify
        ->add_option("suite", suite,
                     "one of orthogonality, closed-form, newton-gregory, connection, "
                     "fermionic, inversion, specialization, gessel, eulerian-bernoulli, all")
        ->required()
        ->check(CLI::IsMember({"orthogonality", "closed-form", "newton-gregory", "connection",
                               "fermionic", "inversion", "specialization", "gessel",
                               "eulerian-bernoulli", "all"}));
    verify->add_option("--n", verify_n,
                       "sweep bound (default: the suite's acceptance range; for 'all', "
                       "connection is capped at 12 and Bernoulli sweeps at truncation-1)");

    // interp
    auto* interp = app.add_subcommand("interp", "Evaluate the interpolation function Y_S(z,k,q)");
    double z_re = 0.0, z_im = 0.0, interp_q = 0.0;
    int interp_k = 0;
    interp->add_option("--z", z_re, "real part of z")->required();
    interp->add_option("--zim", z_im, "imaginary part of z");
    interp->add_option("--k", interp_k, "column index k >= 1")->required();
    interp->add_option("--q", interp_q, "deformation parameter in (-1,1], nonzero")->required();

    // zeta
    auto* zeta = app.add_subcommand("zeta", "Partial sum of the first-kind Stirling zeta series");
    int zeta_k = 0;
    long long zeta_terms = 0;
    zeta->add_option("--k", zeta_k, "series order: approximates zeta(k+1)")->required();
    zeta->add_option("--terms", zeta_terms, "number of terms (>= k)")->required();

    // bernoulli
    auto* bernoulli = app.add_subcommand("bernoulli", "Higher-order Bernoulli number B_index^(order)");
    long long order = 0;
    int index = 0;
    bernoulli->add_option("--order", order, "order n (negative for the reciprocal base)")
        ->required();
    bernoulli->add_option("--index", index, "index k >= 0, below the truncation order")
        ->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);

        if (table->parsed()) {
            if (table_n < 1) throw std::invalid_argument("table: --n must be >= 1");
            return detail::run_table(kind, table_n, q_str, format, out);
        }
        if (verify->parsed()) {
            if (verify_n && *verify_n < 1)
                throw std::invalid_argument("verify: --n must be >= 1");
            return detail::run_verify(suite, verify_n, out);
        }
        if (interp->parsed()) {
            InterpResult r;
            r.z = ComplexVal(z_re, z_im);
            r.k = interp_k;
            r.q = interp_q;
            r.value = ys_eval(r.z, r.k, r.q);
            out << to_json(r).dump(2) << "\n";
            return kOk;
        }
        if (zeta->parsed()) {
            const ZetaReport r = zeta_via_stirling1(zeta_k, zeta_terms);
            out << to_json(r).dump(2) << "\n";
            return kOk;
        }
        // bernoulli
        HigherBernoulli b;
        b.order = order;
        b.index = index;
        b.value = bernoulli_higher(order, index, truncation_from_env());
        out << to_json(b).dump(2) << "\n";
        return kOk;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace qstirling::cli

#endif // QSTIRLING_CLI_APP_HPP
