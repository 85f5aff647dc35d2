#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qstirling/analytic.hpp"
#include "qstirling/stirling_q.hpp"
#include "qstirling/verify.hpp"

using namespace qstirling;

namespace {

// independent oracle: B(n+1) = sum_k C(n,k) B(k)
std::vector<BigInt> classical_bell(int N) {
    std::vector<BigInt> bell(static_cast<std::size_t>(N) + 1);
    bell[0] = BigInt(1);
    for (int n = 0; n < N; ++n) {
        BigInt next(0);
        for (int k = 0; k <= n; ++k) next += binomial(n, k) * bell[static_cast<std::size_t>(k)];
        bell[static_cast<std::size_t>(n) + 1] = next;
    }
    return bell;
}

} // namespace

TEST_CASE("second-kind table values") {
    const QStirlingTable t = build_second_table(10);
    CHECK(t.at(0, 0) == LaurentPoly::one());
    CHECK(t.at(3, 2) == LaurentPoly({{1, 2}, {2, 1}}));
    CHECK(t.at(4, 4) == LaurentPoly::monomial(6));
    for (int n = 1; n <= 10; ++n) {
        CHECK(t.at(n, 0) == LaurentPoly());
        CHECK(t.at(n, 1) == LaurentPoly::one());
    }
    CHECK(t.at(5, 7) == LaurentPoly());
    CHECK_THROWS_AS(t.at(11, 0), IndexOutOfTriangle);
    CHECK_THROWS_AS(build_second_table(0), std::invalid_argument);
}

TEST_CASE("second-kind entries are ordinary polynomials") {
    const QStirlingTable t = build_second_table(15);
    for (int n = 1; n <= 15; ++n)
        for (int k = 1; k <= n; ++k)
            if (!t.at(n, k).is_zero()) CHECK(t.at(n, k).min_exp() >= 0);
}

TEST_CASE("first-kind table values") {
    const QStirlingTable t = build_first_table(10);
    CHECK(t.at(1, 1) == LaurentPoly::one());
    CHECK(t.at(2, 1) == LaurentPoly::monomial(-1, Rational(-1)));
    CHECK(t.at(3, 2) == LaurentPoly({{-3, -2}, {-2, -1}}));
    CHECK(t.at(3, 1) == LaurentPoly({{-3, 1}, {-2, 1}}));
    // classical values at q = 1
    CHECK(t.at(3, 1).eval(Rational(1)) == Rational(2));
    CHECK(t.at(3, 2).eval(Rational(1)) == Rational(-3));
    CHECK(t.at(3, 3).eval(Rational(1)) == Rational(1));
}

TEST_CASE("first-kind minimal exponent bound and diagonal") {
    const QStirlingTable t = build_first_table(20);
    for (int n = 1; n <= 20; ++n) {
        for (int k = 1; k <= n; ++k)
            if (!t.at(n, k).is_zero()) CHECK(t.at(n, k).min_exp() >= -n * (n - 1) / 2);
        CHECK(t.at(n, n) == LaurentPoly::monomial(-n * (n - 1) / 2));
    }
}

TEST_CASE("bosonic limit reproduces the classical triangles") {
    const int N = 20;
    const QStirlingTable second = build_second_table(N);
    const QStirlingTable first = build_first_table(N);
    const auto s2 = classical_stirling2_table(N);
    const auto s1 = classical_stirling1_table(N);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(second.at(n, k).eval(Rational(1)) ==
                  Rational(s2[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
            CHECK(first.at(n, k).eval(Rational(1)) ==
                  Rational(s1[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
        }
}

TEST_CASE("special values up to n = 30") {
    const VerificationReport rep = verify_special_values(30);
    CHECK(rep.passed());
    CHECK(rep.checks_run == 30 * 3 + 29);
}

TEST_CASE("closed form reproduces the table") {
    const QStirlingTable t = build_second_table(15);
    for (int n = 1; n <= 15; ++n)
        for (int k = 1; k <= n; ++k) CHECK(stirling2_closed_form(n, k) == t.at(n, k));
    CHECK(stirling2_closed_form(1, 1) == LaurentPoly::one());
    CHECK(stirling2_closed_form(3, 2) == LaurentPoly({{1, 2}, {2, 1}}));
    for (int n = 1; n <= 10; ++n)
        CHECK(stirling2_closed_form(n, n) == LaurentPoly::monomial(n * (n - 1) / 2));
}

TEST_CASE("alternate normalization differs by a monomial factor") {
    // carrying a q^{k(1-k)/2} prefactor on the alternating sum lands in a
    // different normalization: equal to the table only for k <= 1
    const QStirlingTable t = build_second_table(8);
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            const LaurentPoly shifted = stirling2_closed_form(n, k).shifted(k * (1 - k) / 2);
            if (k <= 1) CHECK(shifted == t.at(n, k));
            else CHECK_FALSE(shifted == t.at(n, k));
        }
}

TEST_CASE("double sum reproduces the table") {
    const QStirlingTable t = build_second_table(15);
    for (int n = 1; n <= 15; ++n)
        for (int k = 1; k <= n; ++k) CHECK(stirling2_double_sum(n, k) == t.at(n, k));
    CHECK(stirling2_double_sum(3, 2) == LaurentPoly({{1, 2}, {2, 1}}));
    CHECK(stirling2_double_sum(2, 2) == LaurentPoly::monomial(1));
    CHECK(stirling2_double_sum(1, 1) == LaurentPoly::one());
}

TEST_CASE("q-difference route reproduces the table") {
    const QStirlingTable t = build_second_table(15);
    for (int n = 1; n <= 15; ++n)
        for (int k = 1; k <= n; ++k) CHECK(newton_gregory(n, k) == t.at(n, k));
    for (int n = 1; n <= 10; ++n) CHECK(newton_gregory(n, 1) == LaurentPoly::one());
    CHECK(newton_gregory(2, 2) == LaurentPoly::monomial(1));
}

TEST_CASE("summand reindexing identity") {
    // C(k,j)_q [j]^n [j-1]! [k-j]! = [j]^{n-1} [k]! for j >= 1 (the j-th
    // summand of the alternating sum rewritten without the binomial)
    for (int k = 1; k <= 8; ++k)
        for (int j = 1; j <= k; ++j)
            for (int n = 1; n <= 8; ++n) {
                const LaurentPoly lhs = q_binomial(k, j) *
                                        pow(q_integer(j), static_cast<unsigned>(n)) *
                                        q_factorial(j - 1) * q_factorial(k - j);
                const LaurentPoly rhs =
                    pow(q_integer(j), static_cast<unsigned>(n - 1)) * q_factorial(k);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("q-Bell numbers") {
    const QStirlingTable t = build_second_table(8);
    CHECK(bell_q(t, 1) == LaurentPoly::one());
    CHECK(bell_q(t, 3) == LaurentPoly({{0, 1}, {1, 2}, {2, 1}, {3, 1}}));
    const auto bell = classical_bell(8);
    for (int n = 0; n <= 6; ++n)
        CHECK(bell_q(t, n).eval(Rational(1)) == Rational(bell[static_cast<std::size_t>(n)]));
    const QBellSequence seq = QBellSequence::build(t);
    CHECK(seq.max_n == 8);
    for (int n = 0; n <= 8; ++n)
        CHECK(seq.values[static_cast<std::size_t>(n)] == bell_q(t, n));
}

TEST_CASE("orthogonality") {
    const QStirlingTable first = build_first_table(25);
    const QStirlingTable second = build_second_table(25);

    // hand-checked cells
    LaurentPoly n3m1;
    for (int k = 1; k <= 3; ++k) n3m1 += first.at(3, k) * second.at(k, 1);
    CHECK(n3m1 == LaurentPoly());
    CHECK(first.at(2, 2) * second.at(2, 2) == LaurentPoly::one());

    const VerificationReport rep = orthogonality_check(first, second, 25);
    CHECK(rep.passed());
    CHECK(rep.checks_run == 25 * 26); // two sums per (n,m) pair
}

TEST_CASE("connection identities") {
    const QStirlingTable second = build_second_table(8);
    const QStirlingTable first = build_first_table(8);
    CHECK(connection_check_second(second, 0, 1) == LaurentPoly());
    CHECK(connection_check_second(second, 3, 2) == LaurentPoly());
    CHECK(connection_check_second(second, 5, 4) == LaurentPoly());
    CHECK(connection_check_first(first, 2, 2) == LaurentPoly());
    CHECK(connection_check_first(first, 0, 1) == LaurentPoly());
    CHECK(connection_check_first(first, 4, 3) == LaurentPoly());
    CHECK(connection_check_qbinom(second, 1, 1) == LaurentPoly());
    CHECK(connection_check_qbinom(second, 3, 3) == LaurentPoly());
    CHECK(connection_check_qbinom(second, 2, 4) == LaurentPoly());
    for (int x = 0; x <= 8; ++x)
        for (int n = 0; n <= 8; ++n) {
            CHECK(connection_check_second(second, x, n) == LaurentPoly());
            CHECK(connection_check_first(first, x, n) == LaurentPoly());
            CHECK(connection_check_qbinom(second, x, n) == LaurentPoly());
        }
}

TEST_CASE("table export round-trips through from_rows") {
    const QStirlingTable t = build_first_table(6);
    std::vector<std::vector<LaurentPoly>> rows;
    for (int n = 0; n <= 6; ++n) {
        std::vector<LaurentPoly> row;
        for (int k = 0; k <= n; ++k) row.push_back(t.at(n, k));
        rows.push_back(std::move(row));
    }
    CHECK(QStirlingTable::from_rows(StirlingKind::first, rows) == t);
    rows[2].pop_back();
    CHECK_THROWS_AS(QStirlingTable::from_rows(StirlingKind::first, rows), std::invalid_argument);
}
