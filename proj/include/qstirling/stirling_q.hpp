#ifndef QSTIRLING_STIRLING_Q_HPP
#define QSTIRLING_STIRLING_Q_HPP

#include <string>
#include <utility>
#include <vector>

#include "qstirling/errors.hpp"
#include "qstirling/laurent.hpp"
#include "qstirling/qcore.hpp"
#include "qstirling/report.hpp"

namespace qstirling {

enum class StirlingKind { first, second };

inline std::string to_string(StirlingKind kind) {
    return kind == StirlingKind::first ? "s1" : "s2";
}

/*
 * Triangle of q-deformed Stirling numbers, entries (n,k) for
 * 0 <= k <= n <= max_n.
 *
 * Second kind, from S(1,0)=0, S(1,1)=1:
 *   S(n+1,k) = q^{k-1} S(n,k-1) + [k] S(n,k)        (ordinary polynomials)
 * First kind, from s(1,0)=0, s(1,1)=1:
 *   s(n+1,k) = q^{-n} (s(n,k-1) - [n] s(n,k))       (Laurent polynomials)
 *
 * Row 0 is the convention entry (0,0) = 1, which makes the connection
 * identities hold at n = 0. Out-of-triangle reads are 0.
 */
class QStirlingTable {
public:
    static QStirlingTable build(StirlingKind kind, int max_n) {
        if (max_n < 1) throw std::invalid_argument("QStirlingTable: max_n must be >= 1");
        QStirlingTable t;
        t.kind_ = kind;
        t.rows_.resize(static_cast<std::size_t>(max_n) + 1);
        t.rows_[0] = {LaurentPoly::one()};
        for (int n = 1; n <= max_n; ++n) {
            auto& row = t.rows_[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n) + 1);
            const auto& prev = t.rows_[static_cast<std::size_t>(n) - 1];
            for (int k = 1; k <= n; ++k) {
                LaurentPoly above = k <= n - 1 ? prev[static_cast<std::size_t>(k)]
                                               : LaurentPoly();
                LaurentPoly diag = prev[static_cast<std::size_t>(k) - 1];
                if (kind == StirlingKind::second) {
                    row[static_cast<std::size_t>(k)] =
                        diag.shifted(k - 1) + q_integer(k) * above;
                } else {
                    row[static_cast<std::size_t>(k)] =
                        (diag - q_integer(n - 1) * above).shifted(-(n - 1));
                }
            }
        }
        return t;
    }

    // Adopt externally supplied rows (deserialization); validates the
    // triangle shape and boundary conventions, not the recurrence.
    static QStirlingTable from_rows(StirlingKind kind, std::vector<std::vector<LaurentPoly>> rows) {
        if (rows.size() < 2 || rows[0] != std::vector<LaurentPoly>{LaurentPoly::one()})
            throw std::invalid_argument("QStirlingTable: rows must start with [1]");
        for (std::size_t n = 0; n < rows.size(); ++n) {
            if (rows[n].size() != n + 1)
                throw std::invalid_argument("QStirlingTable: row " + std::to_string(n) +
                                            " must have " + std::to_string(n + 1) + " entries");
            if (n >= 1 && !rows[n][0].is_zero())
                throw std::invalid_argument("QStirlingTable: entry (n,0) must be 0 for n >= 1");
        }
        QStirlingTable t;
        t.kind_ = kind;
        t.rows_ = std::move(rows);
        return t;
    }

    StirlingKind kind() const { return kind_; }
    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

    // Entry (n,k); 0 for k outside [0,n]. n must be within the table.
    const LaurentPoly& at(int n, int k) const {
        if (n < 0 || n > max_n())
            throw IndexOutOfTriangle("QStirlingTable: row " + std::to_string(n) +
                                     " outside table of size " + std::to_string(max_n()));
        if (k < 0 || k > n) return zero_;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    friend bool operator==(const QStirlingTable& a, const QStirlingTable& b) {
        return a.kind_ == b.kind_ && a.rows_ == b.rows_;
    }

private:
    StirlingKind kind_ = StirlingKind::second;
    std::vector<std::vector<LaurentPoly>> rows_;
    LaurentPoly zero_;
};

inline QStirlingTable build_second_table(int max_n) {
    return QStirlingTable::build(StirlingKind::second, max_n);
}

inline QStirlingTable build_first_table(int max_n) {
    return QStirlingTable::build(StirlingKind::first, max_n);
}

/*
 * Alternating q-binomial sum for the second kind,
 *   S(n,k) = (1/[k]!) sum_{j=1}^{k} (-1)^{k-j} C(k,j)_q q^{(k-j)(k-j-1)/2} [j]^n,
 * assembled exactly and divided exactly by [k]!. The j=0 summand is zero
 * because [0] = 0. A non-exact division here means a broken identity.
 */
inline LaurentPoly stirling2_closed_form(int n, int k) {
    if (k < 1 || k > n)
        throw IndexOutOfTriangle("stirling2_closed_form: need 1 <= k <= n");
    LaurentPoly sum;
    for (int j = 1; j <= k; ++j) {
        LaurentPoly term = q_binomial(k, j) * pow(q_integer(j), static_cast<unsigned>(n));
        term = term.shifted((k - j) * (k - j - 1) / 2);
        if ((k - j) & 1) term = -term;
        sum += term;
    }
    return exact_div(sum, q_factorial(k));
}

/*
 * Same value through the double sum obtained by expanding
 * [j]^n = (1-q^j)^n / (1-q)^n binomially:
 *   S(n,k) = (1/((1-q)^n [k]!)) sum_{j=0}^{k} sum_{d=0}^{n}
 *            (-1)^{k-j-d} C(k,j)_q C(n,d) q^{(k-j)(k-j-1)/2 + j d}.
 * Exercises exact division by (1-q)^n [k]!.
 */
inline LaurentPoly stirling2_double_sum(int n, int k) {
    if (k < 1 || k > n)
        throw IndexOutOfTriangle("stirling2_double_sum: need 1 <= k <= n");
    LaurentPoly sum;
    for (int j = 0; j <= k; ++j) {
        const LaurentPoly qb = q_binomial(k, j);
        for (int d = 0; d <= n; ++d) {
            Rational c(binomial(n, d));
            if ((k - j + d) & 1) c = -c;
            sum += LaurentPoly::monomial((k - j) * (k - j - 1) / 2 + j * d, c) * qb;
        }
    }
    const LaurentPoly one_minus_q = LaurentPoly::one() - LaurentPoly::monomial(1);
    return exact_div(sum, pow(one_minus_q, static_cast<unsigned>(n)) * q_factorial(k));
}

/*
 * q-difference route: with f(x) = [x]^n over integer points and
 * g_{m+1}(x) = g_m(x+1) - q^m g_m(x), the second kind is g_k(0) / [k]!.
 */
inline LaurentPoly newton_gregory(int n, int k) {
    if (k < 1 || k > n)
        throw IndexOutOfTriangle("newton_gregory: need 1 <= k <= n");
    std::vector<LaurentPoly> vals(static_cast<std::size_t>(k) + 1);
    for (int x = 0; x <= k; ++x)
        vals[static_cast<std::size_t>(x)] = pow(q_integer(x), static_cast<unsigned>(n));
    for (int m = 0; m < k; ++m)
        for (int x = 0; x <= k - 1 - m; ++x)
            vals[static_cast<std::size_t>(x)] =
                vals[static_cast<std::size_t>(x) + 1] -
                LaurentPoly::monomial(m) * vals[static_cast<std::size_t>(x)];
    return exact_div(vals[0], q_factorial(k));
}

// B(n,q) = sum_k S(n,k,q): row sum of the second-kind triangle.
inline LaurentPoly bell_q(const QStirlingTable& second, int n) {
    if (n < 0 || n > second.max_n())
        throw IndexOutOfTriangle("bell_q: n outside table");
    LaurentPoly sum;
    for (int k = 0; k <= n; ++k) sum += second.at(n, k);
    return sum;
}

struct QBellSequence {
    int max_n = 0;
    std::vector<LaurentPoly> values; // values[n] = B(n,q), n = 0..max_n

    static QBellSequence build(const QStirlingTable& second) {
        QBellSequence b;
        b.max_n = second.max_n();
        b.values.reserve(static_cast<std::size_t>(b.max_n) + 1);
        for (int n = 0; n <= b.max_n; ++n) b.values.push_back(bell_q(second, n));
        return b;
    }
};

/*
 * Both triangles are mutually inverse lower-triangular systems:
 *   sum_{k=m}^{n} s(n,k) S(k,m) = delta_{n,m}   and the transpose.
 * Every (n,m) pair with 1 <= m <= n <= N is checked exactly.
 */
inline VerificationReport orthogonality_check(const QStirlingTable& first,
                                              const QStirlingTable& second, int N) {
    VerificationReport rep;
    rep.suite = "orthogonality";
    rep.range["n"] = N;
    for (int n = 1; n <= N; ++n) {
        for (int m = 1; m <= n; ++m) {
            const LaurentPoly expected = n == m ? LaurentPoly::one() : LaurentPoly();
            LaurentPoly sum_fs, sum_sf;
            for (int k = m; k <= n; ++k) {
                sum_fs += first.at(n, k) * second.at(k, m);
                sum_sf += second.at(n, k) * first.at(k, m);
            }
            rep.check_eq("s*S n=" + std::to_string(n) + ",m=" + std::to_string(m),
                         expected.to_string(), sum_fs.to_string());
            rep.check_eq("S*s n=" + std::to_string(n) + ",m=" + std::to_string(m),
                         expected.to_string(), sum_sf.to_string());
        }
    }
    return rep;
}

inline VerificationReport orthogonality_check(int N) {
    return orthogonality_check(build_first_table(N), build_second_table(N), N);
}

// Residual of [x]^n - sum_j S(n,j) [x][x-1]...[x-j+1]; zero when the
// second-kind connection identity holds.
inline LaurentPoly connection_check_second(const QStirlingTable& second, int x, int n) {
    LaurentPoly residual = pow(q_integer(x), static_cast<unsigned>(n));
    for (int j = 0; j <= n; ++j) residual -= second.at(n, j) * q_falling_at(x, j);
    return residual;
}

// Residual of [x][x-1]...[x-n+1] - sum_j s(n,j) [x]^j.
inline LaurentPoly connection_check_first(const QStirlingTable& first, int x, int n) {
    LaurentPoly residual = q_falling_at(x, n);
    for (int j = 0; j <= n; ++j)
        residual -= first.at(n, j) * pow(q_integer(x), static_cast<unsigned>(j));
    return residual;
}

// Residual of [x]^n - sum_k C(x,k)_q [k]! S(n,k), with C(x,k)_q the
// Gaussian binomial evaluated at integer x.
inline LaurentPoly connection_check_qbinom(const QStirlingTable& second, int x, int n) {
    LaurentPoly residual = pow(q_integer(x), static_cast<unsigned>(n));
    for (int k = 0; k <= n; ++k)
        residual -= q_binomial_at_integer(x, k) * q_factorial(k) * second.at(n, k);
    return residual;
}

inline LaurentPoly connection_check_second(int x, int n) {
    return connection_check_second(build_second_table(std::max(n, 1)), x, n);
}

inline LaurentPoly connection_check_first(int x, int n) {
    return connection_check_first(build_first_table(std::max(n, 1)), x, n);
}

inline LaurentPoly connection_check_qbinom(int x, int n) {
    return connection_check_qbinom(build_second_table(std::max(n, 1)), x, n);
}

} // namespace qstirling

#endif // QSTIRLING_STIRLING_Q_HPP
