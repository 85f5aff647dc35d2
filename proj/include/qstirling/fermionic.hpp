#ifndef QSTIRLING_FERMIONIC_HPP
#define QSTIRLING_FERMIONIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "qstirling/qcore.hpp"
#include "qstirling/report.hpp"
#include "qstirling/stirling_q.hpp"

namespace qstirling {

/*
 * Fermionic Stirling triangles, built from
 *   s_f(n+1,k) = (-1)^n s_f(n,k-1) + (-1)^{n+1} eps_n s_f(n,k)
 *   S_f(n+1,k) = (-1)^{k-1} S_f(n,k-1) + eps_k S_f(n,k)
 * with s_f(1,1) = S_f(1,1) = 1, column 0 zero for n >= 1, entry (0,0) = 1,
 * and out-of-triangle reads 0. All entries are integers of O(n) size.
 */
struct FermionicTable {
    int max_n = 0;
    std::vector<std::vector<long long>> s_f;
    std::vector<std::vector<long long>> S_f;
    std::vector<int> eps; // eps[n] = [n] at q = -1, n = 0..max_n

    static FermionicTable build(int N) {
        if (N < 1) throw std::invalid_argument("FermionicTable: max_n must be >= 1");
        FermionicTable t;
        t.max_n = N;
        t.eps.resize(static_cast<std::size_t>(N) + 1);
        for (int n = 0; n <= N; ++n) t.eps[static_cast<std::size_t>(n)] = epsilon(n);
        t.s_f.assign(static_cast<std::size_t>(N) + 1, {});
        t.S_f.assign(static_cast<std::size_t>(N) + 1, {});
        t.s_f[0] = {1};
        t.S_f[0] = {1};
        t.s_f[1] = {0, 1};
        t.S_f[1] = {0, 1};
        for (int n = 2; n <= N; ++n) {
            t.s_f[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
            t.S_f[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
            const int m = n - 1; // previous row index
            const int row_sign = m % 2 == 0 ? 1 : -1;
            for (int k = 1; k <= n; ++k) {
                const long long s_diag = t.sf(m, k - 1);
                const long long s_above = t.sf(m, k);
                t.s_f[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                    row_sign * s_diag - row_sign * epsilon(m) * s_above;
                const long long S_diag = t.Sf(m, k - 1);
                const long long S_above = t.Sf(m, k);
                const int col_sign = (k - 1) % 2 == 0 ? 1 : -1;
                t.S_f[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                    col_sign * S_diag + epsilon(k) * S_above;
            }
        }
        return t;
    }

    long long sf(int n, int k) const {
        if (k < 0 || k > n) return 0;
        return s_f[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    long long Sf(int n, int k) const {
        if (k < 0 || k > n) return 0;
        return S_f[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
};

// s_f(n,k) = 0 whenever n > 2k (k >= 1).
inline VerificationReport vanishing_check(const FermionicTable& t, int N) {
    VerificationReport rep;
    rep.suite = "fermionic-vanishing";
    rep.range["n"] = N;
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            if (n > 2 * k)
                rep.check_eq("s_f n=" + std::to_string(n) + ",k=" + std::to_string(k), "0",
                             std::to_string(t.sf(n, k)));
    return rep;
}

inline VerificationReport vanishing_check(int N) {
    return vanishing_check(FermionicTable::build(N), N);
}

// Kronecker inversion: sum_j s_f(n,j) S_f(j,m) = delta_{n,m}, both orders.
inline VerificationReport fermionic_inversion_check(const FermionicTable& t, int N) {
    VerificationReport rep;
    rep.suite = "fermionic-inversion";
    rep.range["n"] = N;
    for (int n = 1; n <= N; ++n) {
        for (int m = 1; m <= n; ++m) {
            long long sum_fs = 0, sum_sf = 0;
            for (int j = m; j <= n; ++j) {
                sum_fs += t.sf(n, j) * t.Sf(j, m);
                sum_sf += t.Sf(n, j) * t.sf(j, m);
            }
            const long long expected = n == m ? 1 : 0;
            rep.check_eq("s_f*S_f n=" + std::to_string(n) + ",m=" + std::to_string(m),
                         std::to_string(expected), std::to_string(sum_fs));
            rep.check_eq("S_f*s_f n=" + std::to_string(n) + ",m=" + std::to_string(m),
                         std::to_string(expected), std::to_string(sum_sf));
        }
    }
    return rep;
}

inline VerificationReport fermionic_inversion_check(int N) {
    return fermionic_inversion_check(FermionicTable::build(N), N);
}

// Entrywise agreement of the q-triangles at q = -1 with the fermionic
// triangles (the recurrences specialize to each other there).
inline VerificationReport q_specialization_check(const FermionicTable& t,
                                                 const QStirlingTable& first,
                                                 const QStirlingTable& second, int N) {
    VerificationReport rep;
    rep.suite = "fermionic-specialization";
    rep.range["n"] = N;
    const Rational minus_one(-1);
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            rep.check_eq("s(q=-1) n=" + std::to_string(n) + ",k=" + std::to_string(k),
                         std::to_string(t.sf(n, k)), first.at(n, k).eval(minus_one).to_string());
            rep.check_eq("S(q=-1) n=" + std::to_string(n) + ",k=" + std::to_string(k),
                         std::to_string(t.Sf(n, k)), second.at(n, k).eval(minus_one).to_string());
        }
    }
    return rep;
}

inline VerificationReport q_specialization_check(int N) {
    return q_specialization_check(FermionicTable::build(N), build_first_table(N),
                                  build_second_table(N), N);
}

/*
 * Two further second-kind recurrences:
 *   (a) for odd j:           S_f(n+1,j) = S_f(n,j) + S_f(n,j-1), swept for j >= 5;
 *   (b) stated universally:  S_f(n+1,j) = S_f(n,j) - S_f(n-1,j-2), swept over
 *       all 2 <= j <= n so its actual domain of validity is mapped; any
 *       violation is reported rather than assumed away.
 */
inline VerificationReport alt_recurrence_check(const FermionicTable& t, int N) {
    VerificationReport rep;
    rep.suite = "fermionic-alt-recurrence";
    rep.range["n"] = N;
    for (int n = 1; n + 1 <= N; ++n)
        for (int j = 5; j <= n; j += 2)
            rep.check_eq("odd n=" + std::to_string(n) + ",j=" + std::to_string(j),
                         std::to_string(t.Sf(n + 1, j)),
                         std::to_string(t.Sf(n, j) + t.Sf(n, j - 1)));
    for (int n = 2; n + 1 <= N; ++n)
        for (int j = 2; j <= n; ++j)
            rep.check_eq("two-step n=" + std::to_string(n) + ",j=" + std::to_string(j),
                         std::to_string(t.Sf(n + 1, j)),
                         std::to_string(t.Sf(n, j) - t.Sf(n - 1, j - 2)));
    return rep;
}

inline VerificationReport alt_recurrence_check(int N) {
    return alt_recurrence_check(FermionicTable::build(N), N);
}

struct FermionicConnectionResult {
    long long power_residual = 0;                 // [x]_f^n vs sum over S_f
    std::optional<long long> falling_residual;    // [x]_f^(falling n) vs sum over s_f; x >= n only
};

/*
 * Connection identities for the fermionic basic numbers, with
 * [x]_f^{falling j} = eps_x eps_{x-1} ... eps_{x-j+1}:
 *   [x]_f^n = sum_j S_f(n,j) [x]_f^{falling j}
 *   [x]_f^{falling n} = sum_j s_f(n,j) [x]_f^j
 * Arguments below zero use the parity of |x-i| (reachable only through the
 * power-side sweep).
 */
inline FermionicConnectionResult fermionic_connection_check(const FermionicTable& t, int x,
                                                            int n) {
    if (x < 0 || n < 1)
        throw std::invalid_argument("fermionic_connection_check: need x >= 0, n >= 1");
    auto falling = [&](int j) {
        long long p = 1;
        for (int i = 0; i < j; ++i) p *= epsilon_at(static_cast<long long>(x) - i);
        return p;
    };
    FermionicConnectionResult res;
    long long lhs_pow = 1;
    for (int i = 0; i < n; ++i) lhs_pow *= epsilon(x);
    long long rhs_pow = 0;
    for (int j = 0; j <= n; ++j) rhs_pow += t.Sf(n, j) * falling(j);
    res.power_residual = lhs_pow - rhs_pow;
    if (x >= n) {
        long long rhs_fall = 0;
        long long eps_pow = 1;
        for (int j = 0; j <= n; ++j) {
            rhs_fall += t.sf(n, j) * eps_pow;
            eps_pow *= epsilon(x);
        }
        res.falling_residual = falling(n) - rhs_fall;
    }
    return res;
}

inline FermionicConnectionResult fermionic_connection_check(int x, int n) {
    return fermionic_connection_check(FermionicTable::build(std::max(n, 1)), x, n);
}

} // namespace qstirling

#endif // QSTIRLING_FERMIONIC_HPP
