#ifndef QSTIRLING_QCORE_HPP
#define QSTIRLING_QCORE_HPP

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstirling/errors.hpp"
#include "qstirling/laurent.hpp"

namespace qstirling {

// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
inline LaurentPoly q_integer(int n) {
    if (n < 0) throw std::invalid_argument("q_integer: negative index");
    LaurentPoly p;
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(i);
    return p;
}

// [n]! = [n][n-1]...[1]; [0]! = 1.
inline LaurentPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative index");
    LaurentPoly p = LaurentPoly::one();
    for (int j = 1; j <= n; ++j) p *= q_integer(j);
    return p;
}

/*
 * Gaussian binomial via the q-Pascal recurrence
 *   C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q,  C(n,0)_q = C(n,n)_q = 1,
 * so that no rational intermediate appears and polynomiality holds by
 * construction.
 */
inline LaurentPoly q_binomial(int n, int k) {
    if (k < 0 || k > n)
        throw IndexOutOfTriangle("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
    std::vector<LaurentPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = LaurentPoly::one();
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            LaurentPoly upper = j == m ? LaurentPoly() : row[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j) - 1] + LaurentPoly::monomial(j) * upper;
        }
    }
    return row[static_cast<std::size_t>(k)];
}

// Cross-check route: [n]! / ([k]! [n-k]!) by exact division.
inline LaurentPoly q_binomial_by_division(int n, int k) {
    if (k < 0 || k > n)
        throw IndexOutOfTriangle("q_binomial_by_division: need 0 <= k <= n");
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

// Falling product [x][x-1]...[x-k+1]; empty product is 1, and any factor
// [0] makes it 0.
inline LaurentPoly q_falling_at(int x, int k) {
    if (x < 0 || k < 0) throw std::invalid_argument("q_falling_at: negative argument");
    LaurentPoly p = LaurentPoly::one();
    for (int i = 0; i < k; ++i) {
        if (x - i <= 0) return LaurentPoly();
        p *= q_integer(x - i);
    }
    return p;
}

// C(x,k)_q at a nonnegative integer x: [x][x-1]...[x-k+1] / [k]!,
// exactly divided; 0 when x < k.
inline LaurentPoly q_binomial_at_integer(int x, int k) {
    if (x < 0 || k < 0) throw std::invalid_argument("q_binomial_at_integer: negative argument");
    if (x < k) return LaurentPoly();
    return exact_div(q_falling_at(x, k), q_factorial(k));
}

// [n] at q = -1: 1 for odd n, 0 for even n.
inline int epsilon(int n) {
    if (n < 0) throw std::invalid_argument("epsilon: negative index");
    return n & 1;
}

// Parity extension used by the fermionic connection identities.
inline int epsilon_at(long long m) { return static_cast<int>(std::llabs(m) & 1LL); }

} // namespace qstirling

#endif // QSTIRLING_QCORE_HPP
