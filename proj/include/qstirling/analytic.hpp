#ifndef QSTIRLING_ANALYTIC_HPP
#define QSTIRLING_ANALYTIC_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qstirling/bigint.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/power_series.hpp"
#include "qstirling/qcore.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

using ComplexVal = std::complex<double>;

inline constexpr std::size_t kDefaultTruncation = 24;

// ---------------------------------------------------------------------------
// classical (q -> 1) oracles
// ---------------------------------------------------------------------------

// S(n,k) via S(n+1,k) = S(n,k-1) + k S(n,k); rows 0..N.
inline std::vector<std::vector<BigInt>> classical_stirling2_table(int N) {
    std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(N) + 1);
    t[0] = {BigInt(1)};
    for (int n = 1; n <= N; ++n) {
        t[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, BigInt(0));
        for (int k = 1; k <= n; ++k) {
            const auto& prev = t[static_cast<std::size_t>(n) - 1];
            BigInt above = k <= n - 1 ? prev[static_cast<std::size_t>(k)] : BigInt(0);
            t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k) - 1] + BigInt(k) * above;
        }
    }
    return t;
}

// signed s(n,k) via s(n+1,k) = s(n,k-1) - n s(n,k); rows 0..N.
inline std::vector<std::vector<BigInt>> classical_stirling1_table(int N) {
    std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(N) + 1);
    t[0] = {BigInt(1)};
    for (int n = 1; n <= N; ++n) {
        t[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, BigInt(0));
        for (int k = 1; k <= n; ++k) {
            const auto& prev = t[static_cast<std::size_t>(n) - 1];
            BigInt above = k <= n - 1 ? prev[static_cast<std::size_t>(k)] : BigInt(0);
            t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k) - 1] - BigInt(n - 1) * above;
        }
    }
    return t;
}

inline BigInt classical_stirling2(int n, int k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    return classical_stirling2_table(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline BigInt classical_stirling1(int n, int k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    return classical_stirling1_table(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// E(n,k) = sum_{j=0}^{k} (-1)^j C(n+1,j) (k+1-j)^n for 0 <= k <= n-1.
inline BigInt eulerian(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1)
        throw IndexOutOfTriangle("eulerian: need n >= 1 and 0 <= k <= n-1");
    BigInt sum(0);
    for (int j = 0; j <= k; ++j) {
        BigInt term = binomial(n + 1, j) *
                      pow(BigInt(k + 1 - j), static_cast<unsigned long long>(n));
        sum += (j & 1) ? -term : term;
    }
    return sum;
}

// Residual of m! S(n,m) - sum_{j=0}^{n-1} E(n,j) C(j, n-m); zero when the
// Eulerian expansion of the second kind holds.
inline Rational eulerian_stirling_check(int n, int m) {
    if (n < 1 || m < 0 || n < m)
        throw std::invalid_argument("eulerian_stirling_check: need n >= m, n >= 1");
    BigInt sum(0);
    for (int j = 0; j <= n - 1; ++j) sum += eulerian(n, j) * binomial(j, n - m);
    return Rational(classical_stirling2(n, m)) -
           Rational(sum, factorial(static_cast<unsigned>(m)));
}

// ---------------------------------------------------------------------------
// higher-order Bernoulli numbers
// ---------------------------------------------------------------------------

/*
 * B_k^{(n)} from (t/(e^t-1))^n = sum_k B_k^{(n)} t^k / k!; a negative order
 * -n uses the reciprocal base ((e^t-1)/t)^n. Exact through the series
 * truncation (index must be below it).
 */
inline Rational bernoulli_higher(long long order, int index,
                                 std::size_t truncation = kDefaultTruncation) {
    if (index < 0) throw std::invalid_argument("bernoulli_higher: negative index");
    if (static_cast<std::size_t>(index) >= truncation)
        throw TruncationExceeded("bernoulli_higher: index " + std::to_string(index) +
                                 " at or beyond truncation order " + std::to_string(truncation));
    const PowerSeries base = PowerSeries::expm1_over_t(truncation);
    const unsigned e = static_cast<unsigned>(order < 0 ? -order : order);
    const PowerSeries series = order >= 0 ? pow(inverse(base), e) : pow(base, e);
    return series.coeff(static_cast<std::size_t>(index)) *
           Rational(factorial(static_cast<unsigned>(index)));
}

struct HigherBernoulli {
    long long order = 0;
    int index = 0;
    Rational value;
};

// Residual of S(n+k,n) - C(n+k,k) B_k^{(-n)}; zero when the classical
// Stirling/Bernoulli relation holds.
inline Rational gessel_check(int n, int k, std::size_t truncation = kDefaultTruncation) {
    if (n < 1 || k < 0) throw std::invalid_argument("gessel_check: need n >= 1, k >= 0");
    return Rational(classical_stirling2(n + k, n)) -
           Rational(binomial(n + k, k)) * bernoulli_higher(-n, k, truncation);
}

/*
 * Two readings of the Eulerian expression for B_k^{(-n)}:
 *   printed:    C(n+k,k)/n!       * sum_j E(n+k,j) C(j,k)
 *   consistent: 1/(C(n+k,k) n!)   * sum_j E(n+k,j) C(j,k)
 * The second is what composing the Stirling/Bernoulli and Eulerian/Stirling
 * relations yields. Both are evaluated against the power-series value and
 * the outcome of each reading is recorded.
 */
struct EulerianBernoulliEntry {
    int n = 0;
    int k = 0;
    Rational series_value;
    Rational consistent_value;
    Rational printed_value;
    bool consistent_matches = false;
    bool printed_matches = false;
};

inline EulerianBernoulliEntry eulerian_bernoulli_check(int n, int k,
                                                       std::size_t truncation =
                                                           kDefaultTruncation) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("eulerian_bernoulli_check: need n >= 1, k >= 0");
    EulerianBernoulliEntry e;
    e.n = n;
    e.k = k;
    e.series_value = bernoulli_higher(-n, k, truncation);
    BigInt sum(0);
    for (int j = 0; j <= n + k - 1; ++j) sum += eulerian(n + k, j) * binomial(j, k);
    const Rational choose(binomial(n + k, k));
    const Rational nfact(factorial(static_cast<unsigned>(n)));
    e.consistent_value = Rational(sum) / (choose * nfact);
    e.printed_value = choose * Rational(sum) / nfact;
    e.consistent_matches = e.consistent_value == e.series_value;
    e.printed_matches = e.printed_value == e.series_value;
    return e;
}

// ---------------------------------------------------------------------------
// interpolation function Y_S
// ---------------------------------------------------------------------------

namespace detail {
inline double q_integer_real(int j, double q) {
    // [j] at a real point; the q = 1 limit is j itself
    if (q == 1.0) return static_cast<double>(j);
    double sum = 0.0, p = 1.0;
    for (int i = 0; i < j; ++i) {
        sum += p;
        p *= q;
    }
    return sum;
}
} // namespace detail

/*
 * Y_S(z,k,q) = (1/[k]!) sum_{j=1}^{k} (-1)^{k-j} C(k,j)_q q^{(k-j)(k-j-1)/2} [j]^{-z}
 * with [j]^{-z} = exp(-z ln [j]) on the principal branch. Admissible
 * q in (-1,1], q != 0: there [j] > 0 for every j >= 1, and q = -1 is
 * excluded because [k]! vanishes for k >= 2. The sum starts at j = 1; the
 * j = 0 term would be [0]^{-z} with [0] = 0, and at the interpolation
 * points z = -n it contributes 0^n = 0, so dropping it is the one total
 * reading under which Y_S(-n,k,q) = S(n,k,q).
 */
inline ComplexVal ys_eval(ComplexVal z, int k, double q) {
    if (k < 1) throw DomainError("ys_eval: need k >= 1");
    if (!(q > -1.0 && q <= 1.0))
        throw DomainError("ys_eval: q must lie in (-1,1], got " + std::to_string(q));
    if (q == 0.0) throw DomainError("ys_eval: q must be nonzero");
    double kfact = 1.0;
    for (int j = 1; j <= k; ++j) kfact *= detail::q_integer_real(j, q);
    ComplexVal sum(0.0, 0.0);
    for (int j = 1; j <= k; ++j) {
        const double qbin = q_binomial(k, j).eval(ComplexVal(q, 0.0)).real();
        double qpow = 1.0;
        for (int i = 0; i < (k - j) * (k - j - 1) / 2; ++i) qpow *= q;
        const double bracket = detail::q_integer_real(j, q);
        ComplexVal term = qbin * qpow * std::exp(-z * std::log(bracket));
        if ((k - j) & 1) term = -term;
        sum += term;
    }
    sum /= kfact;
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
        throw DomainError("ys_eval: value exceeds double range at this z");
    return sum;
}

// q = 1 specialization: Y_S(z,k,1) = (1/k!) sum_j (-1)^{k-j} C(k,j) j^{-z}.
inline ComplexVal ys_eval_q1(ComplexVal z, int k) {
    if (k < 1) throw DomainError("ys_eval_q1: need k >= 1");
    ComplexVal sum(0.0, 0.0);
    for (int j = 1; j <= k; ++j) {
        ComplexVal term = binomial(k, j).to_double() *
                          std::exp(-z * std::log(static_cast<double>(j)));
        if ((k - j) & 1) term = -term;
        sum += term;
    }
    sum /= factorial(static_cast<unsigned>(k)).to_double();
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
        throw DomainError("ys_eval_q1: value exceeds double range at this z");
    return sum;
}

struct InterpResult {
    ComplexVal z;
    int k = 0;
    double q = 0.0;
    ComplexVal value;
};

// B(n,q) as the interpolation sum over k = 1..n at z = -n (the k = 0 term
// is 0 for n >= 1).
inline double bell_q_via_ys(int n, double q) {
    if (n < 1) throw std::invalid_argument("bell_q_via_ys: need n >= 1");
    ComplexVal sum(0.0, 0.0);
    for (int k = 1; k <= n; ++k) sum += ys_eval(ComplexVal(-n, 0.0), k, q);
    return sum.real();
}

// ---------------------------------------------------------------------------
// zeta via the first-kind Stirling series
// ---------------------------------------------------------------------------

struct ZetaReport {
    int k = 0;
    long long terms_used = 0;
    double partial_sum = 0.0;
    std::optional<double> reference;
    std::optional<double> abs_error;
};

inline constexpr double kZeta3 = 1.2020569031595942; // Apery's constant

/*
 * zeta(k+1) = sum_{n>=k} (-1)^{n-k} s(n,k) / (n n!), with the
 * factorial-scaled values a_n(j) = s(n,j)/n! carried as doubles through
 *   a_{n+1}(j) = (a_n(j-1) - n a_n(j)) / (n+1),
 * which stays bounded where raw s(n,k) overflows any fixed-size integer.
 * Returns the signed terms for n = k .. terms.
 */
inline std::vector<double> zeta_series_terms(int k, long long terms) {
    if (k < 1) throw std::invalid_argument("zeta_series_terms: need k >= 1");
    if (terms < k) throw std::invalid_argument("zeta_series_terms: need terms >= k");
    std::vector<double> a(static_cast<std::size_t>(k) + 1, 0.0);
    a[1] = 1.0; // s(1,1)/1!
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(terms - k) + 1);
    for (long long n = 1; n <= terms; ++n) {
        if (n >= k) {
            const double term = a[static_cast<std::size_t>(k)] / static_cast<double>(n);
            out.push_back(((n - k) & 1LL) ? -term : term);
        }
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j-- > 1;)
            a[j] = (a[j - 1] - static_cast<double>(n) * a[j]) / static_cast<double>(n + 1);
        // a[0] stays 0: s(n,0) = 0 for n >= 1
    }
    return out;
}

inline ZetaReport zeta_via_stirling1(int k, long long terms) {
    double sum = 0.0;
    for (const double term : zeta_series_terms(k, terms)) sum += term;
    ZetaReport rep;
    rep.k = k;
    rep.terms_used = terms;
    rep.partial_sum = sum;
    if (k == 1) rep.reference = std::numbers::pi * std::numbers::pi / 6.0;
    if (k == 2) rep.reference = kZeta3;
    if (rep.reference) rep.abs_error = std::abs(sum - *rep.reference);
    return rep;
}

// Exact-rational cross-check of the same partial sum; practical for
// terms <= 500.
inline Rational zeta_partial_sum_exact(int k, int terms) {
    if (k < 1 || terms < k)
        throw std::invalid_argument("zeta_partial_sum_exact: need 1 <= k <= terms");
    if (terms > 500)
        throw std::invalid_argument("zeta_partial_sum_exact: capped at 500 terms");
    auto s1 = classical_stirling1_table(terms);
    Rational sum(0);
    BigInt nfact(1);
    for (int n = 1; n <= terms; ++n) {
        nfact *= BigInt(n);
        if (n < k) continue;
        Rational term(s1[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
                      BigInt(n) * nfact);
        sum += ((n - k) & 1) ? -term : term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// q-Bernoulli closed form
// ---------------------------------------------------------------------------

/*
 * beta_m(h,k,q) = (1-q)^{-m} sum_{j=0}^{m} C(m,j) (-1)^j ((h+j)/[h+j])^k,
 * exact over rationals. Requires h >= 1 so every [h+j] is over a positive
 * integer, and q != 1; any vanishing [h+j] (q = -1 with h+j even) is a
 * domain error.
 */
inline Rational beta_q(int m, int h, int k, const Rational& q) {
    if (m < 0 || h < 1) throw std::invalid_argument("beta_q: need m >= 0, h >= 1");
    if (q == Rational(1)) throw DomainError("beta_q: q = 1 is outside the domain");
    Rational sum(0);
    for (int j = 0; j <= m; ++j) {
        Rational bracket(0);
        Rational p(1);
        for (int i = 0; i < h + j; ++i) {
            bracket += p;
            p *= q;
        }
        if (bracket.is_zero())
            throw DomainError("beta_q: [h+j] vanishes at h+j = " + std::to_string(h + j));
        Rational term = Rational(binomial(m, j)) * pow(Rational(h + j) / bracket, k);
        sum += (j & 1) ? -term : term;
    }
    return pow(Rational(1) - q, -static_cast<long long>(m)) * sum;
}

} // namespace qstirling

#endif // QSTIRLING_ANALYTIC_HPP
