#ifndef QSTIRLING_POWER_SERIES_HPP
#define QSTIRLING_POWER_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstirling/bigint.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

/*
 * Formal power series in t truncated at a fixed order: exactly `order`
 * rational coefficients for t^0 .. t^{order-1}. Arithmetic never reads or
 * produces coefficients at or beyond the truncation.
 */
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order) {
        if (order == 0) throw std::invalid_argument("PowerSeries: order must be positive");
    }

    PowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (order == 0) throw std::invalid_argument("PowerSeries: order must be positive");
        coeffs_.resize(order);
    }

    static PowerSeries one(std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = Rational(1);
        return s;
    }

    // (e^t - 1)/t = sum_{j>=0} t^j / (j+1)!
    static PowerSeries expm1_over_t(std::size_t order) {
        PowerSeries s(order);
        for (std::size_t j = 0; j < order; ++j)
            s.coeffs_[j] = Rational(BigInt(1), factorial(static_cast<unsigned>(j) + 1));
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }

    const Rational& coeff(std::size_t idx) const {
        if (idx >= coeffs_.size())
            throw TruncationExceeded("PowerSeries: coefficient index " + std::to_string(idx) +
                                     " at or beyond truncation order " +
                                     std::to_string(coeffs_.size()));
        return coeffs_[idx];
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b);
        PowerSeries r(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < b.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend PowerSeries pow(const PowerSeries& base, unsigned e) {
        PowerSeries acc = one(base.order()), sq = base;
        while (e != 0) {
            if (e & 1u) acc = acc * sq;
            e >>= 1u;
            if (e != 0) sq = sq * sq;
        }
        return acc;
    }

    // Multiplicative inverse up to the truncation order.
    friend PowerSeries inverse(const PowerSeries& a) {
        if (a.coeffs_[0].is_zero())
            throw NonInvertibleSeries("inverse: constant term is zero");
        PowerSeries r(a.order());
        r.coeffs_[0] = Rational(1) / a.coeffs_[0];
        for (std::size_t k = 1; k < a.order(); ++k) {
            Rational s(0);
            for (std::size_t i = 1; i <= k; ++i) s += a.coeffs_[i] * r.coeffs_[k - i];
            r.coeffs_[k] = -s / a.coeffs_[0];
        }
        return r;
    }

private:
    std::vector<Rational> coeffs_;

    static void require_same_order(const PowerSeries& a, const PowerSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("PowerSeries: operands must share the truncation order");
    }
};

} // namespace qstirling

#endif // QSTIRLING_POWER_SERIES_HPP
