#ifndef QSTIRLING_RATIONAL_HPP
#define QSTIRLING_RATIONAL_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qstirling/bigint.hpp"

namespace qstirling {

/*
 * Exact rational number over BigInt.
 * Canonical form: den > 0, gcd(|num|, den) = 1, zero is 0/1.
 * Integer-valued operands (den == 1) skip the gcd reduction.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {} // NOLINT: implicit by design
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // parses "num", "num/den"
    explicit Rational(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos) {
            num_ = BigInt(s);
            den_ = BigInt(1);
        } else {
            num_ = BigInt(s.substr(0, pos));
            den_ = BigInt(s.substr(pos + 1));
            if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
            canonicalize();
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sgn() const { return num_.sgn(); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        if (a.den_.is_one() && b.den_.is_one()) {
            r.num_ = a.num_ + b.num_;
            return r;
        }
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        if (a.den_.is_one() && b.den_.is_one()) {
            r.num_ = a.num_ - b.num_;
            return r;
        }
        r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        r.num_ = a.num_ * b.num_;
        if (a.den_.is_one() && b.den_.is_one()) return r;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational r;
        r.num_ = a.num_ * b.den_;
        r.den_ = a.den_ * b.num_;
        r.canonicalize();
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (den_.is_one() && o.den_.is_one()) {
            num_ += o.num_;
            return *this;
        }
        return *this = *this + o;
    }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational pow(const Rational& base, long long e) {
        if (e < 0) {
            if (base.is_zero()) throw std::domain_error("Rational: 0 to a negative power");
            Rational inv(base.den_, base.num_);
            return pow(inv, -e);
        }
        Rational acc(1), sq = base;
        auto u = static_cast<unsigned long long>(e);
        while (u != 0) {
            if (u & 1ULL) acc *= sq;
            u >>= 1ULL;
            if (u != 0) sq *= sq;
        }
        return acc;
    }

    friend Rational abs(const Rational& a) { return a.sgn() < 0 ? -a : a; }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    // Robust for huge numerators/denominators of moderate quotient.
    double to_double() const {
        if (den_.is_one()) return num_.to_double();
        BigInt q, r;
        divmod(num_, den_, q, r);
        static const BigInt kScale("1000000000000000000");
        BigInt fq, fr;
        divmod(r * kScale, den_, fq, fr);
        return q.to_double() + fq.to_double() / 1e18;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
        return os << v.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sgn() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (den_.is_one()) return;
        BigInt g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

} // namespace qstirling

#endif // QSTIRLING_RATIONAL_HPP
