#ifndef QSTIRLING_LAURENT_HPP
#define QSTIRLING_LAURENT_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qstirling/errors.hpp"
#include "qstirling/rational.hpp"

namespace qstirling {

/*
 * Sparse Laurent polynomial in one variable q with Rational coefficients.
 * Terms are kept sorted by exponent, zero coefficients are dropped, so
 * structural equality coincides with mathematical equality and the zero
 * polynomial is the empty term list.
 */
class LaurentPoly {
public:
    struct Term {
        int exp;
        Rational coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPoly() = default;

    LaurentPoly(std::initializer_list<Term> terms) {
        for (const auto& t : terms) add_term(t.exp, t.coef);
    }

    static LaurentPoly constant(Rational c) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_.push_back({0, std::move(c)});
        return p;
    }

    static LaurentPoly one() { return constant(Rational(1)); }

    static LaurentPoly monomial(int exp, Rational coef = Rational(1)) {
        LaurentPoly p;
        if (!coef.is_zero()) p.terms_.push_back({exp, std::move(coef)});
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    // exponents of the lowest/highest stored term; precondition: not zero
    int min_exp() const { return terms_.front().exp; }
    int max_exp() const { return terms_.back().exp; }

    Rational coef(int exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int e) { return t.exp < e; });
        if (it != terms_.end() && it->exp == exp) return it->coef;
        return Rational(0);
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            if (a.terms_[i].exp < b.terms_[j].exp) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (a.terms_[i].exp > b.terms_[j].exp) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Rational c = a.terms_[i].coef + b.terms_[j].coef;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + (-b);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        const int lo = a.min_exp() + b.min_exp();
        const int hi = a.max_exp() + b.max_exp();
        std::vector<Rational> acc(static_cast<std::size_t>(hi - lo) + 1);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                acc[static_cast<std::size_t>(ta.exp + tb.exp - lo)] += ta.coef * tb.coef;
        return from_dense(std::move(acc), lo);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
        if (c.is_zero()) return LaurentPoly();
        LaurentPoly r = p;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }

    friend LaurentPoly pow(const LaurentPoly& base, unsigned e) {
        LaurentPoly acc = one(), sq = base;
        while (e != 0) {
            if (e & 1u) acc *= sq;
            e >>= 1u;
            if (e != 0) sq *= sq;
        }
        return acc;
    }

    // q^shift * p
    LaurentPoly shifted(int shift) const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.exp += shift;
        return r;
    }

    /*
     * Exact quotient a/b. Both operands are shifted to ordinary polynomials,
     * divided by long division from the lowest exponent, and a nonzero
     * remainder throws NonExactDivision (silent truncation would mask a
     * broken identity upstream).
     */
    friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
        if (a.is_zero()) return LaurentPoly();
        const int shift = a.min_exp() - b.min_exp();
        std::vector<Rational> rem = a.dense();
        const std::vector<Rational> div = b.dense();
        if (rem.size() < div.size())
            throw NonExactDivision("exact_div: divisor degree exceeds dividend");
        std::vector<Rational> quot(rem.size() - div.size() + 1);
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (rem[i].is_zero()) continue;
            Rational c = rem[i] / div[0];
            for (std::size_t j = 0; j < div.size(); ++j) rem[i + j] -= c * div[j];
            quot[i] = std::move(c);
        }
        for (const auto& r : rem)
            if (!r.is_zero()) throw NonExactDivision("exact_div: nonzero remainder");
        return from_dense(std::move(quot), shift);
    }

    // Exact value at a rational point; q0 = 0 is rejected when negative
    // exponents are present.
    Rational eval(const Rational& q0) const {
        if (!terms_.empty() && min_exp() < 0 && q0.is_zero())
            throw ZeroAtNegativeExponent("eval: q=0 with negative exponent present");
        Rational acc(0);
        for (const auto& t : terms_) acc += t.coef * pow(q0, t.exp);
        return acc;
    }

    std::complex<double> eval(std::complex<double> q0) const {
        if (!terms_.empty() && min_exp() < 0 && q0 == std::complex<double>(0.0, 0.0))
            throw ZeroAtNegativeExponent("eval: q=0 with negative exponent present");
        std::complex<double> acc(0.0, 0.0);
        for (const auto& t : terms_) acc += t.coef.to_double() * cpow_int(q0, t.exp);
        return acc;
    }

    double eval(double q0) const { return eval(std::complex<double>(q0, 0.0)).real(); }

    // e.g. "1+2*q+2*q^2+q^3", "-2*q^-3-q^-2", "0"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& t = terms_[i];
            std::string c = t.coef.to_string();
            bool neg = !c.empty() && c[0] == '-';
            if (neg) c = c.substr(1);
            if (i != 0) out += neg ? "-" : "+";
            else if (neg) out += "-";
            if (t.exp == 0) {
                out += c;
            } else {
                if (c != "1") out += c + "*";
                out += t.exp == 1 ? "q" : "q^" + std::to_string(t.exp);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
        return os << p.to_string();
    }

private:
    std::vector<Term> terms_;

    void add_term(int exp, Rational coef) {
        if (coef.is_zero()) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int e) { return t.exp < e; });
        if (it != terms_.end() && it->exp == exp) {
            it->coef += coef;
            if (it->coef.is_zero()) terms_.erase(it);
        } else {
            terms_.insert(it, {exp, std::move(coef)});
        }
    }

    std::vector<Rational> dense() const {
        std::vector<Rational> d(static_cast<std::size_t>(max_exp() - min_exp()) + 1);
        for (const auto& t : terms_) d[static_cast<std::size_t>(t.exp - min_exp())] = t.coef;
        return d;
    }

    static LaurentPoly from_dense(std::vector<Rational> dense, int lo) {
        LaurentPoly p;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (!dense[i].is_zero())
                p.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
        return p;
    }

    static std::complex<double> cpow_int(std::complex<double> base, int e) {
        if (e < 0) return 1.0 / cpow_int(base, -e);
        std::complex<double> acc(1.0, 0.0), sq = base;
        unsigned u = static_cast<unsigned>(e);
        while (u != 0) {
            if (u & 1u) acc *= sq;
            u >>= 1u;
            if (u != 0) sq *= sq;
        }
        return acc;
    }
};

} // namespace qstirling

#endif // QSTIRLING_LAURENT_HPP
