#ifndef QSTIRLING_BIGINT_HPP
#define QSTIRLING_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstirling {

/*
 * Arbitrary-precision signed integer, base 10^9, limbs little-endian.
 * Invariants: no trailing zero limbs; sign_ == 0 iff limbs_ is empty.
 */
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) { // NOLINT: implicit by design, mirrors int
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid overflow on LLONG_MIN
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            limbs_.push_back(static_cast<uint32_t>(m % kBase));
            m /= kBase;
        }
    }

    explicit BigInt(const std::string& s) {
        std::size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
        // parse 9-digit groups from the right
        for (std::size_t end = s.size(); end > i;) {
            std::size_t begin = end >= i + 9 ? end - 9 : i;
            limbs_.push_back(static_cast<uint32_t>(std::stoul(s.substr(begin, end - begin))));
            end = begin;
        }
        trim();
        if (!limbs_.empty()) sign_ = sign;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    int sgn() const { return sign_; }

    friend BigInt abs(BigInt a) {
        if (a.sign_ < 0) a.sign_ = 1;
        return a;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        if (a.sign_ >= 0) return cmp_mag(a.limbs_, b.limbs_);
        return cmp_mag(b.limbs_, a.limbs_);
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
            return r;
        }
        auto c = cmp_mag(a.limbs_, b.limbs_);
        if (c == std::strong_ordering::equal) return BigInt();
        if (c == std::strong_ordering::greater) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = mul_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // dividend's sign, |r| < |b|.
    friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) == std::strong_ordering::less) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.limbs_, b.limbs_, qm, rm);
        q.limbs_ = std::move(qm);
        q.trim();
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.limbs_ = std::move(rm);
        r.trim();
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.sign_ == 0 ? 0 : 1;
        b.sign_ = b.sign_ == 0 ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    friend BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt acc(1), sq = base;
        while (e != 0) {
            if (e & 1ULL) acc *= sq;
            e >>= 1ULL;
            if (e != 0) sq *= sq;
        }
        return acc;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string out = sign_ < 0 ? "-" : "";
        out += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

    double to_double() const {
        double m = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) m = m * kBase + limbs_[i];
        return sign_ < 0 ? -m : m;
    }

    // Exact conversion; throws if the value does not fit.
    long long to_long_long() const {
        const BigInt lo(std::numeric_limits<long long>::min());
        const BigInt hi(std::numeric_limits<long long>::max());
        if (*this < lo || *this > hi) throw std::overflow_error("BigInt: does not fit long long");
        long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
        return sign_ < 0 ? -v : v;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    static constexpr uint64_t kBase = 1000000000ULL; // 10^9

    int sign_ = 0;
    std::vector<uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    static std::strong_ordering cmp_mag(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                unsigned __int128 cur =
                    static_cast<unsigned __int128>(ai) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = static_cast<uint64_t>(cur / kBase);
            }
            std::size_t k = i + b.size();
            while (carry != 0) {
                uint64_t cur = r[k] + carry;
                r[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Schoolbook long division of magnitudes, |a| >= |b| > 0.
    static void divmod_mag(std::vector<uint32_t> a, std::vector<uint32_t> b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (b.size() == 1) {
            uint64_t d = b[0];
            q.assign(a.size(), 0);
            uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                uint64_t cur = rem * kBase + a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem != 0) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // normalize so the top divisor limb is >= base/2 (keeps the 2-limb
        // trial quotient within one of the truth)
        uint32_t d = static_cast<uint32_t>(kBase / (b.back() + 1ULL));
        if (d > 1) {
            a = mul_mag(a, {d});
            b = mul_mag(b, {d});
        }
        const std::size_t n = b.size(), m = a.size() - n;
        a.push_back(0);
        q.assign(m + 1, 0);
        const uint64_t btop = b[n - 1], bsec = b[n - 2];
        for (std::size_t j = m + 1; j-- > 0;) {
            unsigned __int128 top =
                (static_cast<unsigned __int128>(a[j + n]) * kBase + a[j + n - 1]);
            uint64_t qhat = static_cast<uint64_t>(top / btop);
            uint64_t rhat = static_cast<uint64_t>(top % btop);
            if (qhat >= kBase) {
                rhat += (qhat - (kBase - 1)) * btop;
                qhat = kBase - 1;
            }
            while (rhat < kBase &&
                   static_cast<unsigned __int128>(qhat) * bsec >
                       static_cast<unsigned __int128>(rhat) * kBase + a[j + n - 2]) {
                --qhat;
                rhat += btop;
            }
            // a[j .. j+n] -= qhat * b
            __int128 borrow = 0;
            for (std::size_t i = 0; i < n; ++i) {
                __int128 cur = static_cast<__int128>(a[j + i]) - borrow -
                               static_cast<__int128>(qhat) * b[i];
                __int128 limb = cur % static_cast<__int128>(kBase);
                borrow = -(cur / static_cast<__int128>(kBase));
                if (limb < 0) {
                    limb += static_cast<__int128>(kBase);
                    ++borrow;
                }
                a[j + i] = static_cast<uint32_t>(limb);
            }
            __int128 cur = static_cast<__int128>(a[j + n]) - borrow;
            if (cur < 0) { // qhat was one too large; add back
                --qhat;
                uint64_t carry = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(a[j + i]) + b[i] + carry;
                    a[j + i] = static_cast<uint32_t>(s % kBase);
                    carry = s / kBase;
                }
                cur += static_cast<__int128>(carry);
            }
            a[j + n] = static_cast<uint32_t>(cur);
            q[j] = static_cast<uint32_t>(qhat);
        }
        a.resize(n);
        if (d > 1) {
            // r = a / d, exact
            uint64_t rem = 0;
            r.assign(a.size(), 0);
            for (std::size_t i = a.size(); i-- > 0;) {
                uint64_t cur = rem * kBase + a[i];
                r[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
        } else {
            r = std::move(a);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

inline BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<long long>(i));
    return r;
}

// Classical binomial coefficient; 0 outside the triangle.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = r / BigInt(i); // always exact for ascending i
    }
    return r;
}

} // namespace qstirling

#endif // QSTIRLING_BIGINT_HPP
