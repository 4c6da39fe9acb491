#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "lpiso/rational.hpp"

namespace lpiso {

// Dyadic rational mant * 2^exp with mant odd or zero (canonical form).
// Closed under +, -, *; cheap outward rounding to any bit level.
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(BigInt mant, std::int64_t exp) : mant_(std::move(mant)), exp_(exp) { normalize(); }
    explicit Dyadic(long v) : mant_(v), exp_(0) { normalize(); }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1); }

    const BigInt& mant() const { return mant_; }
    std::int64_t exp() const { return exp_; }
    bool is_zero() const { return mant_ == 0; }
    int sign() const { return mant_ == 0 ? 0 : (mant_ < 0 ? -1 : 1); }

    Rational to_rational() const {
        if (exp_ >= 0) return Rational(mant_ << exp_);
        return Rational(mant_, BigInt(1) << (-exp_));
    }

    // q has a power-of-two denominator iff it is dyadic.
    static bool is_dyadic(const Rational& q) {
        BigInt d = den(q);
        return (d & (d - 1)) == 0;
    }

    static Dyadic from_rational_exact(const Rational& q) {
        BigInt d = den(q);
        if ((d & (d - 1)) != 0) raise(ErrorCode::BadInput, "rational is not dyadic: " + lpiso::to_string(q));
        std::int64_t e = d == 1 ? 0 : static_cast<std::int64_t>(boost::multiprecision::msb(d));
        return Dyadic(num(q), -e);
    }

    // Largest multiple of 2^-level that is <= q.
    static Dyadic floor_at(const Rational& q, std::int64_t level) {
        BigInt scaled_num = num(q) << (level >= 0 ? level : 0);
        BigInt scaled_den = den(q) << (level < 0 ? -level : 0);
        BigInt m = floor_div(scaled_num, scaled_den);
        return Dyadic(m, -level);
    }

    static Dyadic ceil_at(const Rational& q, std::int64_t level) {
        Dyadic f = floor_at(q, level);
        if (f.to_rational() == q) return f;
        return f + Dyadic(BigInt(1), -level);
    }

    Dyadic operator-() const { return Dyadic(-mant_, exp_); }

    Dyadic operator+(const Dyadic& o) const {
        if (mant_ == 0) return o;
        if (o.mant_ == 0) return *this;
        std::int64_t e = exp_ < o.exp_ ? exp_ : o.exp_;
        return Dyadic((mant_ << (exp_ - e)) + (o.mant_ << (o.exp_ - e)), e);
    }

    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }

    Dyadic operator*(const Dyadic& o) const { return Dyadic(mant_ * o.mant_, exp_ + o.exp_); }

    std::strong_ordering operator<=>(const Dyadic& o) const {
        Dyadic d = *this - o;
        if (d.mant_ == 0) return std::strong_ordering::equal;
        return d.mant_ < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    bool operator==(const Dyadic& o) const { return mant_ == o.mant_ && exp_ == o.exp_; }

    Dyadic abs() const { return mant_ < 0 ? -*this : *this; }

    // Round down/up to a multiple of 2^-level.
    Dyadic round_down(std::int64_t level) const {
        if (exp_ >= -level) return *this;
        std::int64_t shift = -level - exp_;
        return Dyadic(shift_floor(mant_, shift), -level);
    }
    Dyadic round_up(std::int64_t level) const {
        if (exp_ >= -level) return *this;
        std::int64_t shift = -level - exp_;
        return Dyadic(-shift_floor(-mant_, shift), -level);
    }

    // Exact finite decimal rendering (denominator is a power of two).
    std::string to_decimal_string() const {
        if (exp_ >= 0) return BigInt(mant_ << exp_).str();
        BigInt scaled = mant_ * int_pow(BigInt(5), static_cast<unsigned>(-exp_));
        std::string digits = (scaled < 0 ? BigInt(-scaled) : scaled).str();
        std::size_t frac = static_cast<std::size_t>(-exp_);
        if (digits.size() <= frac) digits.insert(0, frac - digits.size() + 1, '0');
        digits.insert(digits.size() - frac, ".");
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
        return (mant_ < 0 ? "-" : "") + digits;
    }

    std::string to_string() const {
        if (exp_ >= 0) return BigInt(mant_ << exp_).str();
        return mant_.str() + "*2^" + std::to_string(exp_);
    }

private:
    static BigInt floor_div(const BigInt& a, const BigInt& b) {
        BigInt q = a / b;
        if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
        return q;
    }

    static BigInt shift_floor(const BigInt& m, std::int64_t shift) {
        if (m >= 0) return m >> shift;
        return -(((-m) + (BigInt(1) << shift) - 1) >> shift);
    }

    void normalize() {
        if (mant_ == 0) {
            exp_ = 0;
            return;
        }
        std::int64_t tz = static_cast<std::int64_t>(boost::multiprecision::lsb(mant_ < 0 ? BigInt(-mant_) : mant_));
        if (tz > 0) {
            mant_ >>= tz;
            exp_ += tz;
        }
    }

    BigInt mant_;
    std::int64_t exp_;
};

inline Rational operator*(const Rational& q, const Dyadic& d) { return q * d.to_rational(); }

} // namespace lpiso
