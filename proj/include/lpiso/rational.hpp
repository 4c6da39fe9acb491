#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "lpiso/errors.hpp"

namespace lpiso {

using BigInt = boost::multiprecision::cpp_int;

// Canonical big rational: gcd(|num|, den) = 1, den > 0.  cpp_rational keeps
// exactly this invariant, so it is used directly as the scalar field.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline BigInt int_pow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rational rat_pow(const Rational& q, unsigned e) {
    return Rational(int_pow(num(q), e), int_pow(den(q), e));
}

// Smallest t with |q| <= 2^t, clamped to t >= 0.  Used for scalar moduli.
inline int ceil_log2_abs(const Rational& q) {
    Rational a = rat_abs(q);
    if (a <= 1) return 0;
    int t = 0;
    Rational bound = 2;
    while (bound < a) {
        bound *= 2;
        ++t;
    }
    return t + 1;
}

inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

// Accepts "a" or "a/b" with optional sign; b > 0 after reduction.
inline std::optional<Rational> parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Lp exponent: an exact rational p >= 1.
class Exponent {
public:
    explicit Exponent(Rational p) : p_(std::move(p)) {
        if (p_ < 1) raise(ErrorCode::BadInput, "exponent p must satisfy p >= 1");
    }

    const Rational& value() const { return p_; }
    bool is_integer() const { return den(p_) == 1; }

    // p = a/b in lowest terms, both positive.
    unsigned a() const { return static_cast<unsigned>(num(p_)); }
    unsigned b() const { return static_cast<unsigned>(den(p_)); }

    bool operator==(const Exponent& o) const { return p_ == o.p_; }

private:
    Rational p_;
};

} // namespace lpiso
