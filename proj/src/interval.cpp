#include "lpiso/interval.hpp"

#include <algorithm>

namespace lpiso {

bool DyadicInterval::width_at_most(std::int64_t k) const {
    Dyadic w = width();
    if (w.is_zero()) return true;
    // w = m * 2^e with m odd; w <= 2^-k  <=>  e + bits(m) <= -k, or w == 2^-k.
    std::int64_t bits = static_cast<std::int64_t>(boost::multiprecision::msb(w.mant())) + 1;
    if (w.mant() == 1) return w.exp() <= -k;
    return w.exp() + bits <= -k;
}

void DyadicInterval::refresh_level() {
    Dyadic w = width();
    if (w.is_zero()) {
        level_ = kLevelCap;
        return;
    }
    // Largest k >= 0 with w <= 2^-k.
    std::int64_t bits = static_cast<std::int64_t>(boost::multiprecision::msb(w.mant())) + 1;
    std::int64_t k = w.mant() == 1 ? -w.exp() : -(w.exp() + bits);
    k = std::clamp<std::int64_t>(k, 0, kLevelCap);
    level_ = static_cast<int>(k);
}

std::string DyadicInterval::to_string() const {
    std::string w = is_point() ? "exact" : "width<=2^-" + std::to_string(level_);
    return lo_.to_decimal_string() + ".." + hi_.to_decimal_string() + " (" + w + ")";
}

DyadicInterval interval_add(const DyadicInterval& a, const DyadicInterval& b) {
    DyadicInterval r(a.lo() + b.lo(), a.hi() + b.hi(), 0);
    r.refresh_level();
    return r;
}

DyadicInterval interval_sub(const DyadicInterval& a, const DyadicInterval& b) {
    DyadicInterval r(a.lo() - b.hi(), a.hi() - b.lo(), 0);
    r.refresh_level();
    return r;
}

DyadicInterval interval_mul(const DyadicInterval& a, const DyadicInterval& b) {
    Dyadic c[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    Dyadic lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    DyadicInterval r(lo, hi, 0);
    r.refresh_level();
    return r;
}

DyadicInterval interval_neg(const DyadicInterval& a) {
    DyadicInterval r(-a.hi(), -a.lo(), a.level());
    return r;
}

DyadicInterval interval_abs(const DyadicInterval& a) {
    if (a.lo().sign() >= 0) return a;
    if (a.hi().sign() <= 0) return interval_neg(a);
    Dyadic hi = std::max(a.lo().abs(), a.hi().abs());
    DyadicInterval r(Dyadic::zero(), hi, 0);
    r.refresh_level();
    return r;
}

DyadicInterval interval_scale(const DyadicInterval& a, const Dyadic& c) {
    if (c.sign() >= 0) {
        DyadicInterval r(a.lo() * c, a.hi() * c, 0);
        r.refresh_level();
        return r;
    }
    DyadicInterval r(a.hi() * c, a.lo() * c, 0);
    r.refresh_level();
    return r;
}

namespace {

// Largest m >= 0 with m^b * V <= U * 2^(scale*b), for U, V > 0.
BigInt largest_scaled_root(const BigInt& U, const BigInt& V, unsigned b, std::int64_t scale) {
    BigInt target_num = U << static_cast<unsigned>(std::max<std::int64_t>(0, scale * b));
    BigInt target_den = V;
    if (scale < 0) target_den <<= static_cast<unsigned>(-scale * b);
    // target = target_num / target_den; find largest m with m^b <= target.
    BigInt hi = 1;
    while (int_pow(hi, b) * target_den <= target_num) hi <<= 1;
    BigInt lo = hi >> 1;  // lo^b <= target < hi^b
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (int_pow(mid, b) * target_den <= target_num) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

} // namespace

DyadicInterval root_of_rational(const Rational& q, unsigned b, std::int64_t scale) {
    if (q < 0) raise(ErrorCode::NegativeBase, "root of negative value");
    if (q == 0) return DyadicInterval::point(Dyadic::zero());
    if (b == 1) return DyadicInterval::enclose(q, scale);
    BigInt m = largest_scaled_root(num(q), den(q), b, scale);
    Dyadic lo(m, -scale);
    if (rat_pow(lo.to_rational(), b) == q) return DyadicInterval::point(lo);
    DyadicInterval r(lo, Dyadic(m + 1, -scale), 0);
    r.refresh_level();
    return r;
}

DyadicInterval pow_of_rational(const Rational& q, unsigned a, unsigned b, std::int64_t scale) {
    if (q < 0) raise(ErrorCode::NegativeBase, "power of negative base");
    Rational t = rat_pow(q, a);
    if (b == 1) return DyadicInterval::enclose(t, scale);
    return root_of_rational(t, b, scale);
}

DyadicInterval pow_rational(const DyadicInterval& x, const Exponent& p, std::int64_t k) {
    if (x.lo().sign() < 0) raise(ErrorCode::NegativeBase, "pow_rational requires lo >= 0");
    // x^p is monotone nondecreasing on [0, inf) for p >= 1, so endpoints map.
    DyadicInterval lo = pow_of_rational(x.lo().to_rational(), p.a(), p.b(), k);
    DyadicInterval hi = pow_of_rational(x.hi().to_rational(), p.a(), p.b(), k);
    DyadicInterval r(lo.lo(), hi.hi(), 0);
    r.refresh_level();
    return r;
}

DyadicInterval root_p(const DyadicInterval& x, const Exponent& p, std::int64_t k) {
    if (x.lo().sign() < 0) raise(ErrorCode::NegativeBase, "root_p requires lo >= 0");
    // x^(1/p) = x^(b/a) for p = a/b.
    DyadicInterval lo = pow_of_rational(x.lo().to_rational(), p.b(), p.a(), k);
    DyadicInterval hi = pow_of_rational(x.hi().to_rational(), p.b(), p.a(), k);
    DyadicInterval r(lo.lo(), hi.hi(), 0);
    r.refresh_level();
    return r;
}

} // namespace lpiso
