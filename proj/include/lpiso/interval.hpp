#pragma once

#include <cstdint>
#include <string>

#include "lpiso/dyadic.hpp"
#include "lpiso/rational.hpp"

namespace lpiso {

// Certified enclosure of a real with dyadic endpoints.  `level` records the
// producer's precision target k (width <= 2^-k); derived arithmetic recomputes
// it from the actual width, so the claim is always sound.
class DyadicInterval {
public:
    DyadicInterval() : lo_(), hi_(), level_(kLevelCap) {}

    DyadicInterval(Dyadic lo, Dyadic hi, int level)
        : lo_(std::move(lo)), hi_(std::move(hi)), level_(level) {
        if (lo_ > hi_) raise(ErrorCode::BadInput, "interval endpoints out of order");
    }

    static constexpr int kLevelCap = 1 << 24;

    static DyadicInterval point(const Dyadic& v) { return DyadicInterval(v, v, kLevelCap); }
    static DyadicInterval point(long v) { return point(Dyadic(v)); }

    // Outward enclosure of an arbitrary rational at level k.
    static DyadicInterval enclose(const Rational& q, std::int64_t k) {
        if (Dyadic::is_dyadic(q)) return point(Dyadic::from_rational_exact(q));
        DyadicInterval r(Dyadic::floor_at(q, k), Dyadic::ceil_at(q, k), 0);
        r.refresh_level();
        return r;
    }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    int level() const { return level_; }

    Dyadic width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }

    Rational midpoint() const { return (lo_.to_rational() + hi_.to_rational()) / 2; }

    bool contains(const Rational& q) const {
        return lo_.to_rational() <= q && q <= hi_.to_rational();
    }
    bool contains(const DyadicInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const DyadicInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    // Certified comparisons against a bound.
    bool certainly_le(const Rational& bound) const { return hi_.to_rational() <= bound; }
    bool certainly_lt(const Rational& bound) const { return hi_.to_rational() < bound; }
    bool certainly_ge(const Rational& bound) const { return lo_.to_rational() >= bound; }
    bool certainly_gt(const Rational& bound) const { return lo_.to_rational() > bound; }

    bool width_at_most(std::int64_t k) const;

    void set_level(int level) { level_ = level; }
    void refresh_level();

    std::string to_string() const;

    bool operator==(const DyadicInterval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    Dyadic lo_;
    Dyadic hi_;
    int level_;
};

DyadicInterval interval_add(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval interval_sub(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval interval_mul(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval interval_neg(const DyadicInterval& a);
DyadicInterval interval_abs(const DyadicInterval& a);
DyadicInterval interval_scale(const DyadicInterval& a, const Dyadic& c);

// Enclosure of q^(1/b) of width <= 2^-scale, for q >= 0 and b >= 1.
// Exact roots come back as point intervals.
DyadicInterval root_of_rational(const Rational& q, unsigned b, std::int64_t scale);

// Enclosure of q^(a/b) of width <= 2^-scale, q >= 0.
DyadicInterval pow_of_rational(const Rational& q, unsigned a, unsigned b, std::int64_t scale);

// Interval extensions of x^p and x^(1/p) on [0, infinity), p rational >= 1.
// Point inputs give width <= 2^-k; both are monotone interval extensions.
DyadicInterval pow_rational(const DyadicInterval& x, const Exponent& p, std::int64_t k);
DyadicInterval root_p(const DyadicInterval& x, const Exponent& p, std::int64_t k);

} // namespace lpiso
