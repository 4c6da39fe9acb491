#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpiso/interval.hpp"
#include "oracle.hpp"

using namespace lpiso;

namespace {

DyadicInterval di(long lo_num, long lo_den_pow, long hi_num, long hi_den_pow) {
    DyadicInterval r(Dyadic(BigInt(lo_num), -lo_den_pow), Dyadic(BigInt(hi_num), -hi_den_pow), 0);
    r.refresh_level();
    return r;
}

} // namespace

TEST_CASE("rational helpers") {
    Rational q(6, 4);
    CHECK(num(q) == 3);
    CHECK(den(q) == 2);
    CHECK(to_string(q) == "3/2");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK(parse_rational("3/2") == q);
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("x").has_value());
    CHECK(ceil_log2_abs(Rational(1)) == 0);
    CHECK(ceil_log2_abs(Rational(3)) == 2);
    CHECK(ceil_log2_abs(Rational(-8)) == 3);
    CHECK(ceil_log2_abs(Rational(1, 100)) == 0);
}

TEST_CASE("exponent validation") {
    CHECK_THROWS_AS(Exponent(Rational(1, 2)), Error);
    Exponent p(Rational(3, 2));
    CHECK(p.a() == 3);
    CHECK(p.b() == 2);
    CHECK(!p.is_integer());
    CHECK(Exponent(Rational(2)).is_integer());
}

TEST_CASE("dyadic arithmetic and rounding") {
    Dyadic a(BigInt(3), -2);   // 0.75
    Dyadic b(BigInt(1), -1);   // 0.5
    CHECK((a + b).to_rational() == Rational(5, 4));
    CHECK((a - b).to_rational() == Rational(1, 4));
    CHECK((a * b).to_rational() == Rational(3, 8));
    CHECK(a > b);
    CHECK(Dyadic::from_rational_exact(Rational(7, 8)).to_rational() == Rational(7, 8));
    CHECK_THROWS_AS(Dyadic::from_rational_exact(Rational(1, 3)), Error);

    CHECK(Dyadic::floor_at(Rational(1, 3), 2).to_rational() == Rational(1, 4));
    CHECK(Dyadic::ceil_at(Rational(1, 3), 2).to_rational() == Rational(2, 4));
    CHECK(Dyadic::floor_at(Rational(-1, 3), 2).to_rational() == Rational(-2, 4));
    CHECK(Dyadic::ceil_at(Rational(-1, 3), 2).to_rational() == Rational(-1, 4));
    CHECK(Dyadic(BigInt(-5), -3).round_down(2).to_rational() == Rational(-3, 4));
    CHECK(Dyadic(BigInt(5), -3).round_up(2).to_rational() == Rational(3, 4));
    CHECK(Dyadic(BigInt(-5), -3).round_down(1).to_rational() == Rational(-1));
    CHECK(Dyadic(BigInt(5), -3).round_up(1).to_rational() == Rational(1));

    CHECK(Dyadic(BigInt(3), -2).to_decimal_string() == "0.75");
    CHECK(Dyadic(BigInt(-1), -3).to_decimal_string() == "-0.125");
    CHECK(Dyadic(BigInt(4), 0).to_decimal_string() == "4");
}

TEST_CASE("interval add/sub/mul enclose endpoint arithmetic") {
    // [1,1] + [2,2] = [3,3]
    auto s = interval_add(DyadicInterval::point(1), DyadicInterval::point(2));
    CHECK(s.is_point());
    CHECK(s.lo().to_rational() == 3);

    // [0,0] * [a,b] = [0,0]
    auto z = interval_mul(DyadicInterval::point(0), di(-7, 1, 5, 2));
    CHECK(z.is_point());
    CHECK(z.lo().to_rational() == 0);

    // [1.0,1.5] - [0.25,0.5] encloses [0.5,1.25]
    auto d = interval_sub(di(1, 0, 3, 1), di(1, 2, 1, 1));
    CHECK(d.lo().to_rational() == Rational(1, 2));
    CHECK(d.hi().to_rational() == Rational(5, 4));
}

TEST_CASE("interval arithmetic soundness on random rationals") {
    oracle::Rng rng(0x5eed0001);
    for (int it = 0; it < 2000; ++it) {
        Rational a = rng.rational(50, 16), b = rng.rational(50, 16);
        Rational a2 = a + rng.nonneg_rational(2, 8);
        Rational b2 = b + rng.nonneg_rational(2, 8);
        DyadicInterval ia(Dyadic::floor_at(a, 10), Dyadic::ceil_at(a2, 10), 0);
        DyadicInterval ib(Dyadic::floor_at(b, 10), Dyadic::ceil_at(b2, 10), 0);
        // True values inside.
        CHECK(interval_add(ia, ib).contains(a + b));
        CHECK(interval_sub(ia, ib).contains(a - b2));
        CHECK(interval_mul(ia, ib).contains(a2 * b));
    }
}

TEST_CASE("pow_rational basics") {
    Exponent p3(Rational(3));
    auto r = pow_rational(DyadicInterval::point(2), p3, 10);
    CHECK(r.is_point());
    CHECK(r.lo().to_rational() == 8);

    Exponent phalf3(Rational(3, 2));
    auto one = pow_rational(DyadicInterval::point(1), phalf3, 10);
    CHECK(one.is_point());
    CHECK(one.lo().to_rational() == 1);

    CHECK_THROWS_AS(pow_rational(di(-1, 0, 1, 0), p3, 5), Error);
}

TEST_CASE("pow_rational hits bisection oracle at depth") {
    // (1/2)^(1/3): spec value ~ 0.793700..., enclosure width <= 2^-20.
    auto r = pow_of_rational(Rational(1, 2), 1, 3, 20);
    auto [olo, ohi] = oracle::root_enclosure(Rational(1, 2), 3);
    CHECK(r.width_at_most(20));
    CHECK(r.hi().to_rational() >= olo);
    CHECK(r.lo().to_rational() <= ohi);
}

TEST_CASE("root_p basics") {
    Exponent p2(Rational(2));
    auto r = root_p(DyadicInterval::point(25), p2, 20);
    CHECK(r.is_point());  // perfect square detected
    CHECK(r.lo().to_rational() == 5);

    auto z = root_p(DyadicInterval::point(0), p2, 20);
    CHECK(z.is_point());
    CHECK(z.lo().to_rational() == 0);

    Exponent p3(Rational(3));
    auto c = root_p(DyadicInterval::point(2), p3, 20);
    auto [olo, ohi] = oracle::root_enclosure(Rational(2), 3);
    CHECK(c.width_at_most(20));
    CHECK(c.hi().to_rational() >= olo);
    CHECK(c.lo().to_rational() <= ohi);
}

TEST_CASE("soundness: oracle value inside every enclosure") {
    oracle::Rng rng(0x5eed0002);
    const Exponent exps[] = {Exponent(Rational(1)), Exponent(Rational(3, 2)), Exponent(Rational(3)),
                             Exponent(Rational(2)), Exponent(Rational(5, 3))};
    for (int it = 0; it < 10000; ++it) {
        Rational x = rng.nonneg_rational(40, 12);
        const Exponent& p = exps[it % 5];
        auto r = pow_of_rational(x, p.a(), p.b(), 30);
        auto [olo, ohi] = oracle::pow_enclosure(x, p.a(), p.b());
        // Both enclose the same real, so they must intersect.
        CHECK(r.hi().to_rational() >= olo);
        CHECK(r.lo().to_rational() <= ohi);
        CHECK(r.width_at_most(30));
    }
}

TEST_CASE("precision contract and monotonicity of pow/root") {
    oracle::Rng rng(0x5eed0003);
    Exponent p(Rational(3, 2));
    for (int it = 0; it < 500; ++it) {
        Rational a = rng.nonneg_rational(20, 10);
        Rational w = rng.nonneg_rational(3, 6);
        DyadicInterval x(Dyadic::floor_at(a, 8), Dyadic::ceil_at(a + w, 8), 0);
        DyadicInterval y(Dyadic::floor_at(a, 4), Dyadic::ceil_at(a + w, 2), 0);  // y contains x
        REQUIRE(y.contains(x));
        CHECK(pow_rational(y, p, 16).contains(pow_rational(x, p, 16)));
        CHECK(root_p(y, p, 16).contains(root_p(x, p, 16)));
        // Point precision contract.
        auto pt = pow_rational(DyadicInterval::point(Dyadic::floor_at(a, 8)), p, 16);
        CHECK(pt.width_at_most(16));
    }
}

TEST_CASE("root_p inverts pow_rational up to enclosure") {
    oracle::Rng rng(0x5eed0004);
    Exponent p(Rational(5, 2));
    for (int it = 0; it < 200; ++it) {
        Dyadic v = Dyadic::floor_at(rng.nonneg_rational(9, 7), 6);
        DyadicInterval x = DyadicInterval::point(v);
        auto back = root_p(pow_rational(x, p, 40), p, 40);
        CHECK(back.contains(v.to_rational()));
    }
}

TEST_CASE("interval rendering") {
    auto r = di(1, 1, 3, 2);
    CHECK(r.to_string() == "0.5..0.75 (width<=2^-2)");
    CHECK(DyadicInterval::point(4).to_string() == "4..4 (exact)");
}
