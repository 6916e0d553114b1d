#include <doctest.h>

#include "f4ms/errors.hpp"
#include "f4ms/f4_space.hpp"
#include "f4ms/hahn.hpp"
#include "f4ms/rng.hpp"

using namespace f4ms;

namespace {
HahnSeries random_series(Rng& rng, int support, int range) {
    std::vector<SqrtTwoExp> es;
    for (int i = 0; i < support; ++i)
        es.push_back({static_cast<std::int64_t>(rng.below(2 * range + 1)) - range,
                      static_cast<std::int64_t>(rng.below(2 * range + 1)) - range});
    return HahnSeries(std::move(es));
}
} // namespace

TEST_CASE("exponent order is a total order matching the real value") {
    for (std::int64_t a1 = -10; a1 <= 10; ++a1)
        for (std::int64_t b1 = -10; b1 <= 10; ++b1) {
            SqrtTwoExp x{a1, b1}, y{-b1, a1 / 2};
            long double vx = a1 + b1 * 1.41421356237309504880L;
            long double vy = -b1 + (a1 / 2) * 1.41421356237309504880L;
            int trich = (x < y) + (y < x) + (x == y);
            CHECK(trich == 1);
            if (x < y) CHECK(vx < vy);
            if (y < x) CHECK(vy < vx);
        }
}

TEST_CASE("products add exponents") {
    HahnSeries x = HahnSeries::term({1, 0});
    HahnSeries y = HahnSeries::term({0, 1});
    CHECK(x * y == HahnSeries::term({1, 1}));
    CHECK((x * HahnSeries{}).is_zero());
}

TEST_CASE("squares kill cross terms") {
    HahnSeries s = HahnSeries::term({1, 0}) + HahnSeries::term({0, 1}); // t + t^sqrt2
    HahnSeries sq = s * s;
    CHECK(sq == HahnSeries::term({2, 0}) + HahnSeries::term({0, 2}));
}

TEST_CASE("theta rescales exponents by sqrt(2)") {
    CHECK(hahn_theta(HahnSeries::term({1, 0})) == HahnSeries::term({0, 1}));
    CHECK(hahn_theta(HahnSeries::term({0, 1})) == HahnSeries::term({2, 0}));
    Rng rng(137);
    for (int i = 0; i < 20; ++i) {
        HahnSeries x = random_series(rng, 6, 5);
        CHECK(hahn_theta(hahn_theta(x)) == x * x);
    }
    for (int i = 0; i < 50; ++i) {
        HahnSeries x = random_series(rng, 5, 4), y = random_series(rng, 5, 4);
        CHECK(hahn_theta(x + y) == hahn_theta(x) + hahn_theta(y));
        CHECK(hahn_theta(x * y) == hahn_theta(x) * hahn_theta(y));
    }
}

TEST_CASE("polynomial embedding is a ring homomorphism") {
    CHECK(embed_poly(Gf2Poly::var_b()) == HahnSeries::term({1, 0}));
    CHECK(embed_poly(Gf2Poly::var_a()) == HahnSeries::term({0, 1}));
    Rng rng(139);
    for (int i = 0; i < 30; ++i) {
        Gf2Poly p = sample_poly(rng, 4).num(), q = sample_poly(rng, 4).num();
        CHECK(embed_poly(p * q) == embed_poly(p) * embed_poly(q));
        CHECK(embed_poly(p + q) == embed_poly(p) + embed_poly(q));
    }
    // the embedding intertwines the two theta actions
    TitsEndo th = TitsEndo::standard();
    for (int i = 0; i < 30; ++i) {
        Gf2Poly p = sample_poly(rng, 3).num();
        CHECK(embed_poly(th(RatFn(p)).num()) == hahn_theta(embed_poly(p)));
    }
}

TEST_CASE("constant-coefficient obstruction") {
    CHECK(trace_obstruction(HahnSeries{}) == TraceObstruction::Inconclusive);
    CHECK(trace_obstruction(HahnSeries::term({1, 0})) == TraceObstruction::Inconclusive);

    // 1 + t^sqrt2 u^2 always has constant coefficient 1: sqrt2 + 2g never
    // vanishes, so the obstruction certifies non-traceness
    Rng rng(149);
    HahnSeries tsqrt2 = HahnSeries::term({0, 1});
    for (int i = 0; i < 50; ++i) {
        HahnSeries u = random_series(rng, 8, 6);
        HahnSeries x = HahnSeries::term({0, 0}) + tsqrt2 * u * u;
        CHECK(trace_obstruction(x) == TraceObstruction::NotATrace);
    }

    // sanity: v + v^theta really has constant coefficient 0
    for (int i = 0; i < 50; ++i) {
        HahnSeries v = random_series(rng, 8, 6);
        CHECK_FALSE((v + hahn_theta(v)).constant_coeff());
    }
}

TEST_CASE("support cap") {
    std::size_t old = hahn_support_cap();
    set_hahn_support_cap(4);
    Rng rng(151);
    HahnSeries big = random_series(rng, 10, 40);
    CHECK_THROWS_AS(big * big, SupportOverflow);
    set_hahn_support_cap(old);
}
