#include <doctest.h>

#include "f4ms/errors.hpp"
#include "f4ms/f4_space.hpp"
#include "f4ms/rng.hpp"

using namespace f4ms;

namespace {
const TriplePtr& tri() {
    static TriplePtr t = tru7_triple();
    return t;
}
VElem radical_elem(const RatFn& t) {
    return {tri(), ExtElem::zero(tri()->ext), ExtElem::zero(tri()->ext), t};
}
} // namespace

TEST_CASE("alpha is the twisted inverse of beta") {
    CHECK(tri()->alpha == RatFn::parse("1/a"));
    CHECK(tri()->alpha * tri()->theta_k(tri()->beta) == RatFn::one());
    CHECK(is_in_subfield_f(tri()->alpha));
}

TEST_CASE("q on the radical and the basis vectors") {
    CHECK(q_eval(radical_elem(RatFn::parse("a*b+1"))) == tri()->theta_k(RatFn::parse("a*b+1")));
    auto basis = v_basis(tri());
    CHECK(q_eval(basis[0]) == RatFn::parse("1/b"));              // (1,0,0)
    CHECK(q_eval(basis[2]) == RatFn::parse("1/b") * tri()->alpha); // (0,1,0)
}

TEST_CASE("f has the [K] slot in its radical and is alternating") {
    Rng rng(191);
    for (int i = 0; i < 50; ++i) {
        VElem x = sample_v(tri(), rng, 3);
        CHECK(f_eval(x, radical_elem(sample_ratfn(rng, 3, 1))).is_zero());
        CHECK(f_eval(x, x).is_zero());
        VElem y = sample_v(tri(), rng, 3);
        CHECK(f_eval(x, y) == f_eval(y, x));
    }
    auto basis = v_basis(tri());
    CHECK(f_eval(basis[0], basis[1]) == RatFn::parse("1/b")); // f((1,0,0),(g,0,0)) = b^-1
}

TEST_CASE("polarization q(x+y) = q(x)+q(y)+f(x,y)") {
    Rng rng(193);
    for (int i = 0; i < 100; ++i) {
        VElem x = sample_v(tri(), rng, 3), y = sample_v(tri(), rng, 3);
        CHECK(q_eval(x + y) == q_eval(x) + q_eval(y) + f_eval(x, y));
    }
}

TEST_CASE("scalar action twists the [K] slot") {
    RatFn c = RatFn::parse("a+b");
    VElem x = scalar_mul(c, radical_elem(RatFn::one()));
    CHECK(x.t() == tri()->theta_k(c));
    Rng rng(197);
    for (int i = 0; i < 50; ++i) {
        VElem y = sample_v(tri(), rng, 2);
        RatFn d = sample_ratfn(rng, 2, 1);
        CHECK(scalar_mul(RatFn::one(), y) == y);
        CHECK(q_eval(scalar_mul(d, y)) == d.square() * q_eval(y));
        // the radical map respects the twist: t g(u,v) = g(t^th u, v)
        VElem z = sample_v(tri(), rng, 2);
        CHECK(scalar_mul(d, g_map(y, z)) == g_map(scalar_mul(tri()->theta_k(d), y), z));
    }
}

TEST_CASE("coordinates round-trip through the fixed basis") {
    Rng rng(199);
    for (int i = 0; i < 50; ++i) {
        VElem x = sample_v(tri(), rng, 3);
        auto c = v_coordinates(x);
        CHECK(v_from_coordinates(tri(), c) == x);
    }
}

TEST_CASE("linear solver") {
    auto basis = v_basis(tri());
    SUBCASE("single condition has a verifying solution") {
        VElem d = basis[0];
        VElem e = solve_f_conditions(tri(), {{d, RatFn::one()}});
        CHECK(f_eval(d, e) == RatFn::one());
    }
    SUBCASE("radical direction is unsolvable") {
        CHECK_THROWS_AS(solve_f_conditions(tri(), {{radical_elem(RatFn::one()), RatFn::one()}}),
                        Unsolvable);
    }
    SUBCASE("empty constraints give the zero vector") {
        CHECK(solve_f_conditions(tri(), {}).is_zero());
    }
    SUBCASE("contradictory constraints are inconsistent") {
        VElem d = basis[0];
        CHECK_THROWS_AS(
            solve_f_conditions(tri(), {{d, RatFn::one()}, {d, RatFn::zero()}}),
            InconsistentSystem);
    }
    SUBCASE("random two-condition systems verify") {
        Rng rng(211);
        for (int i = 0; i < 25; ++i) {
            VElem c1 = sample_nonzero_v(tri(), rng, 2);
            while (c1.in_radical()) c1 = sample_nonzero_v(tri(), rng, 2);
            RatFn r1 = sample_ratfn(rng, 2, 1);
            VElem e = solve_f_conditions(tri(), {{c1, r1}});
            CHECK(f_eval(c1, e) == r1);
        }
    }
}

TEST_CASE("anisotropy holds on samples for the builtin instance") {
    Rng rng(223);
    AnisotropyReport rep = anisotropy_sample(tri(), 200, rng, 3);
    CHECK(rep.ok());
    CHECK(rep.nonzero_values == rep.trials);
}

TEST_CASE("a broken triple is caught via a constructed isotropic vector") {
    // beta := a makes q((1,0,b^-1)) = a^-1 + theta(b^-1) = a^-1 + a^-1 = 0
    TriplePtr broken = make_polar_triple(tri()->ext, 1, RatFn::var_a());
    VElem witness = VElem::from_k_coords(broken, RatFn::one(), RatFn::zero(), RatFn::zero(),
                                         RatFn::zero(), RatFn::parse("1/b"));
    CHECK(q_eval(witness).is_zero());
    Rng rng(227);
    AnisotropyReport rep = anisotropy_sample(broken, 10, rng, 2, {witness});
    CHECK_FALSE(rep.ok());
    CHECK(rep.isotropic_witnesses.size() >= 1);
}

TEST_CASE("zero-trial anisotropy run is a vacuous pass") {
    Rng rng(229);
    CHECK(anisotropy_sample(tri(), 0, rng, 2).ok());
}
