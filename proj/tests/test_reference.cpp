#include <doctest.h>

#include "psc/compose.hpp"
#include "psc/random.hpp"
#include "psc/reference.hpp"

using namespace psc;
using namespace psc::reference;

namespace {

const PrimeModulus kNtt;
const PrimeModulus kCrt(1000000007);

}  // namespace

TEST_CASE("compose_horner examples") {
    const UniPoly g = SplitMix64(1).poly(4, kNtt);
    CHECK(compose_horner(UniPoly({7}, kNtt), g, 3, kNtt) == UniPoly({7, 0, 0}, kNtt));
    CHECK(compose_horner(UniPoly({1, 2, 3}, kNtt), UniPoly({0, 1, 1}, kNtt), 4, kNtt) ==
          UniPoly({1, 2, 5, 6}, kNtt));
    // cross-check against an explicit schoolbook expansion of 1 + 2g + 3g^2
    const UniPoly gg({0, 1, 1}, kNtt);
    const UniPoly sq = poly_mul_schoolbook(gg, gg, kNtt);
    UniPoly expanded = UniPoly::zeros(4);
    for (std::size_t i = 0; i < 4; ++i) {
        FieldElem c = field_add(field_mul(FieldElem{2}, gg.coeff(i), kNtt),
                                field_mul(FieldElem{3}, sq.coeff(i), kNtt), kNtt);
        if (i == 0) c = field_add(c, FieldElem{1}, kNtt);
        expanded[i] = c;
    }
    CHECK(expanded == UniPoly({1, 2, 5, 6}, kNtt));
}

TEST_CASE("powproj_naive examples") {
    SplitMix64 rng(2);
    const LinearForm w(rng.poly(5, kNtt));
    CHECK(powproj_naive(w, rng.poly(5, kNtt), 5, 4, kNtt)[0] == w[0]);
    CHECK(powproj_naive(LinearForm(UniPoly({1, 1}, kNtt)), UniPoly({0, 2}, kNtt), 2, 3, kNtt) ==
          UniPoly({1, 2, 0}, kNtt));
    CHECK_THROWS_AS(powproj_naive(w, rng.poly(5, kNtt), 4, 4, kNtt), Error);
}

TEST_CASE("fast-multiplication baselines agree with the oracles") {
    SplitMix64 rng(3);
    for (const PrimeModulus* m : {&kNtt, &kCrt}) {
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = rng.uniform(1, 120), mm = rng.uniform(1, 60);
            const UniPoly f = rng.poly(mm, *m), g = rng.poly(rng.uniform(0, n), *m);
            const LinearForm w(rng.poly(n, *m));
            CHECK(compose_horner(f, g, n, *m, Multiplication::Fast) == compose_horner(f, g, n, *m));
            CHECK(powproj_naive(w, g, n, mm, *m, Multiplication::Fast) ==
                  powproj_naive(w, g, n, mm, *m));
        }
    }
}

TEST_CASE("oracles agree with the fast routines on 500 instances") {
    SplitMix64 rng(500);
    for (int t = 0; t < 500; ++t) {
        const PrimeModulus& m = t % 2 ? kCrt : kNtt;
        const std::size_t n = rng.uniform(1, 40), mm = rng.uniform(1, 40);
        const UniPoly f = rng.poly(mm, m), g = rng.poly(rng.uniform(0, n), m);
        const LinearForm w(rng.poly(n, m));
        CHECK(compose_horner(f, g, n, m) == compose_series(f, g, n, m));
        CHECK(powproj_naive(w, g, n, mm, m) == power_projection(w, g, n, mm, m));
    }
}

TEST_CASE("duality_check") {
    SplitMix64 rng(4);
    SUBCASE("zero f") {
        const std::size_t n = 9, m = 6;
        CHECK(duality_check(UniPoly::zeros(m), rng.poly(n, kNtt), LinearForm(rng.poly(n, kNtt)), n,
                            m, kNtt));
    }
    SUBCASE("all four pairings") {
        for (int t = 0; t < 40; ++t) {
            const PrimeModulus& mod = t % 2 ? kCrt : kNtt;
            const std::size_t n = rng.uniform(1, 40), m = rng.uniform(1, 40);
            const UniPoly f = rng.poly(rng.uniform(0, m), mod);
            const UniPoly g = rng.poly(rng.uniform(0, n), mod);
            const LinearForm w(rng.poly(n, mod));
            for (Route c : {Route::Fast, Route::Oracle}) {
                for (Route p : {Route::Fast, Route::Oracle}) {
                    CHECK(duality_check(f, g, w, n, m, mod, c, p));
                }
            }
        }
    }
    SUBCASE("corrupted projection is detected") {
        const std::size_t n = 12, m = 10;
        const UniPoly f = rng.poly(m, kNtt), g = rng.poly(n, kNtt);
        const LinearForm w(rng.poly(n, kNtt));
        const UniPoly composed = compose_series(f, g, n, kNtt);
        UniPoly projected = power_projection(w, g, n, m, kNtt);
        CHECK(duality_holds(f, w, composed, projected, kNtt));
        // f_3 != 0 with overwhelming probability; shift f_3's partner.
        REQUIRE(f[3].value != 0);
        projected[3] = field_add(projected[3], FieldElem{1}, kNtt);
        CHECK_FALSE(duality_holds(f, w, composed, projected, kNtt));
    }
}
