#include <doctest.h>

#include "psc/bipoly.hpp"
#include "psc/random.hpp"

using namespace psc;

namespace {

const PrimeModulus kNtt;
const PrimeModulus kCrt(1000000007);

BiPoly random_bipoly(SplitMix64& rng, std::size_t nx, std::size_t ny, const PrimeModulus& m) {
    BiPoly a(nx, ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) a(i, j) = rng.element(m);
    return a;
}

// 1 + c x y
BiPoly one_plus_cxy(u64 c) {
    BiPoly a(2, 2);
    a(0, 0) = FieldElem{1};
    a(1, 1) = FieldElem{c};
    return a;
}

}  // namespace

TEST_CASE("BiPoly shape") {
    CHECK_THROWS_AS(BiPoly(0, 3), Error);
    const BiPoly a(3, 4);
    CHECK(a.shape_bidegree() == Bidegree{2, 3});
    CHECK(a.scanned_bidegree() == Bidegree{});
    CHECK(a.is_zero());
    BiPoly b(3, 4);
    b(1, 2) = FieldElem{5};
    CHECK(b.scanned_bidegree() == Bidegree{1, 2});
    CHECK(b.resized(2, 3)(1, 2) == FieldElem{5});
    CHECK(b.resized(1, 3).is_zero());
}

TEST_CASE("bipoly_mul examples") {
    const BiPoly prod = bipoly_mul(one_plus_cxy(1), one_plus_cxy(kNtt.value() - 1), kNtt);
    BiPoly expected(3, 3);
    expected(0, 0) = FieldElem{1};
    expected(2, 2) = FieldElem{kNtt.value() - 1};
    CHECK(prod == expected);
    CHECK(bipoly_mul_schoolbook(one_plus_cxy(1), one_plus_cxy(kNtt.value() - 1), kNtt) == expected);

    SplitMix64 rng(2);
    const BiPoly a = random_bipoly(rng, 5, 7, kNtt);
    BiPoly one(1, 1);
    one(0, 0) = FieldElem{1};
    CHECK(bipoly_mul(a, one, kNtt) == a);
    CHECK(bipoly_mul(one, a, kNtt) == a);
}

TEST_CASE("Kronecker product equals schoolbook") {
    SplitMix64 rng(21);
    for (const PrimeModulus* m : {&kNtt, &kCrt}) {
        for (int t = 0; t < 60; ++t) {
            const BiPoly a = random_bipoly(rng, rng.uniform(1, 16), rng.uniform(1, 16), *m);
            const BiPoly b = random_bipoly(rng, rng.uniform(1, 16), rng.uniform(1, 16), *m);
            CHECK(bipoly_mul(a, b, *m) == bipoly_mul_schoolbook(a, b, *m));
        }
        // large enough for the NTT path
        const BiPoly a = random_bipoly(rng, 40, 25, *m);
        const BiPoly b = random_bipoly(rng, 3, 30, *m);
        CHECK(bipoly_mul(a, b, *m) == bipoly_mul_schoolbook(a, b, *m));
    }
}

TEST_CASE("negate_x") {
    BiPoly a(2, 2);
    a(0, 0) = FieldElem{1};
    a(1, 1) = FieldElem{kNtt.value() - 1};
    CHECK(negate_x(a, kNtt) == one_plus_cxy(1));

    BiPoly x2y(3, 2);
    x2y(2, 1) = FieldElem{1};
    CHECK(negate_x(x2y, kNtt) == x2y);

    SplitMix64 rng(4);
    const BiPoly r = random_bipoly(rng, 7, 5, kNtt);
    CHECK(negate_x(negate_x(r, kNtt), kNtt) == r);
}

TEST_CASE("even and odd parts") {
    // 1 + x + x^2 y
    BiPoly a(3, 2);
    a(0, 0) = FieldElem{1};
    a(1, 0) = FieldElem{1};
    a(2, 1) = FieldElem{1};
    BiPoly even(2, 2);
    even(0, 0) = FieldElem{1};
    even(1, 1) = FieldElem{1};
    BiPoly odd(1, 2);
    odd(0, 0) = FieldElem{1};
    CHECK(even_part_x(a) == even);
    CHECK(odd_part_x(a) == odd);

    CHECK(odd_part_x(BiPoly(1, 3)) == BiPoly(1, 3));

    BiPoly only_odd(4, 2);
    only_odd(1, 0) = FieldElem{3};
    only_odd(3, 1) = FieldElem{4};
    CHECK(even_part_x(only_odd).is_zero());
    CHECK(even_part_x(only_odd).nx() == 2);

    SplitMix64 rng(8);
    const BiPoly e = random_bipoly(rng, 6, 3, kNtt);
    CHECK(even_part_x(substitute_x_squared(e)) == e);
}

TEST_CASE("even/odd reconstruction identity") {
    SplitMix64 rng(9);
    for (int t = 0; t < 40; ++t) {
        const BiPoly a = random_bipoly(rng, rng.uniform(1, 12), rng.uniform(1, 6), kNtt);
        const BiPoly e = substitute_x_squared(even_part_x(a));
        const BiPoly o = substitute_x_squared(odd_part_x(a));
        for (std::size_t i = 0; i < a.nx(); ++i) {
            for (std::size_t j = 0; j < a.ny(); ++j) {
                const FieldElem rebuilt = i % 2 == 0 ? e.at(i, j) : o.at(i - 1, j);
                CHECK(rebuilt == a(i, j));
            }
        }
        // no stray entries beyond the source grid
        CHECK(e.nx() <= a.nx());
        CHECK(o.nx() + 1 <= std::max<std::size_t>(a.nx(), 2));
    }
}

TEST_CASE("Q * Q(-x) is even in x") {
    SplitMix64 rng(10);
    for (int t = 0; t < 30; ++t) {
        const BiPoly q = random_bipoly(rng, rng.uniform(1, 20), rng.uniform(1, 8), kNtt);
        const BiPoly a = bipoly_mul(q, negate_x(q, kNtt), kNtt);
        for (std::size_t i = 1; i < a.nx(); i += 2) {
            for (std::size_t j = 0; j < a.ny(); ++j) CHECK(a(i, j).value == 0);
        }
    }
}

TEST_CASE("substitute_x_squared") {
    const BiPoly s = substitute_x_squared(one_plus_cxy(1));
    BiPoly expected(3, 2);
    expected(0, 0) = FieldElem{1};
    expected(2, 1) = FieldElem{1};
    CHECK(s == expected);
    CHECK(substitute_x_squared(BiPoly(1, 1)).is_zero());
    CHECK(substitute_x_squared(BiPoly(3, 2)).nx() == 5);
}

TEST_CASE("truncate_xy") {
    SplitMix64 rng(12);
    const BiPoly a = random_bipoly(rng, 4, 5, kNtt);
    CHECK(truncate_xy(a, 4, 5) == a);
    CHECK(truncate_xy(a, 10, 10) == a);

    BiPoly b(3, 3);
    b(0, 0) = FieldElem{1};
    b(2, 2) = FieldElem{1};
    BiPoly one(2, 2);
    one(0, 0) = FieldElem{1};
    CHECK(truncate_xy(b, 2, 2) == one);
    CHECK_THROWS_AS(truncate_xy(b, 0, 1), Error);

    // truncating the factors first does not change the truncated product
    for (int t = 0; t < 20; ++t) {
        const BiPoly x = random_bipoly(rng, rng.uniform(1, 10), rng.uniform(1, 10), kNtt);
        const BiPoly y = random_bipoly(rng, rng.uniform(1, 10), rng.uniform(1, 10), kNtt);
        const std::size_t n = rng.uniform(1, 12), m = rng.uniform(1, 12);
        const BiPoly full = truncate_xy(bipoly_mul_schoolbook(x, y, kNtt), n, m);
        const BiPoly early = truncate_xy(
            bipoly_mul(truncate_xy(x, n, m), truncate_xy(y, n, m), kNtt), n, m);
        CHECK(full == early);
    }
}

TEST_CASE("graeffe_even matches the direct product") {
    SplitMix64 rng(14);
    for (const PrimeModulus* m : {&kNtt, &kCrt}) {
        for (int t = 0; t < 80; ++t) {
            const BiPoly q = random_bipoly(rng, rng.uniform(1, 40), rng.uniform(1, 12), *m);
            const std::size_t n = rng.uniform(1, 90), mm = rng.uniform(1, 30);
            const BiPoly direct = even_part_x(truncate_xy(bipoly_mul(q, negate_x(q, *m), *m), n, mm));
            CHECK(graeffe_even(q, n, mm, *m) == direct);
        }
    }
    CHECK_THROWS_AS(graeffe_even(BiPoly(2, 2), 0, 1, kNtt), Error);
}
