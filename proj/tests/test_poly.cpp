#include <doctest.h>

#include "gpoly/errors.hpp"
#include "gpoly/poly.hpp"
#include "oracles.hpp"

using namespace gpoly;

TEST_CASE("rational construction and parsing") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK(parse_rational("10") == 10);
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(to_string(make_rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK(is_integer(make_rational(8, 4)));
    CHECK_FALSE(is_integer(make_rational(1, 3)));
    CHECK(sign(make_rational(-2, 9)) == -1);
}

TEST_CASE("zero polynomial and trimming") {
    UniPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == UniPoly::kZeroDegree);
    CHECK(UniPoly::from_ints({0, 0, 0}).is_zero());
    CHECK(UniPoly::from_ints({1, 2, 0}).degree() == 1);
    CHECK_THROWS_AS(z.leading(), DomainError);
    CHECK((UniPoly::from_ints({1, 1}) - UniPoly::from_ints({1, 1})).is_zero());
}

TEST_CASE("arithmetic examples") {
    const UniPoly a = UniPoly::from_ints({0, 2, 1});  // t^2 + 2t
    const UniPoly b = UniPoly::from_ints({1, 1});
    CHECK(a * b == UniPoly::from_ints({0, 2, 3, 1}));
    CHECK(poly_arith(a, b, ArithOp::Sub) == UniPoly::from_ints({-1, 1, 1}));
    CHECK(evaluate(a, 1) == 3);
    CHECK(evaluate(derivative(a), 1) == 4);
    CHECK(evaluate(derivative(a, 2), 1) == 2);
    CHECK(derivative(UniPoly::constant(5)).is_zero());
    CHECK(to_string(a) == "2t + t^2");
    CHECK(sign_at(b, Rational(-1)) == 0);
}

TEST_CASE("ring laws on random polynomials") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const UniPoly p = gen.poly(6), q = gen.poly(6), r = gen.poly(6);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        const Rational x = gen.rational();
        CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));
        CHECK(evaluate(derivative(p * q), x) == evaluate(derivative(p) * q + p * derivative(q), x));
    }
}

TEST_CASE("division identity") {
    oracle::Gen gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        const UniPoly a = gen.poly(8);
        UniPoly b = gen.poly(4);
        if (b.is_zero()) {
            CHECK_THROWS_AS(divmod(a, b), DomainError);
            continue;
        }
        const DivMod qr = divmod(a, b);
        CHECK(qr.quotient * b + qr.remainder == a);
        CHECK(qr.remainder.degree() < b.degree());
    }
}

TEST_CASE("gcd and content") {
    const UniPoly p = UniPoly::from_ints({-1, 0, 1});  // (t-1)(t+1)
    const UniPoly q = UniPoly::from_ints({1, 2, 1});   // (t+1)^2
    CHECK(gcd(p, q) == UniPoly::from_ints({1, 1}));
    CHECK(content(UniPoly::from_ints({4, 6})) == 2);
    CHECK(primitive_part(UniPoly::from_ints({4, 6})) == UniPoly::from_ints({2, 3}));

    oracle::Gen gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        const UniPoly common = gen.poly(3);
        const UniPoly a = common * gen.poly(3), b = common * gen.poly(3);
        if (a.is_zero() || b.is_zero()) continue;
        const UniPoly g = gcd(a, b);
        CHECK(divmod(a, g).remainder.is_zero());
        CHECK(divmod(b, g).remainder.is_zero());
        CHECK(divmod(g, primitive_part(common)).remainder.is_zero());
        CHECK(g.leading() > 0);
    }
}

TEST_CASE("squarefree decomposition") {
    oracle::Gen gen(14);
    for (int trial = 0; trial < 60; ++trial) {
        const auto roots = gen.distinct_roots(3);
        // multiplicities 1, 2, 3
        const UniPoly p = oracle::from_roots({roots[0], roots[1], roots[1], roots[2], roots[2], roots[2]}, 5);
        const auto split = gcd_squarefree(p);
        CHECK(split.squarefree_part.degree() == 3);
        const auto factors = squarefree_factorization(p);
        REQUIRE(factors.size() == 3);
        UniPoly prod = UniPoly::constant(1);
        for (std::size_t k = 0; k < factors.size(); ++k) {
            CHECK(factors[k].degree() == 1);
            for (std::size_t e = 0; e <= k; ++e) prod *= factors[k];
        }
        CHECK(prod.degree() == p.degree());
        CHECK(prod * (p.leading() / prod.leading()) == p);
    }
}

TEST_CASE("reference examples") {
    const UniPoly t = UniPoly::t();
    CHECK(t + t == UniPoly::from_ints({0, 2}));
    CHECK(UniPoly::from_ints({2, 1}) * t == UniPoly::from_ints({0, 2, 1}));
    CHECK((UniPoly::from_ints({3, 1, 4}) * UniPoly()).is_zero());
    CHECK(scale(UniPoly::from_ints({2, 4}), make_rational(1, 2)) == UniPoly::from_ints({1, 2}));
    CHECK(derivative(UniPoly::from_ints({0, 2, 1})) == UniPoly::from_ints({2, 2}));
    CHECK(derivative(UniPoly::from_ints({0, 3, 2})) == UniPoly::from_ints({3, 4}));
    CHECK(evaluate(UniPoly::from_ints({0, 6, 6, 1}), 1) == 13);
    CHECK(evaluate(UniPoly::from_ints({7, 6, 6, 1}), 0) == 7);
}

TEST_CASE("squarefree split examples") {
    CHECK(gcd_squarefree(UniPoly::from_ints({0, 2, 1})).squarefree_part.degree() == 2);
    CHECK(gcd_squarefree(UniPoly::from_ints({0, 0, 1})).squarefree_part.degree() == 1);
    const UniPoly p = oracle::from_roots({0, -1, -1});
    const auto split = gcd_squarefree(p);
    const UniPoly expect = oracle::from_roots({0, -1});
    CHECK(split.squarefree_part * (expect.leading() / split.squarefree_part.leading()) == expect);
    const UniPoly prod = split.gcd_with_derivative * split.squarefree_part;
    CHECK(prod * (p.leading() / prod.leading()) == p);
    CHECK_THROWS_AS(gcd_squarefree(UniPoly()), DomainError);
}
