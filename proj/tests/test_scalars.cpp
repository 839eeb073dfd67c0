#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieforge/epspoly.hpp"

using namespace lieforge;

TEST_CASE("rational canonical form") {
    CHECK(rat_canonical(2, 4) == Rational(1, 2));
    CHECK(rat_canonical(3, -6) == Rational(-1, 2));
    CHECK(rat_canonical(0, 7) == Rational(0));
    CHECK(rat_canonical(0, 7).den() == 1);
    CHECK(rat_canonical(-4, -6) == Rational(2, 3));
    CHECK(rat_canonical(-4, -6).den() == 3);
    CHECK_THROWS_AS(rat_canonical(1, 0), Error);
    CHECK_THROWS_WITH(rat_canonical(1, 0), "division by zero");
}

TEST_CASE("rational arithmetic and text") {
    Rational half(1, 2);
    CHECK(half + half == Rational(1));
    CHECK(half * 2 == Rational(1));
    CHECK((half / Rational(1, 3)) == Rational(3, 2));
    CHECK_THROWS_AS(half / Rational(0), Error);
    CHECK(half.str() == "1/2");
    CHECK(Rational(-1).str() == "-1");
    CHECK(Rational(0).str() == "0");
    CHECK((-half).str() == "-1/2");
    CHECK(rational_from_string("-3/9") == Rational(-1, 3));
    CHECK(rational_from_string("7") == Rational(7));
    // big integers stay exact
    Rational big(1);
    for (int i = 1; i <= 30; ++i) big *= Rational(i);
    CHECK(big == Rational(BigInt("265252859812191058636308480000000"), 1));
}

TEST_CASE("epspoly canonical form and text") {
    EpsPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.coeffs().empty());
    CHECK(zero.str() == "0");

    EpsPoly p = EpsPoly(Rational(1, 2)) + EpsPoly::monomial(Rational(1, 2), 1);
    CHECK(p.str() == "1/2+1/2*eps");
    CHECK(EpsPoly::monomial(1, 2).str() == "eps^2");
    CHECK(EpsPoly(-1).str() == "-1");
    CHECK((EpsPoly(Rational(1, 2)) - EpsPoly::monomial(Rational(1, 2), 1)).str() == "1/2-1/2*eps");
    CHECK((-EpsPoly::eps()).str() == "-eps");

    // cancellation drops trailing zeros back to the canonical empty list
    CHECK((p - p).is_zero());
    CHECK((p - p).coeffs().empty());
}

TEST_CASE("poly_mul truncation semantics") {
    EpsPoly one_plus = EpsPoly(1) + EpsPoly::eps();
    EpsPoly one_minus = EpsPoly(1) - EpsPoly::eps();
    CHECK(poly_mul(one_plus, one_minus) == EpsPoly(1) - EpsPoly::monomial(1, 2));

    // eps * eps dies mod eps^2
    EpsPoly eps_t1 = EpsPoly::monomial(1, 1, 1);
    CHECK(poly_mul(eps_t1, eps_t1).is_zero());
    CHECK(poly_mul(eps_t1, eps_t1).trunc() == 1);

    // (1/2 eps) * 2 = eps
    CHECK(poly_mul(EpsPoly::monomial(Rational(1, 2), 1), EpsPoly(2)) == EpsPoly::eps());

    // untruncated coerces into the quotient ring
    CHECK(poly_mul(EpsPoly::eps(), eps_t1).is_zero());
    CHECK(poly_mul(EpsPoly::eps(), eps_t1).trunc() == 1);

    // two distinct finite truncations never mix
    EpsPoly eps_t2 = EpsPoly::monomial(1, 1, 2);
    CHECK_THROWS_AS(poly_mul(eps_t1, eps_t2), Error);
    CHECK_THROWS_AS(eps_t1 + eps_t2, Error);
}

TEST_CASE("poly_specialize") {
    EpsPoly p = EpsPoly(Rational(1, 2)) + EpsPoly::monomial(Rational(1, 2), 1);
    CHECK(poly_specialize(p, 0) == Rational(1, 2));
    CHECK(poly_specialize(EpsPoly::eps(), 1) == Rational(1));
    EpsPoly q = EpsPoly(Rational(1, 2)) - EpsPoly::monomial(Rational(1, 2), 1);
    CHECK(poly_specialize(q, 1) == Rational(0));
    CHECK_THROWS_WITH(poly_specialize(EpsPoly(1).truncated(2), 0),
                      "cannot specialize a truncated polynomial");
}

namespace {

std::mt19937 rng(20240212);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return Rational(num(rng), den(rng));
}

EpsPoly random_poly() {
    std::uniform_int_distribution<int> deg(0, 3);
    EpsPoly p;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) p += EpsPoly::monomial(random_rational(), i);
    return p;
}

}  // namespace

TEST_CASE("ring axioms hold exactly on random scalars") {
    for (int trial = 0; trial < 300; ++trial) {
        EpsPoly p = random_poly(), q = random_poly(), r = random_poly();
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p + (-p) == EpsPoly());
    }
}

TEST_CASE("specialize is a ring homomorphism") {
    for (int trial = 0; trial < 200; ++trial) {
        EpsPoly p = random_poly(), q = random_poly();
        Rational v = random_rational();
        CHECK(poly_specialize(poly_mul(p, q), v) ==
              poly_specialize(p, v) * poly_specialize(q, v));
        CHECK(poly_specialize(p + q, v) == poly_specialize(p, v) + poly_specialize(q, v));
    }
}

TEST_CASE("exact division supports the fraction-free determinant") {
    EpsPoly a = (EpsPoly(1) + EpsPoly::eps()) * (EpsPoly(2) - EpsPoly::monomial(3, 2));
    CHECK(a.divexact(EpsPoly(1) + EpsPoly::eps()) == EpsPoly(2) - EpsPoly::monomial(3, 2));
    CHECK_THROWS_AS((EpsPoly(1) + EpsPoly::eps()).divexact(EpsPoly::eps()), Error);
}
