#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opexact/poly.hpp"
#include "opexact/quadext.hpp"

using namespace opexact;

TEST_CASE("construction and trimming") {
    Poly z({Rational(0), Rational(0)});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    Poly p({Rational(1), Rational(0), Rational(3), Rational(0)});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(3));
    CHECK(p.coeff(17) == Rational(0));
    CHECK(p.leading() == Rational(3));
    CHECK(Poly::monomial(3, Rational(2, 5)) == Poly({Rational(0), Rational(0), Rational(0), Rational(2, 5)}));
}

TEST_CASE("arithmetic") {
    Poly p({Rational(1), Rational(2)});         // 1 + 2x
    Poly q({Rational(-1), Rational(1)});        // -1 + x
    CHECK(p + q == Poly({Rational(0), Rational(3)}));
    CHECK(p - p == Poly());
    CHECK(p * q == Poly({Rational(-1), Rational(-1), Rational(2)}));
    CHECK(Rational(1, 2) * p == Poly({Rational(1, 2), Rational(1)}));
    CHECK((p * Poly()).is_zero());
    CHECK(-q == Poly({Rational(1), Rational(-1)}));
}

TEST_CASE("evaluation in both fields") {
    Poly p({Rational(-1), Rational(0), Rational(2)});  // 2x^2 - 1
    CHECK(p(Rational(1, 2)) == Rational(-1, 2));
    QuadExt r2(Rational(0), Rational(1), Rational(2));
    CHECK(p.eval(r2) == QuadExt(Rational(3)));
}

TEST_CASE("derivative, shift, compose") {
    Poly p({Rational(1), Rational(-3), Rational(0), Rational(5)});  // 5x^3 - 3x + 1
    CHECK(p.derivative() == Poly({Rational(-3), Rational(0), Rational(15)}));
    CHECK(Poly::constant(Rational(4)).derivative().is_zero());

    Poly sh = p.shifted(Rational(1, 3));
    for (long i = -3; i <= 3; ++i)
        CHECK(sh(Rational(i)) == p(Rational(i) + Rational(1, 3)));

    Poly q({Rational(1), Rational(0), Rational(-2)});  // 1 - 2x^2
    Poly comp = p.compose(q);
    CHECK(comp.degree() == 6);
    for (long i = -2; i <= 2; ++i)
        CHECK(comp(Rational(i)) == p(q(Rational(i))));
}

TEST_CASE("deflation at the origin") {
    Poly p({Rational(0), Rational(-1, 2), Rational(0), Rational(1)});  // x^3 - x/2
    CHECK(deflate_at_zero(p) == Poly({Rational(-1, 2), Rational(0), Rational(1)}));
    CHECK_THROWS(deflate_at_zero(Poly({Rational(1), Rational(0), Rational(1)})));  // x^2 + 1
    CHECK(deflate_at_zero(Poly()).is_zero());
}

TEST_CASE("poly require_equal") {
    Poly p({Rational(1), Rational(2)});
    CHECK_NOTHROW(require_equal(p, p, "same"));
    CHECK_THROWS_AS(require_equal(p, p.derivative(), "diff"), identity_violation);
}
