#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opexact/quadext.hpp"

using namespace opexact;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational parsing round trip") {
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK(Rational::from_string(Rational(-14, 21).str()) == Rational(-2, 3));
    CHECK_THROWS(Rational::from_string("x"));
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK_THROWS(a / Rational(0));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK(Rational(9, 4).is_integer() == false);
    CHECK(Rational(8, 4).to_long() == 2);
}

TEST_CASE("pochhammer values") {
    CHECK(pochhammer(Rational(3), 4) == Rational(360));
    CHECK(pochhammer(Rational(5, 7), 0) == Rational(1));
    CHECK(pochhammer(Rational(-2), 3) == Rational(0));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(factorial_r(6) == Rational(720));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("pochhammer index additivity") {
    Rational a(-5, 3);
    for (long m = 0; m <= 20; m += 5)
        for (long n = 0; n <= 20; n += 7)
            CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rational(m), n));
}

TEST_CASE("exact square roots") {
    CHECK(*sqrt_exact(Rational(9, 4)) == Rational(3, 2));
    CHECK(*sqrt_exact(Rational(0)) == Rational(0));
    CHECK(!sqrt_exact(Rational(2)));
    CHECK(!sqrt_exact(Rational(-4)));
    CHECK(!sqrt_exact(Rational(1, 3)));
}

TEST_CASE("quadext construction") {
    CHECK_THROWS(QuadExt(Rational(1), Rational(1), Rational(4)));   // perfect square
    CHECK_THROWS(QuadExt(Rational(1), Rational(1), Rational(-2)));  // negative
    QuadExt r(Rational(3), Rational(0), Rational(5));
    CHECK(r.is_rational());
    CHECK(r.as_rational() == Rational(3));
}

TEST_CASE("quadext inversion uses the conjugate") {
    QuadExt one(1);
    CHECK(one.inverse() == one);
    QuadExt x(Rational(1), Rational(1), Rational(2));  // 1 + sqrt(2)
    CHECK(x.inverse() == QuadExt(Rational(-1), Rational(1), Rational(2)));
    CHECK((x * x.conjugate()).as_rational() == x.norm());
    CHECK(x * x.inverse() == one);
    CHECK_THROWS(QuadExt(0).inverse());
}

TEST_CASE("quadext radicand mixing rejected") {
    QuadExt a(Rational(1), Rational(1), Rational(2));
    QuadExt b(Rational(1), Rational(1), Rational(3));
    CHECK_THROWS(a + b);
    CHECK(a + QuadExt(Rational(2)) == QuadExt(Rational(3), Rational(1), Rational(2)));
}

TEST_CASE("quadext serialization") {
    QuadExt x(Rational(1, 2), Rational(-2, 3), Rational(7, 5));
    CHECK(x.str() == "(1/2)+(-2/3)*sqrt(7/5)");
    CHECK(QuadExt(Rational(4)).str() == "(4)+(0)*sqrt(0)");
}

TEST_CASE("quadext pochhammer stays in the field") {
    QuadExt c(Rational(1), Rational(1, 2), Rational(5));
    QuadExt p = pochhammer(c, 3);
    CHECK(p == c * (c + QuadExt(1)) * (c + QuadExt(2)));
}

TEST_CASE("require_equal reports both sides") {
    CHECK_THROWS_AS(require_equal(Rational(1), Rational(2), "probe"), identity_violation);
    try {
        require_equal(Rational(1, 3), Rational(2, 3), "probe");
    } catch (const identity_violation& e) {
        CHECK(e.lhs() == "1/3");
        CHECK(e.rhs() == "2/3");
    }
}
