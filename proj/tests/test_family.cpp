#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opexact/ortho.hpp"

using namespace opexact;

TEST_CASE("parameter validation") {
    CHECK_THROWS(FamilySpec::jacobi(Rational(-1), Rational(0)));
    CHECK_THROWS(FamilySpec::laguerre(Rational(-3, 2)));
    CHECK_THROWS(FamilySpec::hahn(Rational(0), Rational(0), 0));
    CHECK_THROWS(FamilySpec::make("nosuch", "0", "0", 0));
    CHECK(FamilySpec::make("jacobi", "1/3", "0", 0) == FamilySpec::jacobi(Rational(1, 3), Rational(0)));
}

TEST_CASE("classical low-degree polynomials") {
    auto leg = generate_ops(FamilySpec::legendre(), 3);
    CHECK(leg[0] == Poly::constant(Rational(1)));
    CHECK(leg[1] == Poly::x());
    CHECK(leg[2] == Poly({Rational(-1, 2), Rational(0), Rational(3, 2)}));
    CHECK(leg[3] == Poly({Rational(0), Rational(-3, 2), Rational(0), Rational(5, 2)}));

    auto herm = generate_ops(FamilySpec::hermite(), 3);
    CHECK(herm[1] == Poly({Rational(0), Rational(2)}));
    CHECK(herm[2] == Poly({Rational(-2), Rational(0), Rational(4)}));
    CHECK(herm[3] == Poly({Rational(0), Rational(-12), Rational(0), Rational(8)}));

    auto lag = generate_ops(FamilySpec::laguerre(Rational(0)), 2);
    CHECK(lag[1] == Poly({Rational(1), Rational(-1)}));
    CHECK(lag[2] == Poly({Rational(1), Rational(-2), Rational(1, 2)}));
}

TEST_CASE("chebyshev aliases after rescale") {
    FamilySpec t = FamilySpec::chebyshev_t();
    FamilySpec u = FamilySpec::chebyshev_u();
    auto pt = generate_ops(t, 4);
    auto pu = generate_ops(u, 3);
    CHECK(t.rescale(2) * pt[2] == Poly({Rational(-1), Rational(0), Rational(2)}));
    CHECK(t.rescale(4) * pt[4] == Poly({Rational(1), Rational(0), Rational(-8), Rational(0), Rational(8)}));
    CHECK(u.rescale(3) * pu[3] == Poly({Rational(0), Rational(-4), Rational(0), Rational(8)}));
    CHECK(t.h0_in_pi_units() == Rational(1));
    CHECK(u.h0_in_pi_units() == Rational(1, 2));
    CHECK_THROWS(FamilySpec::legendre().h0_in_pi_units());
}

TEST_CASE("leading coefficients match generated polynomials") {
    for (FamilySpec fam : {FamilySpec::jacobi(Rational(1, 2), Rational(-1, 3)),
                           FamilySpec::gegenbauer(Rational(7, 3)), FamilySpec::hermite(),
                           FamilySpec::laguerre(Rational(1, 2)),
                           FamilySpec::hahn(Rational(1, 3), Rational(1, 4), 8)}) {
        long top = fam.is_hahn() ? fam.max_degree() : 9;
        auto ps = generate_ops(fam, top);
        for (long n = 0; n <= top; ++n) CHECK(ps[n].leading() == fam.leading_coeff(n));
    }
}

TEST_CASE("norm ratios match inner products") {
    for (FamilySpec fam : {FamilySpec::jacobi(Rational(1), Rational(-2, 5)),
                           FamilySpec::legendre(), FamilySpec::hermite(),
                           FamilySpec::laguerre(Rational(2))}) {
        auto ps = generate_ops(fam, 6);
        for (long n = 0; n <= 6; ++n)
            CHECK(inner_product_n(ps[n], ps[n], fam) == fam.norm_ratio(n));
    }
}

TEST_CASE("special values match generated polynomials") {
    FamilySpec geg = FamilySpec::gegenbauer(Rational(-1, 3));
    auto gs = generate_ops(geg, 9);
    for (long n = 0; 2 * n <= 9; ++n) CHECK(gs[2 * n](Rational(0)) == geg.even_value_at_zero(n));
    for (long n = 0; 2 * n + 1 <= 9; ++n)
        CHECK(gs[2 * n + 1].derivative()(Rational(0)) == geg.odd_deriv_at_zero(n));

    FamilySpec jac = FamilySpec::jacobi(Rational(1, 2), Rational(2));
    auto js = generate_ops(jac, 7);
    for (long n = 0; n <= 7; ++n) CHECK(js[n](Rational(1)) == jac.value_at_one(n));

    FamilySpec lag = FamilySpec::laguerre(Rational(1, 3));
    auto ls = generate_ops(lag, 7);
    for (long n = 0; n <= 7; ++n) CHECK(ls[n](Rational(0)) == lag.value_at_one(n));
}

TEST_CASE("discrete family endpoint values and weights") {
    FamilySpec h = FamilySpec::hahn(Rational(1, 2), Rational(1, 3), 6);
    auto qs = generate_ops(h, 6);
    for (long n = 0; n <= 6; ++n) {
        CHECK(qs[n](Rational(0)) == Rational(1));
        CHECK(qs[n](Rational(6)) == h.value_at_big_n(n));
        CHECK(qs[n](Rational(5)) == h.value_at_big_n_minus_1(n));
    }
    for (long x = 0; x <= 6; ++x) CHECK(h.hahn_weight(x) > Rational(0));
    CHECK_THROWS(h.hahn_weight(7));
    CHECK_THROWS(h.recur_coeffs(6));  // degree cap N
    CHECK_THROWS(FamilySpec::legendre().big_n());
}

TEST_CASE("basis expansion round trip") {
    FamilySpec fam = FamilySpec::legendre();
    Poly p({Rational(0), Rational(0), Rational(1)});  // x^2
    BasisCoeffs c = basis_expand(p, fam);
    CHECK(c.values == std::vector<Rational>{Rational(1, 3), Rational(0), Rational(2, 3)});
    CHECK(basis_recombine(c, fam) == p);
    CHECK(inner_product_n(Poly::x(), Poly::x(), fam) == Rational(1, 3));
}

TEST_CASE("orthogonality of distinct degrees") {
    for (FamilySpec fam : {FamilySpec::jacobi(Rational(7, 3), Rational(-1, 2)),
                           FamilySpec::hermite(), FamilySpec::hahn(Rational(0), Rational(1), 5)}) {
        long top = fam.is_hahn() ? fam.max_degree() : 5;
        auto ps = generate_ops(fam, top);
        for (long m = 0; m <= top; ++m)
            for (long n = m + 1; n <= top; ++n)
                CHECK(inner_product_n(ps[m], ps[n], fam).is_zero());
    }
}

TEST_CASE("discrete inner product agrees with the basis route") {
    FamilySpec h = FamilySpec::hahn(Rational(1), Rational(1, 2), 7);
    Poly p({Rational(1), Rational(-2), Rational(0), Rational(1, 3)});
    Poly q({Rational(0), Rational(1), Rational(1)});
    CHECK(inner_product_n(p, q, h) == inner_product_basis(p, q, h));
}

TEST_CASE("labels are distinct and stable") {
    CHECK(FamilySpec::legendre().label() == FamilySpec::legendre().label());
    CHECK(FamilySpec::jacobi(Rational(0), Rational(0)).label() != FamilySpec::legendre().label());
}
