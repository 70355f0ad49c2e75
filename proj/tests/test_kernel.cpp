#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opexact/kernel.hpp"

using namespace opexact;

TEST_CASE("legendre kernel closed form at n = 1") {
    FamilySpec leg = FamilySpec::legendre();
    // h_0 K_1(x, y) = 1 + 3 x y
    Poly k1 = cd_kernel_poly(leg, 1, Rational(1, 2));
    CHECK(k1 == Poly({Rational(1), Rational(3, 2)}));
    CHECK(cd_kernel(leg, 1, Rational(2, 3), Rational(1, 2), KernelForm::sum) == Rational(2));
    CHECK(cd_kernel(leg, 1, Rational(2, 3), Rational(1, 2), KernelForm::quotient) == Rational(2));
}

TEST_CASE("sum and quotient forms agree") {
    for (FamilySpec fam : {FamilySpec::jacobi(Rational(1, 3), Rational(-2, 5)),
                           FamilySpec::hermite(), FamilySpec::laguerre(Rational(1, 2)),
                           FamilySpec::hahn(Rational(1, 2), Rational(1, 3), 7)}) {
        long top = fam.is_hahn() ? fam.max_degree() - 1 : 6;
        Rational x(1, 3), y(-2, 5);
        for (long n = 0; n <= top; ++n)
            CHECK(cd_kernel(fam, n, x, y, KernelForm::sum) ==
                  cd_kernel(fam, n, x, y, KernelForm::quotient));
    }
    CHECK_THROWS(cd_kernel(FamilySpec::legendre(), 2, Rational(1, 2), Rational(1, 2),
                           KernelForm::quotient));
}

TEST_CASE("confluent form matches the diagonal sum") {
    for (FamilySpec fam : {FamilySpec::legendre(), FamilySpec::gegenbauer(Rational(7, 3)),
                           FamilySpec::laguerre(Rational(0))}) {
        for (long n = 0; n <= 5; ++n) {
            Rational x(2, 7);
            CHECK(cd_confluent(fam, n, x) == cd_kernel(fam, n, x, x, KernelForm::sum));
        }
    }
}

TEST_CASE("discrete difference form on the integer grid") {
    FamilySpec h = FamilySpec::hahn(Rational(1, 3), Rational(1, 2), 8);
    for (long n = 0; n + 1 <= 8; ++n)
        for (long x = 1; x <= 8; ++x)
            CHECK(cd_discrete(h, n, Rational(x)) ==
                  cd_kernel(h, n, Rational(x), Rational(x - 1), KernelForm::sum));
}

TEST_CASE("kernel polynomial matches the parameter-shifted family") {
    // kernel_poly itself asserts coefficient-wise equality with the shifted
    // family; here we pin down normalization and the endpoint values.
    FamilySpec jac = FamilySpec::jacobi(Rational(1, 2), Rational(-1, 3));
    for (long n = 0; n <= 5; ++n) {
        KernelPolyResult r = kernel_poly(jac, Rational(1), n);
        FamilySpec sh = FamilySpec::jacobi(Rational(3, 2), Rational(-1, 3));
        CHECK(r.q == generate_ops(sh, n).back());
        CHECK(r.cn_over_h0 * cd_kernel(jac, n, Rational(1), Rational(1), KernelForm::sum) ==
              r.q(Rational(1)));
    }

    FamilySpec lag = FamilySpec::laguerre(Rational(1, 3));
    KernelPolyResult rl = kernel_poly(lag, Rational(0), 4);
    CHECK(rl.q == generate_ops(FamilySpec::laguerre(Rational(4, 3)), 4).back());

    FamilySpec hahn = FamilySpec::hahn(Rational(1, 2), Rational(1, 4), 7);
    KernelPolyResult rh = kernel_poly(hahn, Rational(7), 3);
    CHECK(rh.q == generate_ops(FamilySpec::hahn(Rational(1, 2), Rational(5, 4), 6), 3).back());
}

TEST_CASE("reproducing property") {
    FamilySpec leg = FamilySpec::legendre();
    Poly p({Rational(0), Rational(-1, 2), Rational(0), Rational(1)});  // x^3 - x/2
    CHECK(reproduce(leg, 3, p, Rational(1, 4)) == Rational(-7, 64));
    CHECK(reproduce(leg, 5, p, Rational(1, 4)) == Rational(-7, 64));
    // degree above the kernel order is rejected, not silently projected
    CHECK_THROWS(reproduce(leg, 2, p, Rational(1, 4)));
}

TEST_CASE("kernel self-pairing") {
    for (FamilySpec fam : {FamilySpec::legendre(), FamilySpec::hahn(Rational(0), Rational(0), 6)}) {
        for (long n = 0; n <= 4; ++n)
            CHECK_NOTHROW(cross_kernel_check(fam, n, Rational(1, 3), Rational(-2, 7)));
    }
}
