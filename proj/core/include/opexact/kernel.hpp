#ifndef OPEXACT_KERNEL_HPP
#define OPEXACT_KERNEL_HPP

#include "opexact/ortho.hpp"

namespace opexact {

enum class KernelForm { sum, quotient };

/// h_0 * K_n(x, y), with K_n(x,y) = sum_{k<=n} p_k(x) p_k(y) / h_k.
/// The quotient form uses the two-term identity and needs x != y.
Rational cd_kernel(const FamilySpec& family, long n, const Rational& x, const Rational& y,
                   KernelForm form);

/// h_0 * K_n(x, x) through the confluent (derivative) form.
Rational cd_confluent(const FamilySpec& family, long n, const Rational& x);

/// h_0 * K_n(x, x-1) for Hahn, through the forward-difference form.
Rational cd_discrete(const FamilySpec& family, long n, const Rational& x);

/// h_0 * K_n(., y) as a polynomial in the first argument.
Poly cd_kernel_poly(const FamilySpec& family, long n, const Rational& y);

struct KernelPolyResult {
    Poly q;               // the kernel polynomial q_n = c_n K_n(x0, .)
    Rational cn_over_h0;  // c_n / h_0
    Rational x0;
};

/// Kernel polynomial at the endpoint x0. Built from the kernel series and
/// cross-checked coefficient-wise against the parameter-shifted family
/// (jacobi x0=1, laguerre x0=0, hahn x0=N).
KernelPolyResult kernel_poly(const FamilySpec& family, const Rational& x0, long n);

/// <p, h_0 K_n(., y)> / h_0; equals p(y) when deg p <= n.
Rational reproduce(const FamilySpec& family, long n, const Poly& p, const Rational& y);

/// h_0 * K_n(x0, x1), asserting it equals h_0 <K_n(x0,.), K_n(x1,.)>.
Rational cross_kernel_check(const FamilySpec& family, long n, const Rational& x0,
                            const Rational& x1);

}  // namespace opexact

#endif
