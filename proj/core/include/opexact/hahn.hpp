#ifndef OPEXACT_HAHN_HPP
#define OPEXACT_HAHN_HPP

#include "opexact/hyp.hpp"
#include "opexact/kernel.hpp"

namespace opexact {

/// Parameter point for the discrete-family identity suite, with the base
/// family on {0..N} and the two parameter-shifted companions.
class HahnContext {
public:
    HahnContext(Rational alpha, Rational beta, long big_n);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    long big_n() const { return big_n_; }

    const FamilySpec& base() const { return base_; }         // hahn(a, b, N)
    const FamilySpec& shifted() const { return shifted_; }   // hahn(a, b+1, N-1)
    const FamilySpec& shifted2() const;                      // hahn(a+1, b+2, N-2)

    /// c_n / h_0 = (N+a+b+2)_n n! / ((a+b+2)_n (-N+1)_n).
    Rational cn_over_h0(long n) const;

private:
    Rational alpha_, beta_;
    long big_n_;
    FamilySpec base_, shifted_;
    std::optional<FamilySpec> shifted2_;
};

/// The second-order difference operator with eigenfunctions Q_n(.; a, b, N):
/// (L f)(x) = (x+a+1)(x-N)(f(x+1)-f(x)) + x(x-b-N-1)(f(x-1)-f(x)),
/// satisfying L Q_n = n(n+a+b+1) Q_n.
Poly lambda_apply(const HahnContext& ctx, const Poly& f);

/// Connection formula: Q_n(.; a, b+1, N-1) as the prefactored kernel sum over
/// Q_k(.; a, b, N), asserted coefficient-wise.
void hahn_connection_check(const HahnContext& ctx, long n);

enum class FirstIdentityForm { finite_sum, f65_pair, f87_quadext };

/// The kernel-sum evaluation at the point N-1. All three routes must return
/// the common value (-1)^n (b+2)_n / (a+1)_n: the explicit finite sum, the
/// pair of 6F5(-1) series, and the single 8F7(-1) over Q(sqrt(d)) whose
/// irrational part must vanish.
Rational first_identity(const HahnContext& ctx, long n, FirstIdentityForm form);

/// Whipple / contiguous / Pfaff-Saalschutz derivation chain: asserts the
/// 6F5 pair equals the 3F2 combination, which collapses via the contiguous
/// relation to a single 3F2 summed by Pfaff-Saalschutz.
void derivation_chain_check(const HahnContext& ctx, long n);

/// r_n = (c_n / h_0) h_0 K_n(N-1, .), built both from the kernel series and
/// from the two-term parameter-shifted display; asserted equal.
Poly rn_poly(const HahnContext& ctx, long n);

/// The weighted-sum identity at the point pair (N, N-1): both discrete sums,
/// the dual construction of r_n, and the middle kernel-sum equality.
void second_identity_check(const HahnContext& ctx, long n);

struct LimitPoint {
    long big_n;
    double rel_error;
};

/// Floating-point check that the weighted-sum identity approaches its
/// continuous (Jacobi) counterpart as N grows; also asserts the exact
/// rational equality of the two closed-form limit values.
std::vector<LimitPoint> jacobi_limit_check(const Rational& alpha, const Rational& beta, long n,
                                           const std::vector<long>& n_list);

}  // namespace opexact

#endif
