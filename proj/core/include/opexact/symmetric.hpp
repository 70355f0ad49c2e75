#ifndef OPEXACT_SYMMETRIC_HPP
#define OPEXACT_SYMMETRIC_HPP

#include "opexact/ortho.hpp"

namespace opexact {

enum class PSMethod { recurrence, direct, cd_sum, closed_form };

struct PSResult {
    long n;
    Rational value;  // I_n / h_0
    PSMethod method;
};

/// I_n / h_0 where I_n = integral of (p_{2n+1}(x)/x)^2 over the even measure.
Rational ps_integral(const FamilySpec& family, long n, PSMethod method);

/// The whole prefix I_0..I_nmax in one pass (shares recurrence work).
std::vector<Rational> ps_integral_seq(const FamilySpec& family, long nmax, PSMethod method);

/// I_n / h_0 from the closed form k_{2n+1} (h_{2n}/h_0) p'_{2n+1}(0) / (k_{2n} p_{2n}(0)).
Rational ps_closed_form(const FamilySpec& family, long n);

/// The Gegenbauer evaluation (alpha+1)_{2n+1}^2 / ((2 alpha + 2)_{2n} (2n+1)!),
/// the Gamma-free reduction of the closed-form integral over h_0.
Rational gegenbauer_ps_ratio(const Rational& alpha, long n);

/// Projection onto degree <= 2n+1 evaluated at 0: returns the projection
/// integral and asserts it equals p(0).
Rational ps_projection_check(const FamilySpec& family, long n, const Poly& p);

/// Coefficient-wise identity h_0 K_{2n}(., 0) = const * p_{2n+1}(x)/x, and
/// the same for K_{2n+1}.
void ps_cd_proportionality(const FamilySpec& family, long n);

/// T/U alias value in h_0 = pi units: rescale(2n+1)^2 * (I_n/h_0) * (h_0/pi).
Rational chebyshev_ps_value(const FamilySpec& family, long n);

}  // namespace opexact

#endif
