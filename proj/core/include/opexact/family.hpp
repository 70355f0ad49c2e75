#ifndef OPEXACT_FAMILY_HPP
#define OPEXACT_FAMILY_HPP

#include <string>
#include <tuple>

#include "opexact/rational.hpp"

namespace opexact {

enum class FamilyKind {
    jacobi,
    gegenbauer,   // jacobi(alpha, alpha)
    legendre,     // jacobi(0, 0)
    chebyshev_t,  // jacobi(-1/2, -1/2) + per-degree rescale to T_n
    chebyshev_u,  // jacobi(1/2, 1/2) + per-degree rescale to U_n
    hermite,
    laguerre,
    hahn,
};

enum class Measure { continuous, continuous_even, discrete };

/// Three-term recurrence coefficients for p_{n+1} = (A x + B) p_n - C p_{n-1}.
struct RecurCoeffs {
    Rational a, b, c;
};

/// A classical orthogonal polynomial family with exact constants: recurrence
/// coefficients, leading coefficients k_n, norm ratios h_n/h_0, special
/// values, and (for Hahn) the discrete weights. All quantities are exact
/// Rationals; transcendental factors live only in h_0 and cancel throughout.
class FamilySpec {
public:
    static FamilySpec jacobi(Rational alpha, Rational beta);
    static FamilySpec gegenbauer(Rational alpha);
    static FamilySpec legendre();
    static FamilySpec chebyshev_t();
    static FamilySpec chebyshev_u();
    static FamilySpec hermite();
    static FamilySpec laguerre(Rational alpha);
    static FamilySpec hahn(Rational alpha, Rational beta, long big_n);

    /// Construction from CLI-style strings, e.g. ("jacobi", "1/3", "0", 0).
    static FamilySpec make(const std::string& kind, const std::string& alpha,
                           const std::string& beta, long big_n);

    FamilyKind kind() const { return kind_; }
    Measure measure() const { return measure_; }
    bool is_even() const { return measure_ == Measure::continuous_even; }
    bool is_jacobi_like() const;
    bool is_hahn() const { return kind_ == FamilyKind::hahn; }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    long big_n() const;
    /// Largest representable degree: N for Hahn, unbounded otherwise.
    long max_degree() const;

    Rational leading_coeff(long n) const;  // k_n
    Rational norm_ratio(long n) const;     // h_n / h_0
    RecurCoeffs recur_coeffs(long n) const;

    // Special values (each defined only where the family defines it).
    Rational even_value_at_zero(long n) const;  // p_{2n}(0), even measures
    Rational odd_deriv_at_zero(long n) const;   // p'_{2n+1}(0), even measures
    Rational value_at_one(long n) const;        // p_n(1) Jacobi-like, p_n(0) Laguerre
    Rational value_at_big_n(long n) const;      // Q_n(N), Hahn
    Rational value_at_big_n_minus_1(long n) const;  // Q_n(N-1), Hahn

    /// Hahn orthogonality weight w_x on x in {0,...,N}.
    Rational hahn_weight(long x) const;

    /// Per-degree factor converting to the classical alias (T_n, U_n); 1 for
    /// non-alias families.
    Rational rescale(long n) const;
    /// h_0 of the alias measure in units of pi (Chebyshev aliases only).
    Rational h0_in_pi_units() const;

    std::string label() const;

    friend bool operator==(const FamilySpec& f, const FamilySpec& g);

private:
    FamilySpec(FamilyKind kind, Measure m, Rational alpha, Rational beta, long big_n)
        : kind_(kind), measure_(m), alpha_(std::move(alpha)), beta_(std::move(beta)), big_n_(big_n) {}

    void check_degree(long n) const;

    FamilyKind kind_;
    Measure measure_;
    Rational alpha_, beta_;  // hermite: unused; laguerre: alpha only
    long big_n_ = 0;         // hahn only
};

}  // namespace opexact

#endif
