#include "opexact/family.hpp"

#include <stdexcept>

namespace opexact {

namespace {

void check_param_gt_minus1(const Rational& v, const char* name) {
    if (v <= Rational(-1))
        throw std::invalid_argument(std::string("family: ") + name + " = " + v.str() + " must exceed -1");
}

Rational two_pow(long n) { return pow(Rational(2), n); }

}  // namespace

FamilySpec FamilySpec::jacobi(Rational alpha, Rational beta) {
    check_param_gt_minus1(alpha, "alpha");
    check_param_gt_minus1(beta, "beta");
    Measure m = alpha == beta ? Measure::continuous_even : Measure::continuous;
    return FamilySpec(FamilyKind::jacobi, m, std::move(alpha), std::move(beta), 0);
}

FamilySpec FamilySpec::gegenbauer(Rational alpha) {
    check_param_gt_minus1(alpha, "alpha");
    Rational beta = alpha;
    return FamilySpec(FamilyKind::gegenbauer, Measure::continuous_even, std::move(alpha), std::move(beta), 0);
}

FamilySpec FamilySpec::legendre() {
    return FamilySpec(FamilyKind::legendre, Measure::continuous_even, Rational(0), Rational(0), 0);
}

FamilySpec FamilySpec::chebyshev_t() {
    Rational a(-1, 2);
    return FamilySpec(FamilyKind::chebyshev_t, Measure::continuous_even, a, a, 0);
}

FamilySpec FamilySpec::chebyshev_u() {
    Rational a(1, 2);
    return FamilySpec(FamilyKind::chebyshev_u, Measure::continuous_even, a, a, 0);
}

FamilySpec FamilySpec::hermite() {
    return FamilySpec(FamilyKind::hermite, Measure::continuous_even, Rational(0), Rational(0), 0);
}

FamilySpec FamilySpec::laguerre(Rational alpha) {
    check_param_gt_minus1(alpha, "alpha");
    return FamilySpec(FamilyKind::laguerre, Measure::continuous, std::move(alpha), Rational(0), 0);
}

FamilySpec FamilySpec::hahn(Rational alpha, Rational beta, long big_n) {
    check_param_gt_minus1(alpha, "alpha");
    check_param_gt_minus1(beta, "beta");
    if (big_n < 1) throw std::invalid_argument("family: hahn needs N >= 1");
    return FamilySpec(FamilyKind::hahn, Measure::discrete, std::move(alpha), std::move(beta), big_n);
}

FamilySpec FamilySpec::make(const std::string& kind, const std::string& alpha,
                            const std::string& beta, long big_n) {
    auto a = [&] { return Rational::from_string(alpha); };
    auto b = [&] { return Rational::from_string(beta); };
    if (kind == "jacobi") return jacobi(a(), b());
    if (kind == "gegenbauer") return gegenbauer(a());
    if (kind == "legendre") return legendre();
    if (kind == "chebyshev_t") return chebyshev_t();
    if (kind == "chebyshev_u") return chebyshev_u();
    if (kind == "hermite") return hermite();
    if (kind == "laguerre") return laguerre(a());
    if (kind == "hahn") return hahn(a(), b(), big_n);
    throw std::invalid_argument("family: unknown kind '" + kind + "'");
}

bool FamilySpec::is_jacobi_like() const {
    switch (kind_) {
        case FamilyKind::jacobi:
        case FamilyKind::gegenbauer:
        case FamilyKind::legendre:
        case FamilyKind::chebyshev_t:
        case FamilyKind::chebyshev_u:
            return true;
        default:
            return false;
    }
}

long FamilySpec::big_n() const {
    if (!is_hahn()) throw std::domain_error("family: N defined only for hahn");
    return big_n_;
}

long FamilySpec::max_degree() const {
    return is_hahn() ? big_n_ : -1;
}

void FamilySpec::check_degree(long n) const {
    if (n < 0) throw std::out_of_range("family: negative degree");
    if (is_hahn() && n > big_n_)
        throw std::out_of_range("family: degree " + std::to_string(n) + " exceeds N = " + std::to_string(big_n_));
}

Rational FamilySpec::leading_coeff(long n) const {
    check_degree(n);
    switch (kind_) {
        case FamilyKind::hermite:
            return two_pow(n);
        case FamilyKind::laguerre:
            return pow(Rational(-1), n) / factorial_r(n);
        case FamilyKind::hahn:
            return pochhammer(Rational(n) + alpha_ + beta_ + Rational(1), n) /
                   (pochhammer(alpha_ + Rational(1), n) * pochhammer(Rational(-big_n_), n));
        default:
            return pochhammer(Rational(n) + alpha_ + beta_ + Rational(1), n) / (two_pow(n) * factorial_r(n));
    }
}

Rational FamilySpec::norm_ratio(long n) const {
    check_degree(n);
    if (n == 0) return Rational(1);
    switch (kind_) {
        case FamilyKind::hermite:
            return two_pow(n) * factorial_r(n);
        case FamilyKind::laguerre:
            return pochhammer(alpha_ + Rational(1), n) / factorial_r(n);
        case FamilyKind::hahn: {
            Rational s = alpha_ + beta_ + Rational(1);
            return (Rational(n) + s) / (Rational(2 * n) + s) * pow(Rational(-1), n) * factorial_r(n) /
                   pochhammer(Rational(-big_n_), n) * pochhammer(beta_ + Rational(1), n) /
                   pochhammer(alpha_ + Rational(1), n) *
                   pochhammer(Rational(big_n_) + s + Rational(1), n) / pochhammer(s + Rational(1), n);
        }
        default:
            return pochhammer(alpha_ + Rational(1), n) * pochhammer(beta_ + Rational(1), n) /
                   ((Rational(2 * n) + alpha_ + beta_ + Rational(1)) * factorial_r(n) *
                    pochhammer(alpha_ + beta_ + Rational(2), n - 1));
    }
}

RecurCoeffs FamilySpec::recur_coeffs(long n) const {
    check_degree(n);
    if (is_hahn() && n > big_n_ - 1)
        throw std::out_of_range("family: hahn recurrence defined for n <= N-1");
    RecurCoeffs rc;
    Rational kn = leading_coeff(n);
    rc.a = leading_coeff(n + 1) / kn;
    rc.c = n == 0 ? Rational(0)
                  : leading_coeff(n - 1) * leading_coeff(n + 1) * norm_ratio(n) /
                        (kn * kn * norm_ratio(n - 1));
    switch (kind_) {
        case FamilyKind::jacobi: {
            if (alpha_ == beta_) {
                rc.b = Rational(0);
            } else if (n == 0) {
                rc.b = (alpha_ - beta_) / Rational(2);
            } else {
                Rational s = alpha_ + beta_;
                rc.b = (alpha_ - beta_) * s * (Rational(2 * n) + s + Rational(1)) /
                       (Rational(2) * Rational(n + 1) * (Rational(n) + s + Rational(1)) * (Rational(2 * n) + s));
            }
            break;
        }
        case FamilyKind::laguerre:
            rc.b = (Rational(2 * n) + alpha_ + Rational(1)) / Rational(n + 1);
            break;
        case FamilyKind::hahn:
            // Q_n(0) = 1 for all n forces B_n = 1 + C_n.
            rc.b = Rational(1) + rc.c;
            break;
        default:
            rc.b = Rational(0);
    }
    return rc;
}

Rational FamilySpec::even_value_at_zero(long n) const {
    if (!is_even()) throw std::domain_error("family: value at 0 closed form needs an even measure");
    check_degree(2 * n);
    Rational sgn = pow(Rational(-1), n);
    if (kind_ == FamilyKind::hermite) return sgn * two_pow(2 * n) * pochhammer(Rational(1, 2), n);
    return sgn * pochhammer(alpha_ + Rational(n + 1), n) / (two_pow(2 * n) * factorial_r(n));
}

Rational FamilySpec::odd_deriv_at_zero(long n) const {
    if (!is_even()) throw std::domain_error("family: derivative at 0 closed form needs an even measure");
    check_degree(2 * n + 1);
    if (kind_ == FamilyKind::hermite) return Rational(2) * Rational(2 * n + 1) * even_value_at_zero(n);
    return (Rational(n) + alpha_ + Rational(1)) * pow(Rational(-1), n) *
           pochhammer(alpha_ + Rational(n + 2), n) / (two_pow(2 * n) * factorial_r(n));
}

Rational FamilySpec::value_at_one(long n) const {
    if (!is_jacobi_like() && kind_ != FamilyKind::laguerre)
        throw std::domain_error("family: endpoint value defined for jacobi-like and laguerre only");
    check_degree(n);
    return pochhammer(alpha_ + Rational(1), n) / factorial_r(n);
}

Rational FamilySpec::value_at_big_n(long n) const {
    if (!is_hahn()) throw std::domain_error("family: value at N defined for hahn only");
    check_degree(n);
    return pow(Rational(-1), n) * pochhammer(beta_ + Rational(1), n) / pochhammer(alpha_ + Rational(1), n);
}

Rational FamilySpec::value_at_big_n_minus_1(long n) const {
    Rational qN = value_at_big_n(n);
    Rational corr = Rational(n) * (Rational(n) + alpha_ + beta_ + Rational(1)) /
                    ((beta_ + Rational(1)) * Rational(big_n_));
    return qN * (Rational(1) - corr);
}

Rational FamilySpec::hahn_weight(long x) const {
    if (!is_hahn()) throw std::domain_error("family: discrete weights defined for hahn only");
    if (x < 0 || x > big_n_) throw std::out_of_range("family: weight point outside {0,...,N}");
    return pochhammer(alpha_ + Rational(1), x) / factorial_r(x) *
           pochhammer(beta_ + Rational(1), big_n_ - x) / factorial_r(big_n_ - x);
}

Rational FamilySpec::rescale(long n) const {
    check_degree(n);
    switch (kind_) {
        case FamilyKind::chebyshev_t:
            return factorial_r(n) / pochhammer(Rational(1, 2), n);
        case FamilyKind::chebyshev_u:
            return factorial_r(n + 1) / pochhammer(Rational(3, 2), n);
        default:
            return Rational(1);
    }
}

Rational FamilySpec::h0_in_pi_units() const {
    switch (kind_) {
        case FamilyKind::chebyshev_t:
            return Rational(1);
        case FamilyKind::chebyshev_u:
            return Rational(1, 2);
        default:
            throw std::domain_error("family: h0 in pi units defined for chebyshev aliases only");
    }
}

std::string FamilySpec::label() const {
    switch (kind_) {
        case FamilyKind::jacobi:
            return "jacobi(" + alpha_.str() + "," + beta_.str() + ")";
        case FamilyKind::gegenbauer:
            return "gegenbauer(" + alpha_.str() + ")";
        case FamilyKind::legendre:
            return "legendre";
        case FamilyKind::chebyshev_t:
            return "chebyshev_t";
        case FamilyKind::chebyshev_u:
            return "chebyshev_u";
        case FamilyKind::hermite:
            return "hermite";
        case FamilyKind::laguerre:
            return "laguerre(" + alpha_.str() + ")";
        case FamilyKind::hahn:
            return "hahn(" + alpha_.str() + "," + beta_.str() + "," + std::to_string(big_n_) + ")";
    }
    return "?";
}

bool operator==(const FamilySpec& f, const FamilySpec& g) {
    return f.kind_ == g.kind_ && f.alpha_ == g.alpha_ && f.beta_ == g.beta_ && f.big_n_ == g.big_n_;
}

}  // namespace opexact
