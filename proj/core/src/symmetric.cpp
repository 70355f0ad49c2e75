#include "opexact/symmetric.hpp"

#include <stdexcept>

namespace opexact {

namespace {

void need_even(const FamilySpec& family) {
    if (!family.is_even())
        throw std::domain_error("symmetric: " + family.label() + " does not have an even measure");
}

}  // namespace

std::vector<Rational> ps_integral_seq(const FamilySpec& family, long nmax, PSMethod method) {
    need_even(family);
    if (nmax < 0) throw std::out_of_range("ps_integral_seq: nmax < 0");
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(nmax) + 1);
    switch (method) {
        case PSMethod::recurrence: {
            Rational k1 = family.leading_coeff(1);
            Rational val = k1 * k1;
            out.push_back(val);
            for (long n = 1; n <= nmax; ++n) {
                Rational a2n = family.recur_coeffs(2 * n).a;
                Rational c2n = family.recur_coeffs(2 * n).c;
                val = c2n * c2n * val + a2n * a2n * family.norm_ratio(2 * n);
                out.push_back(val);
            }
            break;
        }
        case PSMethod::direct: {
            std::vector<Poly> ps = generate_ops(family, 2 * nmax + 1);
            for (long n = 0; n <= nmax; ++n) {
                Poly q = deflate_at_zero(ps[static_cast<size_t>(2 * n + 1)]);
                out.push_back(inner_product_n(q, q, family));
            }
            break;
        }
        case PSMethod::cd_sum: {
            Rational sum(0);
            for (long n = 0; n <= nmax; ++n) {
                Rational p2n0 = family.even_value_at_zero(n);
                sum += p2n0 * p2n0 / family.norm_ratio(2 * n);
                Rational pref = family.leading_coeff(2 * n + 1) * family.norm_ratio(2 * n) /
                                (family.leading_coeff(2 * n) * p2n0);
                out.push_back(pref * pref * sum);
            }
            break;
        }
        case PSMethod::closed_form:
            for (long n = 0; n <= nmax; ++n) out.push_back(ps_closed_form(family, n));
            break;
    }
    return out;
}

Rational ps_integral(const FamilySpec& family, long n, PSMethod method) {
    if (method == PSMethod::closed_form) return ps_closed_form(family, n);
    return ps_integral_seq(family, n, method).back();
}

Rational ps_closed_form(const FamilySpec& family, long n) {
    need_even(family);
    return family.leading_coeff(2 * n + 1) * family.norm_ratio(2 * n) *
           family.odd_deriv_at_zero(n) / (family.leading_coeff(2 * n) * family.even_value_at_zero(n));
}

Rational gegenbauer_ps_ratio(const Rational& alpha, long n) {
    Rational num = pochhammer(alpha + Rational(1), 2 * n + 1);
    return num * num /
           (pochhammer(Rational(2) * alpha + Rational(2), 2 * n) * factorial_r(2 * n + 1));
}

Rational ps_projection_check(const FamilySpec& family, long n, const Poly& p) {
    need_even(family);
    if (p.degree() > 2 * n + 1) throw std::domain_error("ps_projection_check: degree exceeds 2n+1");
    std::vector<Poly> ps = generate_ops(family, 2 * n + 1);
    Poly q = deflate_at_zero(ps[static_cast<size_t>(2 * n + 1)]);
    Rational pref = family.leading_coeff(2 * n) * family.even_value_at_zero(n) /
                    (family.leading_coeff(2 * n + 1) * family.norm_ratio(2 * n));
    Rational proj = pref * inner_product_n(p, q, family);
    require_equal(proj, p(Rational(0)), "projection onto degree <= 2n+1 evaluated at 0");
    return proj;
}

void ps_cd_proportionality(const FamilySpec& family, long n) {
    need_even(family);
    std::vector<Poly> ps = generate_ops(family, 2 * n + 1);
    Poly q = deflate_at_zero(ps[static_cast<size_t>(2 * n + 1)]);
    Rational pref = family.leading_coeff(2 * n) * family.even_value_at_zero(n) /
                    (family.leading_coeff(2 * n + 1) * family.norm_ratio(2 * n));
    Poly lhs_even;
    for (long k = 0; k <= 2 * n; ++k)
        lhs_even += (ps[static_cast<size_t>(k)](Rational(0)) / family.norm_ratio(k)) *
                    ps[static_cast<size_t>(k)];
    require_equal(lhs_even, pref * q, "even-order kernel at 0 vs deflated odd polynomial");
    Poly lhs_odd = lhs_even + (ps[static_cast<size_t>(2 * n + 1)](Rational(0)) /
                               family.norm_ratio(2 * n + 1)) *
                                  ps[static_cast<size_t>(2 * n + 1)];
    require_equal(lhs_odd, pref * q, "odd-order kernel at 0 adds nothing");
}

Rational chebyshev_ps_value(const FamilySpec& family, long n) {
    Rational r = family.rescale(2 * n + 1);
    return r * r * ps_integral(family, n, PSMethod::recurrence) * family.h0_in_pi_units();
}

}  // namespace opexact
