#include "opexact/kernel.hpp"

#include <stdexcept>

namespace opexact {

namespace {

// k_n / (k_{n+1} h_n/h_0), the prefactor of the two-term kernel forms.
Rational two_term_prefactor(const FamilySpec& family, long n) {
    return family.leading_coeff(n) / (family.leading_coeff(n + 1) * family.norm_ratio(n));
}

FamilySpec shifted_family(const FamilySpec& family, const Rational& x0) {
    switch (family.kind()) {
        case FamilyKind::jacobi:
        case FamilyKind::gegenbauer:
        case FamilyKind::legendre:
        case FamilyKind::chebyshev_t:
        case FamilyKind::chebyshev_u:
            if (x0 != Rational(1)) break;
            return FamilySpec::jacobi(family.alpha() + Rational(1), family.beta());
        case FamilyKind::laguerre:
            if (!x0.is_zero()) break;
            return FamilySpec::laguerre(family.alpha() + Rational(1));
        case FamilyKind::hahn:
            if (x0 != Rational(family.big_n())) break;
            return FamilySpec::hahn(family.alpha(), family.beta() + Rational(1), family.big_n() - 1);
        default:
            break;
    }
    throw std::domain_error("kernel_poly: no kernel family known for " + family.label() +
                            " at x0 = " + x0.str());
}

}  // namespace

Rational cd_kernel(const FamilySpec& family, long n, const Rational& x, const Rational& y,
                   KernelForm form) {
    if (form == KernelForm::sum) {
        std::vector<Poly> ps = generate_ops(family, n);
        Rational acc(0);
        for (long k = 0; k <= n; ++k)
            acc += ps[static_cast<size_t>(k)](x) * ps[static_cast<size_t>(k)](y) / family.norm_ratio(k);
        return acc;
    }
    if (x == y) throw std::domain_error("cd_kernel: quotient form needs x != y");
    std::vector<Poly> ps = generate_ops(family, n + 1);
    const Poly& pn = ps[static_cast<size_t>(n)];
    const Poly& pn1 = ps[static_cast<size_t>(n + 1)];
    return two_term_prefactor(family, n) * (pn1(x) * pn(y) - pn(x) * pn1(y)) / (x - y);
}

Rational cd_confluent(const FamilySpec& family, long n, const Rational& x) {
    std::vector<Poly> ps = generate_ops(family, n + 1);
    const Poly& pn = ps[static_cast<size_t>(n)];
    const Poly& pn1 = ps[static_cast<size_t>(n + 1)];
    return two_term_prefactor(family, n) *
           (pn1.derivative()(x) * pn(x) - pn.derivative()(x) * pn1(x));
}

Rational cd_discrete(const FamilySpec& family, long n, const Rational& x) {
    if (!family.is_hahn()) throw std::domain_error("cd_discrete: needs a discrete family");
    std::vector<Poly> ps = generate_ops(family, n + 1);
    const Poly& pn = ps[static_cast<size_t>(n)];
    const Poly& pn1 = ps[static_cast<size_t>(n + 1)];
    // (Delta p)(x-1) = p(x) - p(x-1)
    Rational dpn1 = pn1(x) - pn1(x - Rational(1));
    Rational dpn = pn(x) - pn(x - Rational(1));
    return two_term_prefactor(family, n) * (pn(x) * dpn1 - pn1(x) * dpn);
}

Poly cd_kernel_poly(const FamilySpec& family, long n, const Rational& y) {
    std::vector<Poly> ps = generate_ops(family, n);
    Poly acc;
    for (long k = 0; k <= n; ++k)
        acc += (ps[static_cast<size_t>(k)](y) / family.norm_ratio(k)) * ps[static_cast<size_t>(k)];
    return acc;
}

KernelPolyResult kernel_poly(const FamilySpec& family, const Rational& x0, long n) {
    std::vector<Poly> ps = generate_ops(family, n);
    Rational pnx0 = ps[static_cast<size_t>(n)](x0);
    if (pnx0.is_zero()) throw std::domain_error("kernel_poly: p_n vanishes at x0");
    FamilySpec target = shifted_family(family, x0);
    Rational cn = target.leading_coeff(n) * family.norm_ratio(n) / (family.leading_coeff(n) * pnx0);
    Poly q;
    for (long k = 0; k <= n; ++k)
        q += (cn * ps[static_cast<size_t>(k)](x0) / family.norm_ratio(k)) * ps[static_cast<size_t>(k)];
    require_equal(q, generate_ops(target, n)[static_cast<size_t>(n)],
                  "kernel polynomial vs parameter-shifted family");
    return KernelPolyResult{std::move(q), std::move(cn), x0};
}

Rational reproduce(const FamilySpec& family, long n, const Poly& p, const Rational& y) {
    if (p.degree() > n) throw std::domain_error("reproduce: degree exceeds kernel order");
    return inner_product_n(p, cd_kernel_poly(family, n, y), family);
}

Rational cross_kernel_check(const FamilySpec& family, long n, const Rational& x0,
                            const Rational& x1) {
    Rational direct = cd_kernel(family, n, x0, x1, KernelForm::sum);
    Rational via_ip =
        inner_product_n(cd_kernel_poly(family, n, x0), cd_kernel_poly(family, n, x1), family);
    require_equal(direct, via_ip, "kernel value vs kernel-kernel inner product");
    return direct;
}

}  // namespace opexact
