#include "opexact/ortho.hpp"

#include <stdexcept>

namespace opexact {

std::vector<Poly> generate_ops(const FamilySpec& family, long nmax) {
    if (nmax < 0) throw std::out_of_range("generate_ops: nmax < 0");
    if (family.is_hahn() && nmax > family.max_degree())
        throw std::out_of_range("generate_ops: nmax exceeds N for a discrete family");
    std::vector<Poly> ps;
    ps.reserve(static_cast<size_t>(nmax) + 1);
    ps.push_back(Poly::constant(Rational(1)));
    Poly prev;  // p_{-1} = 0
    for (long n = 0; n < nmax; ++n) {
        RecurCoeffs rc = family.recur_coeffs(n);
        Poly next = Poly({rc.b, rc.a}) * ps.back() - rc.c * prev;
        prev = ps.back();
        ps.push_back(std::move(next));
    }
    return ps;
}

BasisCoeffs basis_expand(const Poly& p, const FamilySpec& family) {
    if (p.is_zero()) return BasisCoeffs{};
    long m = p.degree();
    if (family.is_hahn() && m > family.max_degree())
        throw std::out_of_range("basis_expand: degree exceeds N for a discrete family");
    std::vector<Poly> ps = generate_ops(family, m);
    std::vector<Rational> a(static_cast<size_t>(m) + 1, Rational(0));
    Poly rem = p;
    for (long k = m; k >= 0; --k) {
        if (rem.degree() < k) continue;
        Rational ak = rem.coeff(k) / family.leading_coeff(k);
        a[static_cast<size_t>(k)] = ak;
        rem -= ak * ps[static_cast<size_t>(k)];
    }
    if (!rem.is_zero()) throw std::logic_error("basis_expand: nonzero remainder");
    return BasisCoeffs{std::move(a)};
}

Poly basis_recombine(const BasisCoeffs& coeffs, const FamilySpec& family) {
    if (coeffs.values.empty()) return Poly();
    long m = static_cast<long>(coeffs.values.size()) - 1;
    std::vector<Poly> ps = generate_ops(family, m);
    Poly out;
    for (size_t k = 0; k < coeffs.values.size(); ++k) out += coeffs.values[k] * ps[k];
    return out;
}

Rational inner_product_basis(const Poly& p, const Poly& q, const FamilySpec& family) {
    BasisCoeffs a = basis_expand(p, family);
    BasisCoeffs b = basis_expand(q, family);
    size_t m = std::min(a.values.size(), b.values.size());
    Rational acc(0);
    for (size_t k = 0; k < m; ++k) {
        if (a.values[k].is_zero() || b.values[k].is_zero()) continue;
        acc += a.values[k] * b.values[k] * family.norm_ratio(static_cast<long>(k));
    }
    return acc;
}

Rational inner_product_n(const Poly& p, const Poly& q, const FamilySpec& family) {
    if (!family.is_hahn()) return inner_product_basis(p, q, family);
    long big_n = family.big_n();
    if (p.degree() > big_n || q.degree() > big_n)
        throw std::out_of_range("inner_product_n: degree exceeds N for a discrete family");
    Rational acc(0), h0(0);
    for (long x = 0; x <= big_n; ++x) {
        Rational w = family.hahn_weight(x);
        h0 += w;
        Rational xr(x);
        acc += p(xr) * q(xr) * w;
    }
    return acc / h0;
}

}  // namespace opexact
