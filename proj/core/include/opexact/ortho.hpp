#ifndef OPEXACT_ORTHO_HPP
#define OPEXACT_ORTHO_HPP

#include <vector>

#include "opexact/family.hpp"
#include "opexact/poly.hpp"

namespace opexact {

/// Coefficients a_k of p = sum a_k p_k in a family's orthogonal basis.
struct BasisCoeffs {
    std::vector<Rational> values;
};

/// p_0 .. p_nmax from the family's three-term recurrence.
std::vector<Poly> generate_ops(const FamilySpec& family, long nmax);

/// Top-down expansion by leading-term elimination.
BasisCoeffs basis_expand(const Poly& p, const FamilySpec& family);

/// Reassembles sum a_k p_k; inverse of basis_expand.
Poly basis_recombine(const BasisCoeffs& coeffs, const FamilySpec& family);

/// <p, q> / h_0, exact. Continuous families go through basis expansion;
/// Hahn sums p(x) q(x) w_x over x = 0..N directly.
Rational inner_product_n(const Poly& p, const Poly& q, const FamilySpec& family);

/// Basis-expansion route, defined for every family (Hahn cross-check path).
Rational inner_product_basis(const Poly& p, const Poly& q, const FamilySpec& family);

}  // namespace opexact

#endif
