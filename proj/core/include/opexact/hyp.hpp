#ifndef OPEXACT_HYP_HPP
#define OPEXACT_HYP_HPP

#include <vector>

#include "opexact/poly.hpp"
#include "opexact/quadext.hpp"

namespace opexact {

/// Terminating hypergeometric series sum_{k=0}^{trunc} prod (num)_k /
/// prod (den)_k * z^k / k!. Termination is always explicit; it is never
/// inferred from the parameters.
template <class S>
struct TruncatedSeries {
    std::vector<S> num;
    std::vector<S> den;
    S z;
    long trunc = 0;
};

/// Evaluates a truncated series after cancelling parameters that appear
/// identically in both rows (the verified series carry pairs like -n and
/// n+a+b+2 in numerator and denominator). Terms are accumulated by running
/// ratio updates. Throws if a surviving denominator Pochhammer vanishes
/// within range.
template <class S>
S eval_truncated(TruncatedSeries<S> s) {
    if (s.trunc < 0) return S(0);
    for (size_t i = 0; i < s.num.size();) {
        bool cancelled = false;
        for (size_t j = 0; j < s.den.size(); ++j) {
            if (s.num[i] == s.den[j]) {
                s.num.erase(s.num.begin() + static_cast<long>(i));
                s.den.erase(s.den.begin() + static_cast<long>(j));
                cancelled = true;
                break;
            }
        }
        if (!cancelled) ++i;
    }
    S term(1), acc(1);
    for (long k = 0; k + 1 <= s.trunc; ++k) {
        S ratio = s.z / S(Rational(k + 1));
        for (const S& a : s.num) ratio *= a + S(Rational(k));
        for (const S& b : s.den) {
            S bk = b + S(Rational(k));
            if (bk.is_zero())
                throw std::domain_error("eval_truncated: denominator parameter vanishes in range");
            ratio = ratio / bk;
        }
        term *= ratio;
        acc += term;
    }
    return acc;
}

/// 2F1(-n, b; c; 1) = (c-b)_n / (c)_n; the closed form is returned and the
/// series equality asserted.
Rational chu_vandermonde(long n, const Rational& b, const Rational& c);

/// 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
Rational pfaff_saalschutz(const Rational& a, const Rational& b, const Rational& c, long n);

/// The contiguous relation F(a_1..a_r; b_1..b_s; z) =
/// F(a_1..a_{r-1}, a_r - 1; ...) + (a_1...a_{r-1} z / (b_1...b_s)) *
/// F(a_1+1..a_{r-1}+1, a_r; b_1+1..b_s+1; z), asserted exactly on
/// terminating instances. a.back() is the decremented parameter.
void contiguous_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                      const Rational& z, long trunc);

/// Terminating Appell F2 double sum
/// sum_{m,j} (a)_{m+j} (b1)_m (b2)_j / ((c1)_m (c2)_j m! j!) x^m y^j.
Rational appell_f2(const Rational& a, const Rational& b1, const Rational& b2, const Rational& c1,
                   const Rational& c2, const Rational& x, const Rational& y, long trunc1,
                   long trunc2);

/// A hypergeometric term c_k = coeff * prod (num)_k / (prod (den)_k k!) *
/// z^k * factor(k), with factor a polynomial in k.
struct HyperTerm {
    Rational coeff = Rational(1);
    std::vector<Rational> num;
    std::vector<Rational> den;
    Rational z = Rational(1);
    Poly factor = Poly::constant(Rational(1));

    Rational value(long k) const;
};

/// Proof that sum_{k=0}^n c_k = s_n: checks c_0 = s_0 and s_n - s_{n-1} = c_n
/// for 1 <= n <= nmax. Throws identity_violation naming the first bad index.
void indefinite_sum_certificate(const HyperTerm& term, const HyperTerm& closed, long nmax);

}  // namespace opexact

#endif
