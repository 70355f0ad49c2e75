#include "opexact/hyp.hpp"

namespace opexact {

Rational chu_vandermonde(long n, const Rational& b, const Rational& c) {
    if (n < 0) throw std::invalid_argument("chu_vandermonde: n < 0");
    Rational closed = pochhammer(c - b, n) / pochhammer(c, n);
    TruncatedSeries<Rational> s{{Rational(-n), b}, {c}, Rational(1), n};
    require_equal(eval_truncated(s), closed, "Chu-Vandermonde closed form");
    return closed;
}

Rational pfaff_saalschutz(const Rational& a, const Rational& b, const Rational& c, long n) {
    if (n < 0) throw std::invalid_argument("pfaff_saalschutz: n < 0");
    Rational closed = pochhammer(c - a, n) * pochhammer(c - b, n) /
                      (pochhammer(c, n) * pochhammer(c - a - b, n));
    Rational e = Rational(1) + a + b - c - Rational(n);
    TruncatedSeries<Rational> s{{Rational(-n), a, b}, {c, e}, Rational(1), n};
    require_equal(eval_truncated(s), closed, "Pfaff-Saalschutz closed form");
    return closed;
}

void contiguous_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                      const Rational& z, long trunc) {
    if (a.empty()) throw std::invalid_argument("contiguous_check: empty upper row");
    TruncatedSeries<Rational> lhs{a, b, z, trunc};

    std::vector<Rational> a_dec = a;
    a_dec.back() -= Rational(1);
    TruncatedSeries<Rational> first{a_dec, b, z, trunc};

    Rational pref = z;
    std::vector<Rational> a_inc;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        pref *= a[i];
        a_inc.push_back(a[i] + Rational(1));
    }
    a_inc.push_back(a.back());
    std::vector<Rational> b_inc;
    for (const Rational& bi : b) {
        pref /= bi;
        b_inc.push_back(bi + Rational(1));
    }
    TruncatedSeries<Rational> second{a_inc, b_inc, z, trunc};

    require_equal(eval_truncated(lhs), eval_truncated(first) + pref * eval_truncated(second),
                  "contiguous relation");
}

Rational appell_f2(const Rational& a, const Rational& b1, const Rational& b2, const Rational& c1,
                   const Rational& c2, const Rational& x, const Rational& y, long trunc1,
                   long trunc2) {
    Rational acc(0);
    for (long m = 0; m <= trunc1; ++m) {
        Rational outer = pochhammer(b1, m) / (pochhammer(c1, m) * factorial_r(m)) * pow(x, m);
        for (long j = 0; j <= trunc2; ++j) {
            acc += pochhammer(a, m + j) * outer * pochhammer(b2, j) /
                   (pochhammer(c2, j) * factorial_r(j)) * pow(y, j);
        }
    }
    return acc;
}

Rational HyperTerm::value(long k) const {
    if (k < 0) throw std::invalid_argument("HyperTerm: k < 0");
    Rational v = coeff * pow(z, k) * factor(Rational(k)) / factorial_r(k);
    for (const Rational& a : num) v *= pochhammer(a, k);
    for (const Rational& b : den) {
        Rational p = pochhammer(b, k);
        if (p.is_zero()) throw std::domain_error("HyperTerm: denominator Pochhammer vanishes");
        v /= p;
    }
    return v;
}

void indefinite_sum_certificate(const HyperTerm& term, const HyperTerm& closed, long nmax) {
    require_equal(term.value(0), closed.value(0), "sum certificate at n = 0");
    for (long n = 1; n <= nmax; ++n)
        require_equal(closed.value(n) - closed.value(n - 1), term.value(n),
                      "sum certificate step n = " + std::to_string(n));
}

}  // namespace opexact
