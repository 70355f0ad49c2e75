#ifndef OPEXACT_POLY_HPP
#define OPEXACT_POLY_HPP

#include <initializer_list>
#include <vector>

#include "opexact/rational.hpp"

namespace opexact {

/// Dense univariate polynomial with exact Rational coefficients.
/// coeff(i) is the coefficient of x^i; trailing zeros are trimmed, so the
/// zero polynomial has an empty coefficient list and degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Rational v) { return Poly({std::move(v)}); }
    static Poly monomial(long deg, Rational coeff);
    static Poly x() { return monomial(1, Rational(1)); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^i; zero beyond the stored degree.
    const Rational& coeff(long i) const;
    Rational leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(const Rational& s, const Poly& p);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return p.c_ != q.c_; }

    Poly derivative() const;
    /// p(x + h), exact Taylor shift.
    Poly shifted(const Rational& h) const;
    /// p(q(x)), exact composition.
    Poly compose(const Poly& q) const;

    /// Horner evaluation, exact in the scalar's field (Rational or QuadExt).
    template <class S>
    S eval(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }
    Rational operator()(const Rational& x) const { return eval(x); }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// q with x*q(x) = p(x); requires p(0) == 0 exactly.
Poly deflate_at_zero(const Poly& p);

void require_equal(const Poly& lhs, const Poly& rhs, const std::string& what);

}  // namespace opexact

#endif
