#include "opexact/poly.hpp"

#include <algorithm>

namespace opexact {

namespace {
const Rational kZero(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(long deg, Rational coeff) {
    if (deg < 0) throw std::invalid_argument("Poly: negative degree");
    if (coeff.is_zero()) return Poly();
    std::vector<Rational> c(static_cast<size_t>(deg) + 1, Rational(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

const Rational& Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

Rational Poly::leading() const {
    return c_.empty() ? Rational(0) : c_.back();
}

Poly Poly::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(-v);
    return Poly(std::move(c));
}

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = p.coeff(static_cast<long>(i)) + q.coeff(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Rational> c(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c;
    c.reserve(p.c_.size());
    for (const auto& v : p.c_) c.push_back(s * v);
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c;
    c.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c.push_back(Rational(static_cast<long>(i)) * c_[i]);
    return Poly(std::move(c));
}

Poly Poly::shifted(const Rational& h) const {
    // Horner in (x + h).
    Poly xh = Poly({h, Rational(1)});
    return compose(xh);
}

Poly Poly::compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly::constant(*it);
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const Rational& v = coeff(i);
        if (v.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + v.str() + ")";
        if (i >= 1) out += "*x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Poly deflate_at_zero(const Poly& p) {
    if (p.is_zero()) return Poly();
    if (!p.coeff(0).is_zero())
        throw std::domain_error("deflate_at_zero: nonzero constant term " + p.coeff(0).str());
    std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
    return Poly(std::move(c));
}

void require_equal(const Poly& lhs, const Poly& rhs, const std::string& what) {
    if (lhs != rhs) throw identity_violation(what, lhs.str(), rhs.str());
}

}  // namespace opexact
