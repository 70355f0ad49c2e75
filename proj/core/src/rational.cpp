#include "opexact/rational.hpp"

namespace opexact {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("Rational: " + str() + " is not a small integer");
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative index");
    Rational acc(1);
    for (long j = 0; j < k; ++j) acc *= a + Rational(j);
    return acc;
}

Rational factorial_r(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

Rational pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base.is_zero()) throw std::domain_error("pow: zero to negative power");
        return Rational(1) / pow(base, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
}

std::optional<Rational> sqrt_exact(const Rational& v) {
    if (v.sign() < 0) return std::nullopt;
    const mpz_class& num = v.raw().get_num();
    const mpz_class& den = v.raw().get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

void require_equal(const Rational& lhs, const Rational& rhs, const std::string& what) {
    if (lhs != rhs) throw identity_violation(what, lhs.str(), rhs.str());
}

}  // namespace opexact
