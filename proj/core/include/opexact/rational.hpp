#ifndef OPEXACT_RATIONAL_HPP
#define OPEXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opexact {

/// Error thrown when an exact identity that must hold fails to hold.
class identity_violation : public std::runtime_error {
public:
    identity_violation(const std::string& what, std::string lhs, std::string rhs)
        : std::runtime_error(what + ": " + lhs + " != " + rhs),
          lhs_(std::move(lhs)),
          rhs_(std::move(rhs)) {}

    const std::string& lhs() const { return lhs_; }
    const std::string& rhs() const { return rhs_; }

private:
    std::string lhs_, rhs_;
};

/// Arbitrary-precision rational, always in canonical form: positive
/// denominator, gcd(|num|, den) = 1, zero stored as 0/1.
///
/// Thin value wrapper over GMP's mpq_class. Wrapping (instead of using
/// mpq_class directly) pins down canonicalization on construction and keeps
/// gmpxx expression templates out of generic code.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (arbitrary precision, optional sign).
    static Rational from_string(std::string_view s);

    /// Canonical serialization: "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    /// The value as a long; requires an integer value that fits.
    long to_long() const;
    double to_double() const { return v_.get_d(); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

/// (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, long k);

/// n! as a Rational.
Rational factorial_r(long n);

/// Integer power, negative exponents allowed for nonzero base.
Rational pow(const Rational& base, long e);

/// Exact square root if the argument is the square of a rational.
std::optional<Rational> sqrt_exact(const Rational& v);

inline std::string to_string(const Rational& v) { return v.str(); }

/// Throws identity_violation unless lhs == rhs.
void require_equal(const Rational& lhs, const Rational& rhs, const std::string& what);

}  // namespace opexact

#endif
