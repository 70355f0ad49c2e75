#ifndef OPEXACT_QUADEXT_HPP
#define OPEXACT_QUADEXT_HPP

#include "opexact/rational.hpp"

namespace opexact {

/// Element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)).
///
/// The radicand d is carried per element and checked on every binary
/// operation; elements with b = 0 are "rational" (d = 0 sentinel) and combine
/// with any ambient field. d must not be the square of a rational, so a
/// nonzero element always has nonzero field norm a^2 - d b^2.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long n) : a_(n) {}
    QuadExt(int n) : a_(n) {}
    QuadExt(Rational a) : a_(std::move(a)) {}
    QuadExt(Rational a, Rational b, Rational d);

    const Rational& rational_part() const { return a_; }
    const Rational& irrational_part() const { return b_; }
    const Rational& radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    /// Conversion to Rational; only defined for rational elements.
    Rational as_rational() const;

    QuadExt conjugate() const { return raw(a_, -b_, d_); }
    /// Field norm a^2 - d b^2 (a Rational).
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }
    QuadExt inverse() const;

    QuadExt operator-() const { return raw(-a_, -b_, d_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Serialization "(a)+(b)*sqrt(d)" with each part in Rational form.
    std::string str() const;

private:
    static QuadExt raw(Rational a, Rational b, Rational d);
    static Rational merge_radicand(const QuadExt& x, const QuadExt& y);

    Rational a_, b_, d_;
};

QuadExt pochhammer(const QuadExt& a, long k);

inline std::string to_string(const QuadExt& v) { return v.str(); }

}  // namespace opexact

#endif
