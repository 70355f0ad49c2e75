#include "opexact/quadext.hpp"

namespace opexact {

QuadExt::QuadExt(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_.is_zero()) {
        d_ = Rational(0);
        return;
    }
    if (d_.sign() <= 0) throw std::invalid_argument("QuadExt: radicand must be positive");
    if (sqrt_exact(d_)) throw std::invalid_argument("QuadExt: radicand " + d_.str() + " is a perfect square");
}

QuadExt QuadExt::raw(Rational a, Rational b, Rational d) {
    QuadExt r;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    r.d_ = r.b_.is_zero() ? Rational(0) : std::move(d);
    return r;
}

Rational QuadExt::as_rational() const {
    if (!is_rational()) throw std::domain_error("QuadExt: " + str() + " is not rational");
    return a_;
}

Rational QuadExt::merge_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.b_.is_zero()) return y.d_;
    if (y.b_.is_zero()) return x.d_;
    if (x.d_ != y.d_)
        throw std::domain_error("QuadExt: mixing distinct radicands " + x.d_.str() + " and " + y.d_.str());
    return x.d_;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    Rational d = QuadExt::merge_radicand(x, y);
    return QuadExt::raw(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    Rational d = QuadExt::merge_radicand(x, y);
    return QuadExt::raw(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw std::domain_error("QuadExt: division by zero");
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("QuadExt: zero norm for nonzero element");
    return raw(a_ / n, -b_ / n, d_);
}

std::string QuadExt::str() const {
    return "(" + a_.str() + ")+(" + b_.str() + ")*sqrt(" + d_.str() + ")";
}

QuadExt pochhammer(const QuadExt& a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative index");
    QuadExt acc(1);
    for (long j = 0; j < k; ++j) acc *= a + QuadExt(Rational(j));
    return acc;
}

}  // namespace opexact
