#include "acs/scalar.hpp"

#include <ostream>

#include "acs/errors.hpp"

namespace acs {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Scalar Scalar::rational(long num, long den) { return Scalar(make_rational(num, den)); }

Scalar Scalar::imaginary(long num, long den) {
    return Scalar(Rational(0), make_rational(num, den));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivByZero();
    Rational n = o.norm();
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

namespace {

std::string imag_part_str(const Rational& im) {
    Rational a = abs(im);
    if (a == 1) return "i";
    return a.get_str() + "i";
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (im_ == 0) return re_.get_str();
    std::string im_str = imag_part_str(im_);
    if (re_ == 0) return im_ < 0 ? "-" + im_str : im_str;
    return re_.get_str() + (im_ < 0 ? "-" : "+") + im_str;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace acs
