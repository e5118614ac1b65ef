#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace acs {

using Rational = mpq_class;

/// Builds a canonicalized rational num/den.
Rational make_rational(long num, long den = 1);

/// An exact Gaussian rational re + im*i.  All core arithmetic of the
/// engine runs over this field; no floating point anywhere.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(Rational re) : re_(std::move(re)), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar rational(long num, long den = 1);
    /// num/den * i
    static Scalar imaginary(long num = 1, long den = 1);
    static Scalar i() { return imaginary(); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// re^2 + im^2, the multiplicative norm down to the rationals.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Exact division; throws DivByZero when o == 0.
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Renders in the exact-rational surface syntax: "0", "-1/2", "i",
    /// "1/4i", "3/4+1/2i", "3/4-1/2i".
    std::string str() const;
    /// True when str() needs wrapping before a '*' (both parts nonzero).
    bool needs_parens() const { return re_ != 0 && im_ != 0; }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    Rational re_;
    Rational im_;
};

} // namespace acs
