#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace strata {

using Rational = boost::multiprecision::cpp_rational;

// Gaussian rational a + b*i with exact components. All coefficient
// arithmetic in the library goes through this type; there is no floating
// point anywhere in the computation path.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}           // NOLINT: implicit by design
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

// Canonical text form, the inverse of parse_scalar:
//   real           -> "p/q", or "p" when the denominator is 1
//   imaginary only -> "p/q*i" ("i", "-i" for unit coefficients)
//   mixed          -> "p/q+r/s*i" (sign of the imaginary part replaces '+')
std::string to_string(const Scalar& s);

// Accepts the canonical form above plus leniencies: surrounding whitespace
// and a leading '+'. Throws ParseError on anything else.
Scalar parse_scalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace strata
