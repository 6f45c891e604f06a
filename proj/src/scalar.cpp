#include "strata/scalar.hpp"

#include "strata/errors.hpp"

#include <cctype>
#include <ostream>

namespace strata {

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError(DomainError::Code::BadWeight, "division by zero");
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

namespace {

std::string rational_str(const Rational& r) { return r.str(); }

// Prints the imaginary component with its '*i' suffix, assuming the sign has
// already been emitted by the caller when part of a mixed value.
std::string imag_str(const Rational& r) {
    if (r == 1) return "i";
    if (r == -1) return "-i";
    return rational_str(r) + "*i";
}

} // namespace

std::string to_string(const Scalar& s) {
    if (s.is_real()) return rational_str(s.re());
    if (s.re() == 0) return imag_str(s.im());
    std::string out = rational_str(s.re());
    if (s.im() > 0) out += "+";
    return out + imag_str(s.im());
}

namespace {

// Parses "p" or "p/q" starting at pos; advances pos past what was consumed.
Rational parse_rational_at(const std::string& t, size_t& pos) {
    size_t start = pos;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == digits) throw ParseError("scalar", "expected digits in '" + t + "'");
    std::string num = t.substr(start, pos - start);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == dstart) throw ParseError("scalar", "expected denominator in '" + t + "'");
        std::string den = t.substr(dstart, pos - dstart);
        if (Rational(boost::multiprecision::cpp_int(den)) == 0)
            throw ParseError("scalar", "zero denominator in '" + t + "'");
        return Rational(boost::multiprecision::cpp_int(num),
                        boost::multiprecision::cpp_int(den));
    }
    return Rational(boost::multiprecision::cpp_int(num));
}

} // namespace

Scalar parse_scalar(const std::string& text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("scalar", "empty scalar");

    size_t pos = 0;
    // A term is either a rational, or a rational (possibly implicit +/-1)
    // followed by '*i', or bare 'i'. At most one of each kind may appear.
    bool have_re = false, have_im = false;
    Rational re = 0, im = 0;
    bool first = true;
    while (pos < t.size()) {
        if (!first && t[pos] != '+' && t[pos] != '-')
            throw ParseError("scalar", "expected sign between terms in '" + text + "'");
        // Bare 'i' with optional sign.
        size_t save = pos;
        Rational sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            if (t[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos < t.size() && t[pos] == 'i') {
            ++pos;
            if (have_im) throw ParseError("scalar", "repeated imaginary term in '" + text + "'");
            have_im = true;
            im = sign;
            first = false;
            continue;
        }
        pos = save;
        Rational value = parse_rational_at(t, pos);
        if (pos < t.size() && t[pos] == '*') {
            ++pos;
            if (pos >= t.size() || t[pos] != 'i')
                throw ParseError("scalar", "expected 'i' after '*' in '" + text + "'");
            ++pos;
            if (have_im) throw ParseError("scalar", "repeated imaginary term in '" + text + "'");
            have_im = true;
            im = value;
        } else {
            if (have_re) throw ParseError("scalar", "repeated real term in '" + text + "'");
            have_re = true;
            re = value;
        }
        first = false;
    }
    return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

} // namespace strata
