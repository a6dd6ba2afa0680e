#ifndef FUETER_SCALAR_HPP
#define FUETER_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fueter {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact complex number with rational parts, always kept canonical by GMP.
struct GaussRat {
    Rational re;
    Rational im;

    GaussRat() = default;
    GaussRat(Rational r) : re(std::move(r)) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(r) {}
    GaussRat(long r, long i) : re(r), im(i) {}

    static GaussRat i() { return {0, 1}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussRat conj() const { return {re, -im}; }
    /// |z|^2, rational.
    Rational norm() const { return re * re + im * im; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussRat& operator*=(const Rational& s) {
        re *= s;
        im *= s;
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator*(GaussRat a, const Rational& s) { return a *= s; }
    friend GaussRat operator*(const Rational& s, GaussRat a) { return a *= s; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

/// Gaussian integer used by the fraction-free eliminator.
struct GaussInt {
    Integer re;
    Integer im;

    GaussInt() = default;
    GaussInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long r) : re(r) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

/// Exact quotient a / b in Z[i]; throws std::domain_error when b does not divide a.
GaussInt exact_div(const GaussInt& a, const GaussInt& b);

GaussRat to_rat(const GaussInt& z);

/// Canonical "p/q" string (denominator always present, "0/1" for zero).
std::string to_string(const Rational& q);
std::string to_string(const GaussRat& z);

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

Rational binomial(long n, long r);

/// p/q in lowest terms.
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace fueter

#endif  // FUETER_SCALAR_HPP
