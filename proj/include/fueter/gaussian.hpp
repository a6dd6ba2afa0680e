#ifndef FUETER_GAUSSIAN_HPP
#define FUETER_GAUSSIAN_HPP

// Exact inner products against the weight e^{-2|x|^2} on R^{4n}. Every such
// integral of a polynomial is a Gaussian rational times (pi/2)^{2n}; only the
// rational part is stored.

#include "fueter/poly.hpp"
#include "fueter/sections.hpp"

#include <string>

namespace fueter {

/// value * (pi/2)^{2n}
struct WeightedScalar {
    GaussRat value;
    int n = 1;

    bool is_zero() const { return value.is_zero(); }
    double to_double() const;

    WeightedScalar& operator+=(const WeightedScalar& o);
    WeightedScalar& operator-=(const WeightedScalar& o);
    WeightedScalar& operator*=(const Rational& s) {
        value *= s;
        return *this;
    }
    friend WeightedScalar operator+(WeightedScalar a, const WeightedScalar& b) { return a += b; }
    friend WeightedScalar operator-(WeightedScalar a, const WeightedScalar& b) { return a -= b; }
    friend WeightedScalar operator*(const Rational& s, WeightedScalar a) { return a *= s; }
    friend bool operator==(const WeightedScalar&, const WeightedScalar&) = default;
};

/// One-dimensional moment int t^m e^{-2t^2} dt in units of (pi/2)^{1/2}.
Rational moment_1d(int m);

/// int x^alpha e^{-2|x|^2} dV; alpha has 4n entries.
WeightedScalar monomial_moment(const MultiIndex& alpha);

/// (p, q) = int p conj(q) e^{-2|x|^2} dV
WeightedScalar ip_poly(const Poly& p, const Poly& q);

/// Induced inner product: sum over stored components weighted by slot
/// multiplicity (and the factor 2 for unordered unprimed pairs).
template <Space S>
WeightedScalar ip_section(const Section<S>& f, const Section<S>& g) {
    f.check_same(g);
    WeightedScalar out{GaussRat{}, f.params().n()};
    for (int i = 0; i < f.size(); ++i) {
        if (f.component(i).is_zero() || g.component(i).is_zero()) continue;
        WeightedScalar term = ip_poly(f.component(i), g.component(i));
        out += Rational(f.multiplicity(i)) * term;
    }
    return out;
}

/// <f, f>; its rational part is real and nonnegative.
template <Space S>
WeightedScalar norm_sq(const Section<S>& f) {
    WeightedScalar out = ip_section(f, f);
    out.value.im = 0;
    return out;
}

}  // namespace fueter

#endif  // FUETER_GAUSSIAN_HPP
