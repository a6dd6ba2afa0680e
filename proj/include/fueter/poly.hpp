#ifndef FUETER_POLY_HPP
#define FUETER_POLY_HPP

#include "fueter/scalar.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace fueter {

/// Exponent vector over x_1, ..., x_{4n} (stored 0-based).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int num_vars) : exps_(static_cast<std::size_t>(num_vars), 0) {}
    explicit MultiIndex(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {}

    int num_vars() const { return static_cast<int>(exps_.size()); }
    int operator[](int var) const { return exps_[static_cast<std::size_t>(var)]; }
    void set(int var, int exponent);
    void bump(int var, int delta);
    int degree() const;
    /// Bitmask of odd exponents; two monomials pair to a nonzero Gaussian moment only when their masks agree.
    std::uint64_t parity_mask() const;
    const std::vector<std::uint8_t>& exponents() const { return exps_; }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<std::uint8_t> exps_;
};

/// All exponent vectors of total degree exactly `degree`, in a fixed order.
std::vector<MultiIndex> monomials_of_degree(int num_vars, int degree);

/// Sparse polynomial with Gaussian-rational coefficients in real variables.
/// Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<MultiIndex, GaussRat>;

    Poly() = default;
    explicit Poly(int num_vars) : nvars_(num_vars) {}

    static Poly constant(int num_vars, const GaussRat& c);
    static Poly variable(int num_vars, int var);
    static Poly monomial(const MultiIndex& alpha, const GaussRat& c);

    int num_vars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    GaussRat coeff(const MultiIndex& alpha) const;

    void add_term(const MultiIndex& alpha, const GaussRat& c);

    Poly conj() const;
    Poly derivative(int var) const;
    Poly homogeneous_part(int degree) const;
    GaussRat eval(std::span<const Rational> point) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussRat& c);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= GaussRat(-1); }
    friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
    friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    void adopt_vars(const Poly& o);

    int nvars_ = 0;
    Terms terms_;
};

/// sum_j x_j^2
Poly norm_squared_poly(int num_vars);

}  // namespace fueter

#endif  // FUETER_POLY_HPP
