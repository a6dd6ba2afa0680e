#ifndef FUETER_FIELDS_HPP
#define FUETER_FIELDS_HPP

// The complex vector fields Z_{AA'} on R^{4n}, their index-raised forms, the
// linear forms z_{AA'}, and the weighted adjoints delta^A_{A'} for the weight
// phi = |x|^2.

#include "fueter/poly.hpp"
#include "fueter/spinor.hpp"

#include <vector>

namespace fueter {

/// A constant-coefficient first-order operator sum_j c_j d/dx_j.
class FirstOrderOp {
public:
    explicit FirstOrderOp(int num_vars) : coeffs_(static_cast<std::size_t>(num_vars)) {}

    int num_vars() const { return static_cast<int>(coeffs_.size()); }
    const GaussRat& coeff(int var) const { return coeffs_[static_cast<std::size_t>(var)]; }
    void set_coeff(int var, GaussRat c) { coeffs_[static_cast<std::size_t>(var)] = std::move(c); }

    Poly apply(const Poly& p) const;
    /// Conjugates the coefficients (the variables are real).
    FirstOrderOp conj() const;
    /// The linear polynomial obtained by replacing d/dx_j with x_j.
    Poly symbol() const;

    FirstOrderOp& operator+=(const FirstOrderOp& o);
    FirstOrderOp& operator*=(const GaussRat& c);
    friend FirstOrderOp operator*(int s, FirstOrderOp op) { return op *= GaussRat(s); }
    friend bool operator==(const FirstOrderOp&, const FirstOrderOp&) = default;

private:
    std::vector<GaussRat> coeffs_;
};

enum class FieldVariant {
    Lowered,        ///< Z_{AA'}
    Raised,         ///< Z_A^{A'}  = sum_{B'} Z_{AB'} eps^{B'A'}
    ConjRaised,     ///< Z^{AA'}   = sum_{B,B'} Z_{BB'} eps^{BA} eps^{B'A'}
    Mixed,          ///< Z^A_{A'}  = sum_B Z_{BA'} eps^{BA}
    LinearForm,     ///< z_{AA'}, a degree-one polynomial rather than an operator
};

struct VectorFieldId {
    int a;
    int aprime;
    FieldVariant variant;
};

/// Operator for any differential variant; throws std::invalid_argument for LinearForm.
FirstOrderOp field_operator(const ComplexParams& params, const VectorFieldId& id);

/// z_{AA'} as a polynomial in the 4n coordinates.
Poly z_linear_form(const ComplexParams& params, int a, int aprime);

Poly apply_field(const ComplexParams& params, const VectorFieldId& id, const Poly& p);

/// delta^A_{A'} p = Z^A_{A'} p - 2 (Z^A_{A'}|x|^2) p, the weighted adjoint of Z_A^{A'}.
Poly apply_delta(const ComplexParams& params, int a, int aprime, const Poly& p);

/// Sum of second derivatives over all 4n coordinates.
Poly laplacian_apply(const Poly& p);

/// Precomputed raised fields and delta multipliers for one parameter set.
class FieldTable {
public:
    explicit FieldTable(const ComplexParams& params);

    const ComplexParams& params() const { return params_; }
    /// Z_A^{A'}
    const FirstOrderOp& raised(int a, int aprime) const { return raised_[idx(a, aprime)]; }
    /// Z^A_{A'}
    const FirstOrderOp& mixed(int a, int aprime) const { return mixed_[idx(a, aprime)]; }
    Poly delta(int a, int aprime, const Poly& p) const;

private:
    std::size_t idx(int a, int aprime) const { return static_cast<std::size_t>(2 * a + aprime); }

    ComplexParams params_;
    std::vector<FirstOrderOp> raised_;
    std::vector<FirstOrderOp> mixed_;
    std::vector<Poly> weight_terms_;  // -2 Z^A_{A'}|x|^2
};

}  // namespace fueter

#endif  // FUETER_FIELDS_HPP
