#ifndef FUETER_CANONICAL_HPP
#define FUETER_CANONICAL_HPP

// Minimal-norm solutions of D0 u = f inside degree-bounded polynomial spaces,
// and the exact weighted L2 estimate / energy identity checks.

#include "fueter/gaussian.hpp"
#include "fueter/regular_basis.hpp"

#include <stdexcept>
#include <vector>

namespace fueter {

/// f violates the compatibility condition D1 f = 0.
class CompatibilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// D0 u = f has no polynomial solution of the requested degree; raise the degree.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveReport {
    Spinor0Field u;
    bool residual_check = false;           ///< D0 u == f exactly
    WeightedScalar orthogonality_defect;   ///< |P u|^2, P the projection onto regular sections of degree <= degree
    Rational norm_ratio_sq;                ///< |u|^2 / |f|^2 (0 when f = 0)
    int degree = 0;
};

/// Solver for a fixed (params, degree); reuses the regular basis and the
/// per-degree D0 matrices across right-hand sides.
class CanonicalSolver {
public:
    CanonicalSolver(const ComplexParams& params, int degree);
    explicit CanonicalSolver(RegularBasis basis);

    int degree() const { return basis_.max_degree(); }
    const RegularBasis& basis() const { return basis_; }

    /// Throws CompatibilityError when D1 f != 0 and InfeasibleError when no
    /// solution of degree <= degree() exists.
    SolveReport solve(const Spinor1Field& f) const;

private:
    RegularBasis basis_;
    std::vector<Matrix<GaussInt>> d0_;  // d0_[d] maps degree d to degree d-1
};

SolveReport least_norm_solve(const Spinor1Field& f, int degree);

struct EstimateReport {
    Rational lhs;     ///< 4|f|^2
    Rational rhs;     ///< |D0* f|^2 + |D1 f|^2
    Rational margin;  ///< rhs - lhs
    // The sharper inequality k|D0* f|^2 + ((k-1)/2)|D1 f|^2 >= 8(k-1)|f|^2.
    Rational sharp_lhs;
    Rational sharp_rhs;
    Rational sharp_margin;
};

EstimateReport verify_l2_estimate(const Spinor1Field& f);

struct EnergyTerms {
    Rational d0star_sq;  ///< |D0* f|^2
    Rational d1_sq;      ///< |D1 f|^2
    Rational f_sq;       ///< |f|^2
    Rational sigma0;     ///< sum_{head, tail} C(k-1, tail) |sum_A delta^A_head f_{tail, A}|^2
    Rational z_sum;      ///< sum_{tail, A, B} C(k-2, tail) |sum_{A'} Z_A^{A'} f_{A' tail, B}|^2
};

/// All terms of the energy identity, each computed independently.
EnergyTerms energy_terms(const Spinor1Field& f);

/// k|D0* f|^2 + ((k-1)/2)|D1 f|^2 - (sigma0 + (k-1) z_sum + 8(k-1)|f|^2); zero for every polynomial f.
Rational verify_energy_identity(const Spinor1Field& f);

struct BoundRow {
    int degree;
    Rational ratio_sq;
    double ratio;      ///< sqrt(ratio_sq)
    bool above_half;   ///< flagged, not failed: the 1/2 bound concerns the untruncated solution
};

struct BoundReport {
    std::vector<BoundRow> rows;
    bool nonincreasing = true;
};

BoundReport canonical_bound_report(const Spinor1Field& f, const std::vector<int>& degrees);

}  // namespace fueter

#endif  // FUETER_CANONICAL_HPP
