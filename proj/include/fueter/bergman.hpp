#ifndef FUETER_BERGMAN_HPP
#define FUETER_BERGMAN_HPP

// Degree-truncated weighted k-Bergman kernel K_d(x, y) = B(x) G^{-1} B(y)^*,
// where B(x) holds the component values of the regular basis at x and G is
// its Gram matrix. The kernel is kept implicit and evaluated on demand.
//
// Inner products weight V0 components by their slot multiplicities C(k, j), so
// the reproducing identity reads f(x) = int K(x, y) M f(y) e^{-2|y|^2} dy with
// M = diag(C(k, 0), ..., C(k, k)).

#include "fueter/gaussian.hpp"
#include "fueter/regular_basis.hpp"

#include <span>
#include <string>
#include <vector>

namespace fueter {

class CanonicalSolver;

/// value * (pi/2)^{-2n}
struct KernelMatrix {
    Matrix<GaussRat> value;
    int n = 1;

    double scale() const;  ///< (pi/2)^{-2n}
    /// Frobenius norm of the full (transcendentally scaled) matrix.
    double frobenius_norm() const;
};

class KernelTruncation {
public:
    explicit KernelTruncation(RegularBasis basis);
    KernelTruncation(const ComplexParams& params, int degree);

    const RegularBasis& basis() const { return basis_; }
    const ComplexParams& params() const { return basis_.params(); }
    int degree() const { return basis_.max_degree(); }

    /// B(x): (k+1) x N matrix of basis component values.
    Matrix<GaussRat> values_at(std::span<const Rational> x) const;
    /// B(x) G^{-1}, applied block by block.
    Matrix<GaussRat> weighted_values_at(std::span<const Rational> x) const;

private:
    RegularBasis basis_;
    std::vector<Matrix<GaussRat>> gram_inverse_;  // one per degree block
};

KernelMatrix kernel_eval(const KernelTruncation& trunc, std::span<const Rational> x, std::span<const Rational> y);

/// Column l of K(., y) as a section in x (rational part; the true column is this times (pi/2)^{-2n}).
Spinor0Field kernel_column(const KernelTruncation& trunc, std::span<const Rational> y, int l);

struct ReproduceResult {
    std::vector<GaussRat> kernel_side;  ///< int K(x, y) M f(y) e^{-2|y|^2} dy
    std::vector<GaussRat> pointwise;    ///< f(x)
    std::vector<GaussRat> residual;     ///< kernel_side - pointwise

    bool exact() const;
};

/// Integral side computed exactly as <f, kernel_column(x, j)> per component j.
ReproduceResult reproduce(const KernelTruncation& trunc, const Spinor0Field& f, std::span<const Rational> x);

struct RaySpec {
    std::vector<Rational> origin;     ///< x, fixed along the ray
    std::vector<Rational> direction;  ///< y = origin + t * direction
    Rational first{1};                ///< first parameter t
    Rational step{1};                 ///< parameter increment
    int steps = 6;
};

struct DecaySample {
    std::vector<Rational> x;
    std::vector<Rational> y;
    double separation = 0;
    double raw_norm = 0;       ///< |K(x, y)| (Frobenius)
    double weighted_norm = 0;  ///< |K(x, y)| e^{-|x|^2 - |y|^2}
};

struct DecayProfile {
    int degree = 0;
    std::vector<DecaySample> samples;

    /// Least-squares slope of log(weighted_norm) against separation.
    double log_slope() const;
};

DecayProfile decay_profile(const KernelTruncation& trunc, const RaySpec& ray);

/// CSV with '#' comment lines, then header "sep,raw_norm,weighted_norm,degree".
std::string decay_profile_csv(const DecayProfile& profile);

/// |P f - (f - u)|^2 with u the degree-bounded least-norm solution of D0 u = D0 f.
WeightedScalar projection_consistency(const Spinor0Field& f, int degree);
/// Same, reusing a solver (its degree is the truncation degree).
WeightedScalar projection_consistency(const Spinor0Field& f, const CanonicalSolver& solver);

}  // namespace fueter

#endif  // FUETER_BERGMAN_HPP
