#include "fueter/canonical.hpp"

#include "fueter/fields.hpp"
#include "fueter/operators.hpp"

#include <cmath>
#include <string>

namespace fueter {

namespace {

std::vector<GaussRat> v1_coordinates(const Spinor1Field& f, int degree) {
    const HomogeneousCoordinates coords(f.size(), f.params().num_vars(), degree);
    std::vector<GaussRat> out(static_cast<std::size_t>(coords.size()));
    for (int i = 0; i < f.size(); ++i)
        for (const auto& [alpha, c] : f.component(i).terms()) {
            if (alpha.degree() != degree) continue;
            out[static_cast<std::size_t>(coords.coordinate(i, coords.monomial_index(alpha)))] = c;
        }
    return out;
}

Rational real_part(const WeightedScalar& w) { return w.value.re; }

}  // namespace

CanonicalSolver::CanonicalSolver(const ComplexParams& params, int degree)
    : CanonicalSolver(regular_basis(params, degree)) {}

CanonicalSolver::CanonicalSolver(RegularBasis basis) : basis_(std::move(basis)) {
    d0_.resize(static_cast<std::size_t>(basis_.max_degree()) + 1);
    for (int d = 1; d <= basis_.max_degree(); ++d) d0_[static_cast<std::size_t>(d)] = d0_matrix(basis_.params(), d);
}

SolveReport CanonicalSolver::solve(const Spinor1Field& f) const {
    const auto& params = basis_.params();
    if (!(f.params() == params)) throw std::invalid_argument("section parameter mismatch");
    if (!d1_apply(f).is_zero())
        throw CompatibilityError("compatibility condition D1 f = 0 is violated; D0 u = f has no solution");
    const int degree = this->degree();
    if (f.degree() > degree - 1)
        throw InfeasibleError("f has degree " + std::to_string(f.degree()) + "; a solution needs degree >= " +
                              std::to_string(f.degree() + 1) + " but the bound is " + std::to_string(degree));

    Spinor0Field particular(params);
    for (int d = 1; d <= degree; ++d) {
        const Spinor1Field part = f.homogeneous_part(d - 1);
        if (part.is_zero()) continue;
        const auto sol = particular_solution(d0_[static_cast<std::size_t>(d)], v1_coordinates(part, d - 1));
        if (!sol)
            throw InfeasibleError("the degree-" + std::to_string(d - 1) +
                                  " part of f is not in the image of D0 on degree-" + std::to_string(d) + " sections");
        particular += section_from_coordinates(params, d, *sol);
    }

    SolveReport report{Spinor0Field(params), false, WeightedScalar{GaussRat{}, params.n()}, Rational(0), degree};
    report.u = particular - project_onto_regular(particular, basis_);
    report.residual_check = d0_apply(report.u) == f;
    report.orthogonality_defect = norm_sq(project_onto_regular(report.u, basis_));
    if (!f.is_zero()) report.norm_ratio_sq = real_part(norm_sq(report.u)) / real_part(norm_sq(f));
    return report;
}

SolveReport least_norm_solve(const Spinor1Field& f, int degree) { return CanonicalSolver(f.params(), degree).solve(f); }

EstimateReport verify_l2_estimate(const Spinor1Field& f) {
    const Rational k = f.params().k();
    const Rational f_sq = real_part(norm_sq(f));
    const Rational d0s = real_part(norm_sq(d0star_apply(f)));
    const Rational d1 = real_part(norm_sq(d1_apply(f)));
    EstimateReport r;
    r.lhs = 4 * f_sq;
    r.rhs = d0s + d1;
    r.margin = r.rhs - r.lhs;
    r.sharp_lhs = 8 * (k - 1) * f_sq;
    r.sharp_rhs = k * d0s + (k - 1) / 2 * d1;
    r.sharp_margin = r.sharp_rhs - r.sharp_lhs;
    return r;
}

EnergyTerms energy_terms(const Spinor1Field& f) {
    const auto& params = f.params();
    const int k = params.k();
    const int nu = params.num_unprimed();
    EnergyTerms t;
    t.f_sq = real_part(norm_sq(f));
    t.d0star_sq = real_part(norm_sq(d0star_apply(f)));
    t.d1_sq = real_part(norm_sq(d1_apply(f)));

    for (int head = 0; head < 2; ++head)
        for (int tail = 0; tail <= k - 1; ++tail) {
            Poly s(params.num_vars());
            for (int a = 0; a < nu; ++a) s += apply_delta(params, a, head, f.component(f.index(tail, a)));
            t.sigma0 += binomial(k - 1, tail) * real_part(ip_poly(s, s));
        }

    for (int tail = 0; tail <= k - 2; ++tail)
        for (int a = 0; a < nu; ++a)
            for (int b = 0; b < nu; ++b) {
                Poly s(params.num_vars());
                for (int ap = 0; ap < 2; ++ap)
                    s += apply_field(params, {a, ap, FieldVariant::Raised}, f.component(f.index(tail + ap, b)));
                t.z_sum += binomial(k - 2, tail) * real_part(ip_poly(s, s));
            }
    return t;
}

Rational verify_energy_identity(const Spinor1Field& f) {
    const Rational k = f.params().k();
    const EnergyTerms t = energy_terms(f);
    const Rational left = k * t.d0star_sq + (k - 1) / 2 * t.d1_sq;
    const Rational right = t.sigma0 + (k - 1) * t.z_sum + 8 * (k - 1) * t.f_sq;
    return Rational(left - right);
}

BoundReport canonical_bound_report(const Spinor1Field& f, const std::vector<int>& degrees) {
    BoundReport report;
    for (int d : degrees) {
        const SolveReport s = least_norm_solve(f, d);
        const double ratio = std::sqrt(s.norm_ratio_sq.get_d());
        if (!report.rows.empty() && s.norm_ratio_sq > report.rows.back().ratio_sq) report.nonincreasing = false;
        report.rows.push_back({d, s.norm_ratio_sq, ratio, ratio > 0.5});
    }
    return report;
}

}  // namespace fueter
