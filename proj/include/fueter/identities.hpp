#ifndef FUETER_IDENTITIES_HPP
#define FUETER_IDENTITIES_HPP

// Exact identity checks over seeded random data. Each check reports the worst
// defect, measured as the largest |re| or |im| of any residual coefficient.

#include "fueter/poly.hpp"
#include "fueter/spinor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fueter {

struct IdentityCheck {
    std::string name;
    int cases = 0;
    Rational worst_defect;
    bool passed() const { return worst_defect == 0; }
};

struct SuiteConfig {
    int degree = 3;
    std::uint64_t seed = 0;
    int trials = 20;
};

Rational defect_of(const GaussRat& z);
Rational defect_of(const Poly& p);

/// Seed of the sampler used for trial t of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// D1 D0 g = 0.
IdentityCheck check_exactness(const ComplexParams& params, const SuiteConfig& cfg);
/// Z_{AA'} z_{BB'} = 2 delta_{AB} delta_{A'B'} over all index pairs.
IdentityCheck check_z_linear_forms(const ComplexParams& params);
/// Z_B^{A'} conj(Z_A^{B'}) |x|^2 = 4 delta_{AB} delta_{A'B'} over all index pairs.
IdentityCheck check_weight_hessian(const ComplexParams& params);
/// [Z_B^{A'}, delta^A_{B'}] p = 8 delta_{AB} delta_{A'B'} p.
IdentityCheck check_commutator(const ComplexParams& params, const SuiteConfig& cfg);
/// Raised fields commute pairwise.
IdentityCheck check_field_commutation(const ComplexParams& params, const SuiteConfig& cfg);
/// <D0 g, f> = <g, D0* f>.
IdentityCheck check_d0_adjoint(const ComplexParams& params, const SuiteConfig& cfg);
/// <D1 h, g> = <h, D1* g>.
IdentityCheck check_d1_adjoint(const ComplexParams& params, const SuiteConfig& cfg);
/// <box f, f> = |D0* f|^2 + |D1 f|^2.
IdentityCheck check_box_energy(const ComplexParams& params, const SuiteConfig& cfg);
/// sum_w (h_w, H_w) = sum_w (h_w, H_(w)) for symmetric h and raw H.
IdentityCheck check_symmetrization_pairing(const ComplexParams& params, const SuiteConfig& cfg);
/// sum_{A,B} (h_AB, H_AB) = sum_{A,B} (h_AB, H_[AB]) for antisymmetric h.
IdentityCheck check_antisymmetrization_pairing(const ComplexParams& params, const SuiteConfig& cfg);
/// sum (h_BA, H_AB) = sum (h_AB, H_AB) - 2 sum (h_[AB], H_[AB]).
IdentityCheck check_exchange_identity(const ComplexParams& params, const SuiteConfig& cfg);

std::vector<IdentityCheck> run_identity_suite(const ComplexParams& params, const SuiteConfig& cfg);

}  // namespace fueter

#endif  // FUETER_IDENTITIES_HPP
