#include "fueter/identities.hpp"

#include "fueter/fields.hpp"
#include "fueter/gaussian.hpp"
#include "fueter/operators.hpp"
#include "fueter/parallel.hpp"
#include "fueter/random.hpp"

#include <functional>

namespace fueter {

Rational defect_of(const GaussRat& z) {
    Rational re = abs(z.re), im = abs(z.im);
    return re > im ? re : im;
}

Rational defect_of(const Poly& p) {
    Rational worst = 0;
    for (const auto& [alpha, c] : p.terms()) {
        Rational d = defect_of(c);
        if (d > worst) worst = d;
    }
    return worst;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial);
}

namespace {

void absorb(Rational& worst, const Rational& d) {
    if (d > worst) worst = d;
}

/// Runs one seeded trial per index in parallel and keeps the worst defect.
IdentityCheck run_trials(std::string name, const SuiteConfig& cfg,
                         const std::function<Rational(SectionSampler&)>& trial) {
    std::vector<Rational> defects(static_cast<std::size_t>(cfg.trials));
    parallel_for(defects.size(), [&](std::size_t t) {
        SectionSampler sampler(trial_seed(cfg.seed, static_cast<int>(t)));
        defects[t] = trial(sampler);
    });
    IdentityCheck out{std::move(name), cfg.trials, Rational(0)};
    for (const auto& d : defects) absorb(out.worst_defect, d);
    return out;
}

Rational section_defect(const auto& section) {
    Rational worst = 0;
    for (const auto& p : section.components()) absorb(worst, defect_of(p));
    return worst;
}

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix random_matrix(SectionSampler& s, int dim, int nvars, int degree) {
    PolyMatrix m(static_cast<std::size_t>(dim), std::vector<Poly>(static_cast<std::size_t>(dim)));
    for (auto& row : m)
        for (auto& p : row) p = s.poly(nvars, degree);
    return m;
}

PolyMatrix antisymmetric_part(const PolyMatrix& h) {
    PolyMatrix out = h;
    for (std::size_t a = 0; a < h.size(); ++a)
        for (std::size_t b = 0; b < h.size(); ++b) out[a][b] = (h[a][b] - h[b][a]) * GaussRat(frac(1, 2));
    return out;
}

GaussRat pairing(const PolyMatrix& h, const PolyMatrix& g, bool transpose_h = false) {
    GaussRat sum;
    for (std::size_t a = 0; a < h.size(); ++a)
        for (std::size_t b = 0; b < h.size(); ++b) sum += ip_poly(transpose_h ? h[b][a] : h[a][b], g[a][b]).value;
    return sum;
}

}  // namespace

IdentityCheck check_exactness(const ComplexParams& params, const SuiteConfig& cfg) {
    return run_trials("D1 D0 = 0", cfg, [&](SectionSampler& s) {
        return section_defect(d1_apply(d0_apply(s.section<Space::V0>(params, cfg.degree))));
    });
}

IdentityCheck check_z_linear_forms(const ComplexParams& params) {
    IdentityCheck out{"Z_AA' z_BB' = 2 delta delta", 0, Rational(0)};
    const int nu = params.num_unprimed();
    for (int a = 0; a < nu; ++a)
        for (int ap = 0; ap < 2; ++ap)
            for (int b = 0; b < nu; ++b)
                for (int bp = 0; bp < 2; ++bp) {
                    const Poly got = apply_field(params, {a, ap, FieldVariant::Lowered}, z_linear_form(params, b, bp));
                    const long expect = (a == b && ap == bp) ? 2 : 0;
                    absorb(out.worst_defect, defect_of(got - Poly::constant(params.num_vars(), GaussRat(expect))));
                    ++out.cases;
                }
    return out;
}

IdentityCheck check_weight_hessian(const ComplexParams& params) {
    IdentityCheck out{"Z_B^A' conj(Z_A^B') |x|^2 = 4 delta delta", 0, Rational(0)};
    const int nu = params.num_unprimed();
    const Poly phi = norm_squared_poly(params.num_vars());
    for (int a = 0; a < nu; ++a)
        for (int ap = 0; ap < 2; ++ap)
            for (int b = 0; b < nu; ++b)
                for (int bp = 0; bp < 2; ++bp) {
                    const FirstOrderOp inner = field_operator(params, {a, bp, FieldVariant::Raised}).conj();
                    const Poly got = apply_field(params, {b, ap, FieldVariant::Raised}, inner.apply(phi));
                    const long expect = (a == b && ap == bp) ? 4 : 0;
                    absorb(out.worst_defect, defect_of(got - Poly::constant(params.num_vars(), GaussRat(expect))));
                    ++out.cases;
                }
    return out;
}

IdentityCheck check_commutator(const ComplexParams& params, const SuiteConfig& cfg) {
    const int nu = params.num_unprimed();
    return run_trials("[Z_B^A', delta^A_B'] = 8 delta delta", cfg, [&](SectionSampler& s) {
        const Poly p = s.poly(params.num_vars(), cfg.degree);
        Rational worst = 0;
        for (int a = 0; a < nu; ++a)
            for (int ap = 0; ap < 2; ++ap)
                for (int b = 0; b < nu; ++b)
                    for (int bp = 0; bp < 2; ++bp) {
                        const VectorFieldId z{b, ap, FieldVariant::Raised};
                        const Poly lhs = apply_field(params, z, apply_delta(params, a, bp, p)) -
                                         apply_delta(params, a, bp, apply_field(params, z, p));
                        const Poly rhs = (a == b && ap == bp) ? p * GaussRat(8) : Poly(params.num_vars());
                        absorb(worst, defect_of(lhs - rhs));
                    }
        return worst;
    });
}

IdentityCheck check_field_commutation(const ComplexParams& params, const SuiteConfig& cfg) {
    const int nu = params.num_unprimed();
    return run_trials("raised fields commute", cfg, [&](SectionSampler& s) {
        const Poly p = s.poly(params.num_vars(), cfg.degree);
        Rational worst = 0;
        for (int a = 0; a < nu; ++a)
            for (int ap = 0; ap < 2; ++ap)
                for (int b = 0; b < nu; ++b)
                    for (int bp = 0; bp < 2; ++bp) {
                        const VectorFieldId x{a, ap, FieldVariant::Raised}, y{b, bp, FieldVariant::Raised};
                        absorb(worst, defect_of(apply_field(params, x, apply_field(params, y, p)) -
                                                apply_field(params, y, apply_field(params, x, p))));
                    }
        return worst;
    });
}

IdentityCheck check_d0_adjoint(const ComplexParams& params, const SuiteConfig& cfg) {
    return run_trials("<D0 g, f> = <g, D0* f>", cfg, [&](SectionSampler& s) {
        const auto g = s.section<Space::V0>(params, cfg.degree);
        const auto f = s.section<Space::V1>(params, cfg.degree);
        return defect_of((ip_section(d0_apply(g), f) - ip_section(g, d0star_apply(f))).value);
    });
}

IdentityCheck check_d1_adjoint(const ComplexParams& params, const SuiteConfig& cfg) {
    return run_trials("<D1 h, g> = <h, D1* g>", cfg, [&](SectionSampler& s) {
        const auto h = s.section<Space::V1>(params, cfg.degree);
        const auto g = s.section<Space::V2>(params, cfg.degree);
        return defect_of((ip_section(d1_apply(h), g) - ip_section(h, d1star_apply(g))).value);
    });
}

IdentityCheck check_box_energy(const ComplexParams& params, const SuiteConfig& cfg) {
    return run_trials("<box f, f> = |D0* f|^2 + |D1 f|^2", cfg, [&](SectionSampler& s) {
        const auto f = s.section<Space::V1>(params, cfg.degree);
        const auto lhs = ip_section(box_phi_apply(f), f);
        const auto rhs = norm_sq(d0star_apply(f)) + norm_sq(d1_apply(f));
        return defect_of((lhs - rhs).value);
    });
}

IdentityCheck check_symmetrization_pairing(const ComplexParams& params, const SuiteConfig& cfg) {
    const int k = params.k();
    const int nv = params.num_vars();
    return run_trials("symmetrization drops out of pairings with symmetric data", cfg, [&](SectionSampler& s) {
        std::map<PrimedSlot, Poly> h;
        for (int j = 0; j <= k; ++j) h[PrimedSlot(k, j)] = s.poly(nv, cfg.degree);
        std::map<PrimedWord, Poly> raw;
        for (const auto& w : all_words(k)) raw[w] = s.poly(nv, cfg.degree);
        const auto sym = symmetrize_components(raw);
        GaussRat lhs, rhs;
        for (const auto& w : all_words(k)) {
            lhs += ip_poly(h.at(w.slot()), raw.at(w)).value;
            rhs += ip_poly(h.at(w.slot()), sym.at(w.slot())).value;
        }
        return defect_of(lhs - rhs);
    });
}

IdentityCheck check_antisymmetrization_pairing(const ComplexParams& params, const SuiteConfig& cfg) {
    const int nu = params.num_unprimed();
    const int nv = params.num_vars();
    return run_trials("antisymmetrization drops out of pairings with antisymmetric data", cfg, [&](SectionSampler& s) {
        const PolyMatrix h = antisymmetric_part(random_matrix(s, nu, nv, cfg.degree));
        const PolyMatrix big_h = random_matrix(s, nu, nv, cfg.degree);
        return defect_of(pairing(h, big_h) - pairing(h, antisymmetric_part(big_h)));
    });
}

IdentityCheck check_exchange_identity(const ComplexParams& params, const SuiteConfig& cfg) {
    const int nu = params.num_unprimed();
    const int nv = params.num_vars();
    return run_trials("(h_BA, H_AB) = (h_AB, H_AB) - 2 (h_[AB], H_[AB])", cfg, [&](SectionSampler& s) {
        const PolyMatrix h = random_matrix(s, nu, nv, cfg.degree);
        const PolyMatrix big_h = random_matrix(s, nu, nv, cfg.degree);
        const GaussRat lhs = pairing(h, big_h, true);
        GaussRat rhs = pairing(h, big_h) - GaussRat(2) * pairing(antisymmetric_part(h), antisymmetric_part(big_h));
        return defect_of(lhs - rhs);
    });
}

std::vector<IdentityCheck> run_identity_suite(const ComplexParams& params, const SuiteConfig& cfg) {
    return {
        check_exactness(params, cfg),
        check_z_linear_forms(params),
        check_weight_hessian(params),
        check_commutator(params, cfg),
        check_field_commutation(params, cfg),
        check_d0_adjoint(params, cfg),
        check_d1_adjoint(params, cfg),
        check_box_energy(params, cfg),
        check_symmetrization_pairing(params, cfg),
        check_antisymmetrization_pairing(params, cfg),
        check_exchange_identity(params, cfg),
    };
}

}  // namespace fueter
