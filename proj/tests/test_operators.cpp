#include "fueter/canonical.hpp"
#include "fueter/fields.hpp"
#include "fueter/identities.hpp"
#include "fueter/operators.hpp"
#include "fueter/random.hpp"

#include <doctest.h>

using namespace fueter;

namespace {

const std::vector<ComplexParams> kParams{{1, 2}, {1, 3}, {2, 2}, {2, 3}};

}  // namespace

TEST_CASE("D1 D0 = 0 and the adjoint identities") {
    const SuiteConfig cfg{3, 17, 8};
    for (const auto& p : kParams) {
        CAPTURE(p.n());
        CAPTURE(p.k());
        CHECK(check_exactness(p, cfg).passed());
        CHECK(check_d0_adjoint(p, cfg).passed());
        CHECK(check_d1_adjoint(p, cfg).passed());
        CHECK(check_box_energy(p, cfg).passed());
    }
}

TEST_CASE("D0 kills constants and lowers degree by one") {
    for (const auto& p : kParams) {
        Spinor0Field c(p);
        for (int i = 0; i < c.size(); ++i) c.component(i) = Poly::constant(p.num_vars(), GaussRat(i + 1, 1));
        CHECK(d0_apply(c).is_zero());
        SectionSampler s(5);
        const auto f = s.section<Space::V0>(p, 4);
        const auto g = d0_apply(f);
        CHECK(g.degree() <= f.degree() - 1);
        const auto h = s.section<Space::V1>(p, 3);
        CHECK(d0star_apply(h).degree() <= h.degree() + 1);
        CHECK(d1_apply(h).degree() <= h.degree() - 1);
    }
}

TEST_CASE("hand computed D1 for n = 1, k = 2") {
    // h_{0',A=0} = x1 x3, h_{1',A=1} = x2 x4. Then
    // (D1 h)_{01} = Z_0^{1'}(x2 x4) - Z_1^{0'}(x1 x3) = -(d1 + i d2)(x2 x4) - (d1 - i d2)(x1 x3) = -x3 - i x4.
    const ComplexParams p(1, 2);
    const int nv = 4;
    const Poly x1 = Poly::variable(nv, 0), x2 = Poly::variable(nv, 1), x3 = Poly::variable(nv, 2), x4 = Poly::variable(nv, 3);
    Spinor1Field h(p);
    h.component(h.index(0, 0)) = x1 * x3;
    h.component(h.index(1, 1)) = x2 * x4;
    const auto g = d1_apply(h);
    REQUIRE(g.size() == 1);
    CHECK(g.component(0) == -x3 - x4 * GaussRat(0, 1));
}

TEST_CASE("hand computed D0 for n = 1, k = 2") {
    // f_{0'0'} = x1: (D0 f)_{tail 0', A} = Z_A^{0'} x1 = Z_{A1'} x1, so A=0 gives 0 and A=1 gives 1.
    const ComplexParams p(1, 2);
    Spinor0Field f(p);
    f.component(0) = Poly::variable(4, 0);
    const auto g = d0_apply(f);
    CHECK(g.component(g.index(0, 0)).is_zero());
    CHECK(g.component(g.index(0, 1)) == Poly::constant(4, GaussRat(1)));
    for (int ones = 0; ones < 1; ++ones) CHECK(g.component(g.index(1, ones)).is_zero());
}

TEST_CASE("D0* agrees with the symmetrized delta formula (n = 1, k = 2)") {
    const ComplexParams p(1, 2);
    SectionSampler s(2024);
    for (int t = 0; t < 5; ++t) {
        const auto f = s.section<Space::V1>(p, 3);
        auto F = [&](int primed, int a) { return f.component(f.index(primed, a)); };
        const int nv = p.num_vars();
        Poly s00(nv), s01(nv), s11(nv);
        for (int a = 0; a < 2; ++a) {
            s00 += apply_delta(p, a, 0, F(0, a));
            s11 += apply_delta(p, a, 1, F(1, a));
            s01 += (apply_delta(p, a, 0, F(1, a)) + apply_delta(p, a, 1, F(0, a))) * GaussRat(frac(1, 2));
        }
        const auto g = d0star_apply(f);
        CHECK(g.component(0) == s00);
        CHECK(g.component(1) == s01);
        CHECK(g.component(2) == s11);
    }
}

TEST_CASE("energy identity holds exactly") {
    for (const auto& p : {ComplexParams(1, 2), ComplexParams(1, 3), ComplexParams(2, 2)}) {
        for (int t = 0; t < 6; ++t) {
            SectionSampler s(trial_seed(11, t));
            const auto f = s.section<Space::V1>(p, 3);
            CHECK(verify_energy_identity(f) == 0);
            const auto terms = energy_terms(f);
            const Rational k = p.k();
            CHECK(k * terms.d0star_sq + (k - 1) / 2 * terms.d1_sq ==
                  terms.sigma0 + (k - 1) * terms.z_sum + 8 * (k - 1) * terms.f_sq);
        }
    }
}

TEST_CASE("weighted L2 estimate on random sections") {
    for (const auto& p : kParams) {
        SectionSampler s(static_cast<std::uint64_t>(p.n() * 10 + p.k()));
        for (int t = 0; t < 4; ++t) {
            const auto f = s.section<Space::V1>(p, 2);
            const auto r = verify_l2_estimate(f);
            CHECK(r.margin >= 0);
            CHECK(r.sharp_margin >= 0);
            CHECK(r.margin == r.rhs - r.lhs);
        }
    }
    SUBCASE("constant section: D0* f is first order in x, D1 f = 0") {
        const ComplexParams p(1, 2);
        Spinor1Field f(p);
        f.component(0) = Poly::constant(4, GaussRat(1));
        const auto r = verify_l2_estimate(f);
        CHECK(r.margin >= 0);
        CHECK(d1_apply(f).is_zero());
    }
}
