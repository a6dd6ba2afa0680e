#include "fueter/gaussian.hpp"
#include "fueter/identities.hpp"
#include "fueter/random.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

using namespace fueter;

namespace {

// Adaptive Simpson quadrature, used only as an independent numeric oracle.
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15 * tol) return left + right + (left + right - whole) / 15;
    return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) + simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tol, 60);
}

double numeric_moment_1d(int m) {
    return integrate([m](double t) { return std::pow(t, m) * std::exp(-2 * t * t); }, -6, 6, 1e-15);
}

const double kHalfPi = std::numbers::pi / 2;

}  // namespace

TEST_CASE("one-dimensional moments") {
    CHECK(moment_1d(0) == 1);
    CHECK(moment_1d(2) == frac(1, 4));
    CHECK(moment_1d(4) == frac(3, 16));
    CHECK(moment_1d(6) == frac(15, 64));
    CHECK(moment_1d(3) == 0);
    // closed form (2p-1)!! / 4^p
    Rational dfact = 1;
    for (int p = 1; p <= 12; ++p) {
        dfact *= 2 * p - 1;
        Rational pow4 = 1;
        for (int i = 0; i < p; ++i) pow4 *= 4;
        CHECK(moment_1d(2 * p) == dfact / pow4);
    }
}

TEST_CASE("zero and second moments against quadrature to 1e-12") {
    const double zero = numeric_moment_1d(0);
    const double second = numeric_moment_1d(2);
    CHECK(std::fabs(zero - std::sqrt(kHalfPi)) / std::sqrt(kHalfPi) < 1e-12);
    CHECK(std::fabs(second - 0.25 * std::sqrt(kHalfPi)) / (0.25 * std::sqrt(kHalfPi)) < 1e-12);
    const MultiIndex zero_alpha(4);
    CHECK(monomial_moment(zero_alpha).value == GaussRat(1));
    CHECK(std::fabs(monomial_moment(zero_alpha).to_double() - std::pow(zero, 4)) / std::pow(zero, 4) < 1e-12);
    MultiIndex two(4);
    two.set(0, 2);
    CHECK(monomial_moment(two).value == GaussRat(frac(1, 4)));
    CHECK(std::fabs(monomial_moment(two).to_double() - second * std::pow(zero, 3)) / monomial_moment(two).to_double() < 1e-12);
    MultiIndex odd(8);
    odd.set(5, 3);
    CHECK(monomial_moment(odd).is_zero());
}

TEST_CASE("monomial inner products agree with quadrature for random pairs (n = 1)") {
    SectionSampler s(2718);
    int compared = 0;
    while (compared < 20) {
        const MultiIndex a = s.exponent(4, 4), b = s.exponent(4, 4);
        const MultiIndex sum = a + b;
        double numeric = 1;
        for (int v = 0; v < 4; ++v) numeric *= numeric_moment_1d(sum[v]);
        const double exact = ip_poly(Poly::monomial(a, GaussRat(1)), Poly::monomial(b, GaussRat(1))).to_double();
        if (exact == 0) {
            CHECK(std::fabs(numeric) < 1e-12);
            continue;
        }
        CHECK(std::fabs(numeric - exact) / std::fabs(exact) < 1e-9);
        ++compared;
    }
}

TEST_CASE("polynomial inner products") {
    const int nv = 4;
    const Poly one = Poly::constant(nv, GaussRat(1));
    const Poly x1 = Poly::variable(nv, 0), x2 = Poly::variable(nv, 1);
    CHECK(ip_poly(one, one).value == GaussRat(1));
    CHECK(ip_poly(x1, x2).is_zero());
    CHECK(ip_poly(x1, x1).value == GaussRat(frac(1, 4)));
    // (p, q) conjugates q
    const GaussRat i(Rational(0), Rational(1));
    CHECK(ip_poly(one * i, one).value == i);
    CHECK(ip_poly(one, one * i).value == GaussRat(Rational(0), Rational(-1)));
    CHECK_THROWS_AS(ip_poly(Poly::constant(8, GaussRat(1)), one), std::invalid_argument);
}

TEST_CASE("section inner products use slot multiplicities") {
    SUBCASE("k = 2, n = 1: middle slot counts twice") {
        const ComplexParams p(1, 2);
        Spinor0Field f(p);
        f.component(1) = Poly::constant(4, GaussRat(1));
        CHECK(norm_sq(f).value == GaussRat(2));
    }
    SUBCASE("k = 3: ones = 1 slot counts three times") {
        for (int n : {1, 2}) {
            const ComplexParams p(n, 3);
            Spinor0Field f(p);
            f.component(1) = Poly::constant(p.num_vars(), GaussRat(1));
            CHECK(norm_sq(f).value == GaussRat(3));
            CHECK(norm_sq(f).n == n);
        }
    }
    SUBCASE("V2 pairs count twice") {
        const ComplexParams p(1, 2);
        Spinor2Field g(p);
        g.component(0) = Poly::constant(4, GaussRat(1));
        CHECK(norm_sq(g).value == GaussRat(2));
    }
    SUBCASE("unit constant in a multiplicity-one slot") {
        const ComplexParams p(2, 4);
        Spinor0Field f(p);
        f.component(0) = Poly::constant(8, GaussRat(1));
        CHECK(norm_sq(f).value == GaussRat(1));
        CHECK(norm_sq(Spinor0Field(p)).is_zero());
    }
    SUBCASE("parameter mismatch rejected") {
        CHECK_THROWS_AS(ip_section(Spinor0Field(ComplexParams(1, 2)), Spinor0Field(ComplexParams(1, 3))), std::invalid_argument);
    }
}

TEST_CASE("inner product properties on random sections") {
    for (int n : {1, 2})
        for (int k : {2, 3}) {
            const ComplexParams p(n, k);
            SectionSampler s(static_cast<std::uint64_t>(100 * n + k));
            for (int t = 0; t < 5; ++t) {
                const auto f = s.section<Space::V1>(p, 3);
                const auto g = s.section<Space::V1>(p, 3);
                CHECK(ip_section(f, g).value == ip_section(g, f).value.conj());
                if (!f.is_zero()) CHECK(norm_sq(f).value.re > 0);
                const GaussRat c(frac(2, 3), Rational(-1));
                CHECK(ip_section(f * c, g).value == c * ip_section(f, g).value);
                CHECK(ip_section(f, g * c).value == c.conj() * ip_section(f, g).value);
            }
        }
}

TEST_CASE("Pythagoras under exact orthogonality") {
    const ComplexParams p(1, 2);
    Spinor0Field f(p), g(p);
    f.component(0) = Poly::variable(4, 0);
    g.component(0) = Poly::variable(4, 1) * Poly::variable(4, 2);
    g.component(2) = Poly::constant(4, GaussRat(3));
    REQUIRE(ip_section(f, g).is_zero());
    CHECK(norm_sq(f + g) == norm_sq(f) + norm_sq(g));
}

TEST_CASE("symmetrization pairing, worked example with length-2 words") {
    // h symmetric, H raw; sum over words (h_w, H_w) equals sum (h_w, H_(w)).
    const int nv = 4;
    const Poly x1 = Poly::variable(nv, 0), one = Poly::constant(nv, GaussRat(1));
    std::map<PrimedSlot, Poly> h{{PrimedSlot(2, 0), one}, {PrimedSlot(2, 1), x1}, {PrimedSlot(2, 2), Poly(nv)}};
    std::map<PrimedWord, Poly> raw{{{2, 0b00}, one}, {{2, 0b01}, x1 * GaussRat(3)}, {{2, 0b10}, Poly(nv)}, {{2, 0b11}, x1}};
    const auto sym = symmetrize_components(raw);
    CHECK(sym.at(PrimedSlot(2, 1)) == x1 * GaussRat(frac(3, 2)));
    GaussRat lhs, rhs;
    for (const auto& w : all_words(2)) {
        lhs += ip_poly(h.at(w.slot()), raw.at(w)).value;
        rhs += ip_poly(h.at(w.slot()), sym.at(w.slot())).value;
    }
    CHECK(lhs == rhs);
    CHECK(lhs == GaussRat(1) + GaussRat(frac(3, 4)));
}

TEST_CASE("symmetrization and antisymmetrization identities on random raw data") {
    const SuiteConfig cfg{3, 99, 20};
    for (int k : {2, 3, 4}) CHECK(check_symmetrization_pairing(ComplexParams(1, k), cfg).passed());
    const ComplexParams p(1, 2);
    CHECK(check_antisymmetrization_pairing(p, cfg).passed());
    CHECK(check_exchange_identity(p, cfg).passed());
    CHECK(check_antisymmetrization_pairing(ComplexParams(2, 2), cfg).passed());
    CHECK(check_exchange_identity(ComplexParams(2, 2), cfg).passed());
}
