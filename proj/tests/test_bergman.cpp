#include "fueter/bergman.hpp"
#include "fueter/canonical.hpp"
#include "fueter/identities.hpp"
#include "fueter/operators.hpp"
#include "fueter/random.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace fueter;

namespace {

std::string fixture_path(const std::string& name) { return std::string(FUETER_FIXTURE_DIR) + "/" + name; }

std::vector<std::vector<double>> data_rows(const std::string& csv, std::string* header = nullptr) {
    std::istringstream in(csv);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            seen_header = true;
            if (header) *header = line;
            continue;
        }
        std::vector<double> row;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Compares against an archived CSV; FUETER_UPDATE_FIXTURES=1 rewrites it instead.
void check_against_fixture(const std::string& name, const std::string& produced) {
    if (std::getenv("FUETER_UPDATE_FIXTURES")) {
        std::ofstream(fixture_path(name)) << produced;
        MESSAGE("rewrote fixture " << name);
        return;
    }
    std::ifstream in(fixture_path(name));
    REQUIRE_MESSAGE(in.good(), "missing fixture " << name);
    std::ostringstream s;
    s << in.rdbuf();
    std::string want_header, got_header;
    const auto want = data_rows(s.str(), &want_header);
    const auto got = data_rows(produced, &got_header);
    CHECK(got_header == want_header);
    REQUIRE(got.size() == want.size());
    for (std::size_t r = 0; r < got.size(); ++r) {
        REQUIRE(got[r].size() == want[r].size());
        for (std::size_t c = 0; c < got[r].size(); ++c) {
            const double scale = std::max(std::fabs(want[r][c]), 1e-300);
            CHECK(std::fabs(got[r][c] - want[r][c]) / scale < 1e-9);
        }
    }
}

RaySpec axis_ray() {
    return {{0, 0, 0, 0}, {1, 0, 0, 0}, 0, 1, 7};
}

RaySpec offset_ray() {
    return {{Rational(1, 2), 0, 0, 0}, {0, 1, 0, 0}, 0, 1, 7};
}

bool strictly_decreasing_beyond_one(const DecayProfile& p) {
    double prev = INFINITY;
    for (const auto& s : p.samples) {
        if (s.separation < 1) continue;
        if (!(s.weighted_norm < prev)) return false;
        prev = s.weighted_norm;
    }
    return true;
}

const ComplexParams kP(1, 2);

}  // namespace

TEST_CASE("degree-0 kernel at the origin") {
    // Only the constants survive; their Gram matrix is diag(C(k, j)).
    const KernelTruncation t(kP, 0);
    const std::vector<Rational> zero(4, Rational(0));
    const auto k = kernel_eval(t, zero, zero);
    CHECK(k.value(0, 0) == GaussRat(1));
    CHECK(k.value(1, 1) == GaussRat(frac(1, 2)));
    CHECK(k.value(2, 2) == GaussRat(1));
    CHECK(k.value(0, 1).is_zero());
    CHECK(std::fabs(k.scale() - 4 / (std::numbers::pi * std::numbers::pi)) < 1e-15);
}

TEST_CASE("kernel structure") {
    const KernelTruncation t(kP, 3);
    SectionSampler s(404);
    for (int trial = 0; trial < 5; ++trial) {
        const auto x = s.point(4), y = s.point(4);
        const auto kxy = kernel_eval(t, x, y), kyx = kernel_eval(t, y, x);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(kxy.value(i, j) == kyx.value(j, i).conj());
        const auto kxx = kernel_eval(t, x, x);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(kxx.value(i, i).im == 0);
            CHECK(kxx.value(i, i).re > 0);
        }
        for (int l = 0; l < 3; ++l) {
            const auto col = kernel_column(t, y, l);
            CHECK(d0_apply(col).is_zero());
            // column l of K(., y), evaluated at x, is K(x, y) e_l
            const auto vals = col.eval(x);
            for (std::size_t j = 0; j < 3; ++j) CHECK(vals[j] == kxy.value(j, static_cast<std::size_t>(l)));
        }
    }
    CHECK_THROWS_AS(t.values_at(std::vector<Rational>(3)), std::invalid_argument);
}

TEST_CASE("reproducing property") {
    const KernelTruncation t(kP, 3);
    SectionSampler s(5);
    const auto x = s.point(4);
    for (const auto& e : t.basis().elements()) CHECK(reproduce(t, e, x).exact());
    const auto zero = reproduce(t, Spinor0Field(kP), x);
    CHECK(zero.exact());
    for (const auto& v : zero.kernel_side) CHECK(v.is_zero());
    SUBCASE("a regular section above the truncation degree is not reproduced") {
        const auto higher = regular_basis(kP, 4);
        bool any_residual = false;
        for (std::size_t i = higher.blocks()[4].first; i < higher.size() && !any_residual; ++i)
            any_residual = !reproduce(t, higher.elements()[i], x).exact();
        CHECK(any_residual);
    }
}

TEST_CASE("closed form along the axis ray from the origin") {
    // K(0, y) only sees the constants: diag(1, 1/2, 1) (2/pi)^2 with Frobenius norm 6/pi^2.
    const KernelTruncation t(kP, 4);
    const auto profile = decay_profile(t, axis_ray());
    const double base = 6 / (std::numbers::pi * std::numbers::pi);
    for (const auto& s : profile.samples) {
        CHECK(std::fabs(s.raw_norm - base) < 1e-12);
        CHECK(std::fabs(s.weighted_norm - base * std::exp(-s.separation * s.separation)) < 1e-12);
    }
}

TEST_CASE("decay profiles match archived fixtures") {
    const KernelTruncation t(kP, 4);
    const auto axis = decay_profile(t, axis_ray());
    const auto offset = decay_profile(t, offset_ray());
    check_against_fixture("decay_n1_k2_d4_axis.csv", decay_profile_csv(axis));
    check_against_fixture("decay_n1_k2_d4_offset.csv", decay_profile_csv(offset));
    CHECK(strictly_decreasing_beyond_one(axis));
    CHECK(strictly_decreasing_beyond_one(offset));
    CHECK(offset.log_slope() < 0);
    CHECK(decay_profile_csv(axis).find("sep,raw_norm,weighted_norm,degree\n") != std::string::npos);
}

TEST_CASE("adjacent truncation degrees agree near the diagonal") {
    const auto p4 = decay_profile(KernelTruncation(kP, 4), offset_ray());
    const auto p5 = decay_profile(KernelTruncation(kP, 5), offset_ray());
    for (std::size_t i = 0; i < p4.samples.size(); ++i) {
        if (p4.samples[i].separation > 2) continue;
        CAPTURE(p4.samples[i].separation);
        CHECK(std::fabs(p5.samples[i].weighted_norm - p4.samples[i].weighted_norm) <= 0.1 * p5.samples[i].weighted_norm);
    }
}

TEST_CASE("decay profile input validation") {
    const KernelTruncation t(kP, 1);
    auto ray = axis_ray();
    ray.steps = 1;
    CHECK_THROWS_AS(decay_profile(t, ray), std::invalid_argument);
    ray = axis_ray();
    ray.direction.assign(4, Rational(0));
    CHECK_THROWS_AS(decay_profile(t, ray), std::invalid_argument);
    ray = axis_ray();
    ray.step = 0;
    CHECK_THROWS_AS(decay_profile(t, ray), std::invalid_argument);
}

TEST_CASE("Bergman projection equals f minus the least-norm solution") {
    const CanonicalSolver solver(kP, 3);
    for (int t = 0; t < 5; ++t) {
        SectionSampler s(trial_seed(3, t));
        const auto f = s.section<Space::V0>(kP, 3);
        CHECK(projection_consistency(f, solver).is_zero());
        const auto u = solver.solve(d0_apply(f)).u;
        const auto pf = project_onto_regular(f, solver.basis());
        CHECK(norm_sq(pf) + norm_sq(u) == norm_sq(f));
    }
    CHECK(projection_consistency(Spinor0Field(kP), 2).is_zero());
    SectionSampler s(1);
    CHECK_THROWS_AS(projection_consistency(s.section<Space::V0>(kP, 6) + [] {
        Spinor0Field h(kP);
        MultiIndex a(4);
        a.set(0, 6);
        h.component(0) = Poly::monomial(a, GaussRat(1));
        return h;
    }(), solver), std::invalid_argument);
}
