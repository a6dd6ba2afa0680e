#include "fueter/linalg.hpp"
#include "fueter/random.hpp"

#include <doctest.h>

using namespace fueter;

namespace {

Matrix<GaussInt> random_int_matrix(SectionSampler& s, std::size_t rows, std::size_t cols, int zero_bias) {
    Matrix<GaussInt> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (s.uniform(static_cast<std::uint64_t>(zero_bias + 1)) != 0) continue;
            m(r, c) = GaussInt(Integer(static_cast<long>(s.uniform(7)) - 3), Integer(static_cast<long>(s.uniform(7)) - 3));
        }
    return m;
}

std::vector<GaussRat> times(const Matrix<GaussInt>& m, const std::vector<GaussRat>& v) {
    std::vector<GaussRat> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += to_rat(m(r, c)) * v[c];
    return out;
}

bool all_zero(const std::vector<GaussRat>& v) {
    for (const auto& z : v)
        if (!z.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("exact division in Z[i]") {
    const GaussInt a(Integer(3), Integer(4)), b(Integer(1), Integer(2));
    CHECK(exact_div(a * b, b) == a);
    CHECK(exact_div(GaussInt(5), GaussInt(Integer(2), Integer(1))) == GaussInt(Integer(2), Integer(-1)));
    CHECK_THROWS_AS(exact_div(GaussInt(3), GaussInt(2)), std::domain_error);
}

TEST_CASE("rank of a hand-made matrix") {
    // rows: (1, i, 0), (i, -1, 0), (0, 0, 2): the second row is i times the first
    Matrix<GaussInt> m(3, 3);
    m(0, 0) = 1;
    m(0, 1) = GaussInt(Integer(0), Integer(1));
    m(1, 0) = GaussInt(Integer(0), Integer(1));
    m(1, 1) = -1;
    m(2, 2) = 2;
    CHECK(fraction_free_rref(m).rank() == 2);
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][1] == GaussRat(1));
    CHECK(ns[0][0] == GaussRat(0, -1));
    CHECK(ns[0][2].is_zero());
}

TEST_CASE("nullspace vectors are annihilated and rank + nullity = columns") {
    SectionSampler s(31337);
    for (int t = 0; t < 40; ++t) {
        const std::size_t rows = 1 + s.uniform(6), cols = 1 + s.uniform(7);
        const auto m = random_int_matrix(s, rows, cols, static_cast<int>(s.uniform(3)));
        const auto ns = nullspace(m);
        CHECK(fraction_free_rref(m).rank() + ns.size() == cols);
        for (const auto& v : ns) CHECK(all_zero(times(m, v)));
    }
}

TEST_CASE("particular solutions") {
    SectionSampler s(4242);
    for (int t = 0; t < 30; ++t) {
        const std::size_t rows = 1 + s.uniform(5), cols = 1 + s.uniform(6);
        const auto m = random_int_matrix(s, rows, cols, 1);
        std::vector<GaussRat> x(cols);
        for (auto& z : x) z = s.complex_coefficient();
        const auto b = times(m, x);
        const auto sol = particular_solution(m, b);
        REQUIRE(sol.has_value());
        CHECK(times(m, *sol) == b);
    }
    SUBCASE("inconsistent system") {
        Matrix<GaussInt> m(2, 2);
        m(0, 0) = 1;
        m(0, 1) = 1;
        m(1, 0) = 2;
        m(1, 1) = 2;
        CHECK_FALSE(particular_solution(m, {GaussRat(1), GaussRat(3)}).has_value());
        CHECK(particular_solution(m, {GaussRat(1), GaussRat(2)}).has_value());
    }
    SUBCASE("rhs size mismatch") {
        CHECK_THROWS_AS(particular_solution(Matrix<GaussInt>(2, 2), {GaussRat(1)}), std::invalid_argument);
    }
}

TEST_CASE("inverse and square solves over Q(i)") {
    SectionSampler s(777);
    int tested = 0;
    while (tested < 15) {
        const std::size_t n = 1 + s.uniform(5);
        Matrix<GaussRat> a(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a(r, c) = s.complex_coefficient();
        Matrix<GaussRat> inv;
        try {
            inv = inverse(a);
        } catch (const std::domain_error&) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                GaussRat sum;
                for (std::size_t j = 0; j < n; ++j) sum += inv(r, j) * a(j, c);
                CHECK(sum == GaussRat(r == c ? 1 : 0));
            }
        std::vector<GaussRat> b(n);
        for (auto& z : b) z = s.complex_coefficient();
        const auto x = solve_square(a, b);
        for (std::size_t r = 0; r < n; ++r) {
            GaussRat sum;
            for (std::size_t j = 0; j < n; ++j) sum += a(r, j) * x[j];
            CHECK(sum == b[r]);
        }
        ++tested;
    }
    Matrix<GaussRat> singular(2, 2);
    singular(0, 0) = GaussRat(1);
    singular(0, 1) = GaussRat(2);
    singular(1, 0) = GaussRat(2);
    singular(1, 1) = GaussRat(4);
    CHECK_THROWS_AS(inverse(singular), std::domain_error);
}
