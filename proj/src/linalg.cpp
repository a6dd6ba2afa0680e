#include "fueter/linalg.hpp"

namespace fueter {

FractionFreeForm fraction_free_rref(Matrix<GaussInt> m, std::optional<std::size_t> elim_cols) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t limit = elim_cols.value_or(cols);
    FractionFreeForm out;
    GaussInt prev{1};
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const GaussInt piv = m(r, c);
        const bool rescale = !(piv == prev);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const GaussInt f = m(i, c);
            if (f.is_zero() && !rescale) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                GaussInt& x = m(i, j);
                const GaussInt& y = m(r, j);
                if (f.is_zero() || y.is_zero()) {
                    if (x.is_zero()) continue;
                    x = rescale ? exact_div(piv * x, prev) : x;
                } else {
                    x = exact_div(piv * x - f * y, prev);
                }
            }
        }
        prev = piv;
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.det = prev;
    out.reduced = std::move(m);
    return out;
}

std::vector<std::vector<GaussRat>> nullspace(const Matrix<GaussInt>& m) {
    const FractionFreeForm ff = fraction_free_rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ff.pivot_cols) is_pivot[c] = true;
    const GaussRat det = to_rat(ff.det);
    std::vector<std::vector<GaussRat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        // det * x_pivot + R[row][free] * x_free = 0 with x_free = 1.
        std::vector<GaussRat> v(cols);
        v[free] = GaussRat(1);
        for (std::size_t row = 0; row < ff.rank(); ++row) {
            const GaussInt& e = ff.reduced(row, free);
            if (!e.is_zero()) v[ff.pivot_cols[row]] = -(to_rat(e) / det);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<GaussRat>> particular_solution(const Matrix<GaussInt>& m, const std::vector<GaussRat>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("particular_solution: rhs size mismatch");
    // Clear denominators of b so the augmented column is integral.
    Integer lcm = 1;
    for (const auto& z : b) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.re.get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.im.get_den_mpz_t());
    }
    Matrix<GaussInt> aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        const Rational re = b[r].re * Rational(lcm);
        const Rational im = b[r].im * Rational(lcm);
        aug(r, m.cols()) = GaussInt(re.get_num(), im.get_num());
    }
    const FractionFreeForm ff = fraction_free_rref(std::move(aug), m.cols());
    for (std::size_t r = ff.rank(); r < m.rows(); ++r)
        if (!ff.reduced(r, m.cols()).is_zero()) return std::nullopt;
    std::vector<GaussRat> x(m.cols());
    const GaussRat scale = to_rat(ff.det) * Rational(lcm);
    for (std::size_t r = 0; r < ff.rank(); ++r) x[ff.pivot_cols[r]] = to_rat(ff.reduced(r, m.cols())) / scale;
    return x;
}

Matrix<GaussRat> solve_square(Matrix<GaussRat> a, Matrix<GaussRat> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve_square: shape mismatch");
    const std::size_t m = b.cols();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw std::domain_error("solve_square: singular matrix");
        a.swap_rows(p, c);
        b.swap_rows(p, c);
        const GaussRat inv = GaussRat(1) / a(c, c);
        for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
        for (std::size_t j = 0; j < m; ++j) b(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const GaussRat f = a(i, c);
            for (std::size_t j = c; j < n; ++j)
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
            for (std::size_t j = 0; j < m; ++j)
                if (!b(c, j).is_zero()) b(i, j) -= f * b(c, j);
        }
    }
    return b;
}

std::vector<GaussRat> solve_square(Matrix<GaussRat> a, std::vector<GaussRat> b) {
    Matrix<GaussRat> rhs(b.size(), 1);
    for (std::size_t r = 0; r < b.size(); ++r) rhs(r, 0) = std::move(b[r]);
    const Matrix<GaussRat> x = solve_square(std::move(a), std::move(rhs));
    std::vector<GaussRat> out(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) out[r] = x(r, 0);
    return out;
}

Matrix<GaussRat> inverse(const Matrix<GaussRat>& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse: matrix not square");
    Matrix<GaussRat> id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = GaussRat(1);
    return solve_square(a, std::move(id));
}

}  // namespace fueter
