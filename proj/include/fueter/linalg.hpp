#ifndef FUETER_LINALG_HPP
#define FUETER_LINALG_HPP

// Exact dense linear algebra over Z[i] (fraction-free) and Q(i).

#include "fueter/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fueter {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Reduced echelon form produced by fraction-free Gauss-Jordan elimination.
/// Every pivot row ends with the common pivot value `det` in its own pivot
/// column and zeros in the other pivot columns.
struct FractionFreeForm {
    Matrix<GaussInt> reduced;
    std::vector<std::size_t> pivot_cols;  // pivot_cols[r] is the pivot column of row r
    GaussInt det{1};

    std::size_t rank() const { return pivot_cols.size(); }
};

/// Bareiss-style elimination on the first `elim_cols` columns (all columns by default).
/// Every division is exact in Z[i]; a non-exact division throws std::domain_error.
FractionFreeForm fraction_free_rref(Matrix<GaussInt> m, std::optional<std::size_t> elim_cols = std::nullopt);

/// Basis of the right nullspace, one vector per free column, scaled so the
/// free coordinate equals 1.
std::vector<std::vector<GaussRat>> nullspace(const Matrix<GaussInt>& m);

/// A solution of m x = b with free coordinates set to zero, or nullopt when
/// the system is inconsistent.
std::optional<std::vector<GaussRat>> particular_solution(const Matrix<GaussInt>& m, const std::vector<GaussRat>& b);

/// Solves a nonsingular square system over Q(i); throws std::domain_error if singular.
std::vector<GaussRat> solve_square(Matrix<GaussRat> a, std::vector<GaussRat> b);
/// Multiple right-hand sides, one per column of b.
Matrix<GaussRat> solve_square(Matrix<GaussRat> a, Matrix<GaussRat> b);

/// Inverse of a nonsingular square matrix over Q(i).
Matrix<GaussRat> inverse(const Matrix<GaussRat>& a);

}  // namespace fueter

#endif  // FUETER_LINALG_HPP
