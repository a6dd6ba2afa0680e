#ifndef FUETER_REGULAR_BASIS_HPP
#define FUETER_REGULAR_BASIS_HPP

// k-regular polynomial sections (the kernel of D0), computed one homogeneous
// degree at a time.

#include "fueter/gaussian.hpp"
#include "fueter/linalg.hpp"
#include "fueter/sections.hpp"

#include <map>
#include <vector>

namespace fueter {

/// Coordinates for homogeneous polynomial sections of one degree: component-major,
/// monomial-minor.
class HomogeneousCoordinates {
public:
    HomogeneousCoordinates(int num_components, int num_vars, int degree);

    int degree() const { return degree_; }
    int num_monomials() const { return static_cast<int>(monomials_.size()); }
    int size() const { return num_components_ * num_monomials(); }
    const MultiIndex& monomial(int m) const { return monomials_[static_cast<std::size_t>(m)]; }
    /// -1 if alpha is not a monomial of this degree.
    int monomial_index(const MultiIndex& alpha) const;
    int coordinate(int component, int monomial) const { return component * num_monomials() + monomial; }

private:
    int num_components_;
    int degree_;
    std::vector<MultiIndex> monomials_;
    std::map<MultiIndex, int> lookup_;
};

/// Matrix of D0 from degree-d V0 sections to degree-(d-1) V1 sections.
/// Its entries are Gaussian integers.
Matrix<GaussInt> d0_matrix(const ComplexParams& params, int degree);

/// Homogeneous V0 section from a coordinate vector of the given degree.
Spinor0Field section_from_coordinates(const ComplexParams& params, int degree, const std::vector<GaussRat>& coords);

struct DegreeBlock {
    int degree = 0;
    std::size_t first = 0;   ///< index of the first element of this degree
    std::size_t count = 0;
    std::size_t rank = 0;    ///< rank of the D0 matrix at this degree
    std::size_t domain = 0;  ///< dimension of homogeneous V0 sections of this degree
    Matrix<GaussRat> gram;   ///< gram(i, j) = <e_j, e_i> rational parts
};

class RegularBasis {
public:
    RegularBasis(const ComplexParams& params, int max_degree, std::vector<Spinor0Field> elements,
                 std::vector<DegreeBlock> blocks);

    const ComplexParams& params() const { return params_; }
    int max_degree() const { return max_degree_; }
    const std::vector<Spinor0Field>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<DegreeBlock>& blocks() const { return blocks_; }
    int element_degree(std::size_t i) const;

    /// Full Hermitian Gram matrix (block diagonal by degree); entry (i, j) = <e_j, e_i>.
    Matrix<GaussRat> gram() const;
    /// The elements of degree <= max_degree.
    RegularBasis truncated(int max_degree) const;

private:
    ComplexParams params_;
    int max_degree_;
    std::vector<Spinor0Field> elements_;
    std::vector<DegreeBlock> blocks_;
};

/// Exact basis of k-regular polynomial sections of degree <= max_degree.
RegularBasis regular_basis(const ComplexParams& params, int max_degree);

struct DimensionRow {
    int degree;
    std::size_t dimension;
    std::size_t cumulative;
};
std::vector<DimensionRow> dimension_table(const RegularBasis& basis);
std::vector<DimensionRow> dimension_table(const ComplexParams& params, int max_degree);

/// Coefficients c with gram * c = (<f, e_i>)_i, solved block by block.
std::vector<GaussRat> projection_coefficients(const Spinor0Field& f, const RegularBasis& basis);

/// Orthogonal projection of f onto the span of the basis (normal equations, exact).
Spinor0Field project_onto_regular(const Spinor0Field& f, const RegularBasis& basis);

/// sum_i c_i e_i
Spinor0Field combine(const RegularBasis& basis, const std::vector<GaussRat>& coeffs);

}  // namespace fueter

#endif  // FUETER_REGULAR_BASIS_HPP
