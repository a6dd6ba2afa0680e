#include "fueter/regular_basis.hpp"

#include "fueter/operators.hpp"
#include "fueter/parallel.hpp"

#include <stdexcept>

namespace fueter {

HomogeneousCoordinates::HomogeneousCoordinates(int num_components, int num_vars, int degree)
    : num_components_(num_components), degree_(degree) {
    if (degree >= 0) monomials_ = monomials_of_degree(num_vars, degree);
    for (std::size_t m = 0; m < monomials_.size(); ++m) lookup_.emplace(monomials_[m], static_cast<int>(m));
}

int HomogeneousCoordinates::monomial_index(const MultiIndex& alpha) const {
    auto it = lookup_.find(alpha);
    return it == lookup_.end() ? -1 : it->second;
}

namespace {

GaussInt to_gauss_int(const GaussRat& z) {
    if (z.re.get_den() != 1 || z.im.get_den() != 1) throw std::logic_error("non-integral D0 matrix entry");
    return {z.re.get_num(), z.im.get_num()};
}

}  // namespace

Matrix<GaussInt> d0_matrix(const ComplexParams& params, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    const int nv = params.num_vars();
    const HomogeneousCoordinates domain(params.dim_v0(), nv, degree);
    const HomogeneousCoordinates target(params.dim_v1(), nv, degree - 1);
    Matrix<GaussInt> m(static_cast<std::size_t>(target.size()), static_cast<std::size_t>(domain.size()));
    if (degree == 0) return m;

    const ComplexOperators ops(params);
    for (int j = 0; j < params.dim_v0(); ++j) {
        for (int mono = 0; mono < domain.num_monomials(); ++mono) {
            Spinor0Field f(params);
            f.component(j) = Poly::monomial(domain.monomial(mono), GaussRat(1));
            const Spinor1Field image = ops.d0(f);
            const auto col = static_cast<std::size_t>(domain.coordinate(j, mono));
            for (int i = 0; i < image.size(); ++i) {
                for (const auto& [alpha, c] : image.component(i).terms()) {
                    const int row_mono = target.monomial_index(alpha);
                    if (row_mono < 0) throw std::logic_error("D0 image has unexpected degree");
                    m(static_cast<std::size_t>(target.coordinate(i, row_mono)), col) = to_gauss_int(c);
                }
            }
        }
    }
    return m;
}

Spinor0Field section_from_coordinates(const ComplexParams& params, int degree, const std::vector<GaussRat>& coords) {
    const HomogeneousCoordinates coordinates(params.dim_v0(), params.num_vars(), degree);
    if (static_cast<int>(coords.size()) != coordinates.size()) throw std::invalid_argument("coordinate vector has wrong length");
    Spinor0Field f(params);
    for (int j = 0; j < params.dim_v0(); ++j)
        for (int mono = 0; mono < coordinates.num_monomials(); ++mono) {
            const auto& c = coords[static_cast<std::size_t>(coordinates.coordinate(j, mono))];
            if (!c.is_zero()) f.component(j).add_term(coordinates.monomial(mono), c);
        }
    return f;
}

RegularBasis::RegularBasis(const ComplexParams& params, int max_degree, std::vector<Spinor0Field> elements,
                           std::vector<DegreeBlock> blocks)
    : params_(params), max_degree_(max_degree), elements_(std::move(elements)), blocks_(std::move(blocks)) {}

int RegularBasis::element_degree(std::size_t i) const {
    for (const auto& b : blocks_)
        if (i >= b.first && i < b.first + b.count) return b.degree;
    throw std::out_of_range("basis element index");
}

Matrix<GaussRat> RegularBasis::gram() const {
    Matrix<GaussRat> g(size(), size());
    for (const auto& b : blocks_)
        for (std::size_t i = 0; i < b.count; ++i)
            for (std::size_t j = 0; j < b.count; ++j) g(b.first + i, b.first + j) = b.gram(i, j);
    return g;
}

RegularBasis RegularBasis::truncated(int max_degree) const {
    if (max_degree > max_degree_) throw std::invalid_argument("cannot truncate above the computed degree");
    std::vector<DegreeBlock> blocks;
    std::size_t count = 0;
    for (const auto& b : blocks_)
        if (b.degree <= max_degree) {
            blocks.push_back(b);
            count += b.count;
        }
    std::vector<Spinor0Field> elements(elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(count));
    return RegularBasis(params_, max_degree, std::move(elements), std::move(blocks));
}

RegularBasis regular_basis(const ComplexParams& params, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
    const auto degrees = static_cast<std::size_t>(max_degree) + 1;
    std::vector<std::vector<Spinor0Field>> per_degree(degrees);
    std::vector<DegreeBlock> blocks(degrees);

    parallel_for(degrees, [&](std::size_t d) {
        const int degree = static_cast<int>(d);
        const Matrix<GaussInt> m = d0_matrix(params, degree);
        const auto kernel = nullspace(m);
        auto& block = blocks[d];
        block.degree = degree;
        block.domain = m.cols();
        block.rank = m.cols() - kernel.size();
        block.count = kernel.size();
        auto& elems = per_degree[d];
        elems.reserve(kernel.size());
        for (const auto& v : kernel) elems.push_back(section_from_coordinates(params, degree, v));
        block.gram = Matrix<GaussRat>(elems.size(), elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i; j < elems.size(); ++j) {
                GaussRat v = ip_section(elems[j], elems[i]).value;
                if (i != j) block.gram(j, i) = v.conj();
                else v.im = 0;
                block.gram(i, j) = std::move(v);
            }
    });

    std::vector<Spinor0Field> elements;
    std::size_t first = 0;
    for (std::size_t d = 0; d < degrees; ++d) {
        blocks[d].first = first;
        first += blocks[d].count;
        for (auto& e : per_degree[d]) elements.push_back(std::move(e));
    }
    return RegularBasis(params, max_degree, std::move(elements), std::move(blocks));
}

std::vector<DimensionRow> dimension_table(const RegularBasis& basis) {
    std::vector<DimensionRow> rows;
    std::size_t total = 0;
    for (const auto& b : basis.blocks()) {
        total += b.count;
        rows.push_back({b.degree, b.count, total});
    }
    return rows;
}

std::vector<DimensionRow> dimension_table(const ComplexParams& params, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
    std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1);
    parallel_for(dims.size(), [&](std::size_t d) {
        const Matrix<GaussInt> m = d0_matrix(params, static_cast<int>(d));
        dims[d] = m.cols() - fraction_free_rref(m).rank();
    });
    std::vector<DimensionRow> rows;
    std::size_t total = 0;
    for (std::size_t d = 0; d < dims.size(); ++d) {
        total += dims[d];
        rows.push_back({static_cast<int>(d), dims[d], total});
    }
    return rows;
}

std::vector<GaussRat> projection_coefficients(const Spinor0Field& f, const RegularBasis& basis) {
    if (!(f.params() == basis.params())) throw std::invalid_argument("section parameter mismatch");
    std::vector<GaussRat> coeffs(basis.size());
    for (const auto& b : basis.blocks()) {
        if (b.count == 0) continue;
        // Elements of different degrees are homogeneous harmonic sections, hence
        // mutually orthogonal, so the normal equations split into degree blocks.
        std::vector<GaussRat> rhs(b.count);
        for (std::size_t i = 0; i < b.count; ++i) rhs[i] = ip_section(f, basis.elements()[b.first + i]).value;
        const auto c = solve_square(b.gram, std::move(rhs));
        for (std::size_t i = 0; i < b.count; ++i) coeffs[b.first + i] = c[i];
    }
    return coeffs;
}

Spinor0Field combine(const RegularBasis& basis, const std::vector<GaussRat>& coeffs) {
    if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient vector has wrong length");
    Spinor0Field out(basis.params());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) out += basis.elements()[i] * coeffs[i];
    return out;
}

Spinor0Field project_onto_regular(const Spinor0Field& f, const RegularBasis& basis) {
    return combine(basis, projection_coefficients(f, basis));
}

}  // namespace fueter
