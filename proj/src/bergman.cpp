#include "fueter/bergman.hpp"

#include "fueter/canonical.hpp"
#include "fueter/operators.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fueter {

double KernelMatrix::scale() const { return std::pow(2.0 / std::numbers::pi, 2 * n); }

double KernelMatrix::frobenius_norm() const {
    Rational sum = 0;
    for (std::size_t i = 0; i < value.rows(); ++i)
        for (std::size_t j = 0; j < value.cols(); ++j) sum += value(i, j).norm();
    return std::sqrt(sum.get_d()) * scale();
}

KernelTruncation::KernelTruncation(RegularBasis basis) : basis_(std::move(basis)) {
    for (const auto& b : basis_.blocks()) gram_inverse_.push_back(b.count ? inverse(b.gram) : Matrix<GaussRat>());
}

KernelTruncation::KernelTruncation(const ComplexParams& params, int degree)
    : KernelTruncation(regular_basis(params, degree)) {}

Matrix<GaussRat> KernelTruncation::values_at(std::span<const Rational> x) const {
    if (static_cast<int>(x.size()) != params().num_vars()) throw std::invalid_argument("point has wrong dimension");
    Matrix<GaussRat> b(static_cast<std::size_t>(params().dim_v0()), basis_.size());
    for (std::size_t a = 0; a < basis_.size(); ++a) {
        const auto vals = basis_.elements()[a].eval(x);
        for (std::size_t j = 0; j < vals.size(); ++j) b(j, a) = vals[j];
    }
    return b;
}

Matrix<GaussRat> KernelTruncation::weighted_values_at(std::span<const Rational> x) const {
    const Matrix<GaussRat> b = values_at(x);
    Matrix<GaussRat> out(b.rows(), b.cols());
    for (std::size_t blk = 0; blk < basis_.blocks().size(); ++blk) {
        const auto& block = basis_.blocks()[blk];
        const auto& ginv = gram_inverse_[blk];
        for (std::size_t j = 0; j < b.rows(); ++j)
            for (std::size_t c = 0; c < block.count; ++c) {
                GaussRat s;
                for (std::size_t r = 0; r < block.count; ++r) s += b(j, block.first + r) * ginv(r, c);
                out(j, block.first + c) = std::move(s);
            }
    }
    return out;
}

KernelMatrix kernel_eval(const KernelTruncation& trunc, std::span<const Rational> x, std::span<const Rational> y) {
    const Matrix<GaussRat> bx = trunc.weighted_values_at(x);
    const Matrix<GaussRat> by = trunc.values_at(y);
    KernelMatrix k{Matrix<GaussRat>(bx.rows(), by.rows()), trunc.params().n()};
    for (std::size_t i = 0; i < bx.rows(); ++i)
        for (std::size_t l = 0; l < by.rows(); ++l) {
            GaussRat s;
            for (std::size_t a = 0; a < bx.cols(); ++a) s += bx(i, a) * by(l, a).conj();
            k.value(i, l) = std::move(s);
        }
    return k;
}

Spinor0Field kernel_column(const KernelTruncation& trunc, std::span<const Rational> y, int l) {
    // (G^{-1} B(y)^*)_{a l} = conj((B(y) G^{-1})_{l a}) since G is Hermitian.
    const Matrix<GaussRat> wy = trunc.weighted_values_at(y);
    std::vector<GaussRat> coeffs(wy.cols());
    for (std::size_t a = 0; a < wy.cols(); ++a) coeffs[a] = wy(static_cast<std::size_t>(l), a).conj();
    return combine(trunc.basis(), coeffs);
}

bool ReproduceResult::exact() const {
    for (const auto& r : residual)
        if (!r.is_zero()) return false;
    return true;
}

ReproduceResult reproduce(const KernelTruncation& trunc, const Spinor0Field& f, std::span<const Rational> x) {
    if (!(f.params() == trunc.params())) throw std::invalid_argument("section parameter mismatch");
    ReproduceResult r;
    r.pointwise = f.eval(x);
    for (int j = 0; j < f.size(); ++j) {
        // Component l of the column equals conj(K_{jl}(x, y)); the (pi/2) factors cancel.
        r.kernel_side.push_back(ip_section(f, kernel_column(trunc, x, j)).value);
        r.residual.push_back(r.kernel_side.back() - r.pointwise[static_cast<std::size_t>(j)]);
    }
    return r;
}

double DecayProfile::log_slope() const {
    if (samples.size() < 2) return 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& s : samples) {
        const double ly = std::log(s.weighted_norm);
        sx += s.separation;
        sy += ly;
        sxx += s.separation * s.separation;
        sxy += s.separation * ly;
    }
    const double m = static_cast<double>(samples.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

namespace {

Rational norm_sq_point(std::span<const Rational> p) {
    Rational s = 0;
    for (const auto& v : p) s += v * v;
    return s;
}

}  // namespace

DecayProfile decay_profile(const KernelTruncation& trunc, const RaySpec& ray) {
    const auto nv = static_cast<std::size_t>(trunc.params().num_vars());
    if (ray.steps < 2) throw std::invalid_argument("decay profile needs at least 2 steps");
    if (ray.origin.size() != nv || ray.direction.size() != nv) throw std::invalid_argument("ray has wrong dimension");
    if (ray.step <= 0 || ray.first < 0) throw std::invalid_argument("ray parameters must increase from a nonnegative start");
    const Rational dir_sq = norm_sq_point(ray.direction);
    if (dir_sq == 0) throw std::invalid_argument("ray direction is zero");

    DecayProfile profile;
    profile.degree = trunc.degree();
    for (int s = 0; s < ray.steps; ++s) {
        const Rational t = ray.first + s * ray.step;
        DecaySample sample;
        sample.x = ray.origin;
        for (std::size_t v = 0; v < nv; ++v) sample.y.push_back(ray.origin[v] + t * ray.direction[v]);
        sample.separation = std::sqrt(Rational(t * t * dir_sq).get_d());
        sample.raw_norm = kernel_eval(trunc, sample.x, sample.y).frobenius_norm();
        const Rational exponent = norm_sq_point(sample.x) + norm_sq_point(sample.y);
        sample.weighted_norm = sample.raw_norm * std::exp(-exponent.get_d());
        profile.samples.push_back(std::move(sample));
    }
    return profile;
}

std::string decay_profile_csv(const DecayProfile& profile) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "# truncated weighted k-Bergman kernel along a ray; degree " << profile.degree << "\n";
    out << "# raw_norm = Frobenius norm of K_d(x,y); weighted_norm = raw_norm * exp(-|x|^2 - |y|^2)\n";
    out << "# the truncated kernel is polynomial: this profile is qualitative and cannot show the"
           " large-separation asymptotics of the full kernel\n";
    out << std::setprecision(6) << "# empirical log-slope of weighted_norm vs sep: " << profile.log_slope() << "\n";
    out << "sep,raw_norm,weighted_norm,degree\n";
    out << std::setprecision(12);
    for (const auto& s : profile.samples)
        out << s.separation << ',' << s.raw_norm << ',' << s.weighted_norm << ',' << profile.degree << '\n';
    return out.str();
}

WeightedScalar projection_consistency(const Spinor0Field& f, int degree) {
    if (f.degree() > degree) throw std::invalid_argument("f exceeds the truncation degree");
    return projection_consistency(f, CanonicalSolver(f.params(), degree));
}

WeightedScalar projection_consistency(const Spinor0Field& f, const CanonicalSolver& solver) {
    if (f.degree() > solver.degree()) throw std::invalid_argument("f exceeds the truncation degree");
    const SolveReport solve = solver.solve(d0_apply(f));
    const Spinor0Field pf = project_onto_regular(f, solver.basis());
    return norm_sq(pf - (f - solve.u));
}

}  // namespace fueter
