#include "fueter/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace fueter {

void MultiIndex::set(int var, int exponent) {
    if (exponent < 0 || exponent > 255) throw std::out_of_range("MultiIndex: exponent out of range");
    exps_.at(static_cast<std::size_t>(var)) = static_cast<std::uint8_t>(exponent);
}

void MultiIndex::bump(int var, int delta) { set(var, (*this)[var] + delta); }

int MultiIndex::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

std::uint64_t MultiIndex::parity_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] & 1U) mask |= std::uint64_t{1} << i;
    return mask;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.exps_.size() != b.exps_.size()) throw std::invalid_argument("MultiIndex: dimension mismatch");
    MultiIndex out(a);
    for (int i = 0; i < a.num_vars(); ++i) out.set(i, a[i] + b[i]);
    return out;
}

namespace {

void fill_monomials(int var, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (var == cur.num_vars() - 1) {
        cur.set(var, remaining);
        out.push_back(cur);
        cur.set(var, 0);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.set(var, e);
        fill_monomials(var + 1, remaining - e, cur, out);
    }
    cur.set(var, 0);
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int num_vars, int degree) {
    std::vector<MultiIndex> out;
    if (degree < 0 || num_vars < 1) return out;
    MultiIndex cur(num_vars);
    fill_monomials(0, degree, cur, out);
    return out;
}

Poly Poly::constant(int num_vars, const GaussRat& c) {
    Poly p(num_vars);
    p.add_term(MultiIndex(num_vars), c);
    return p;
}

Poly Poly::variable(int num_vars, int var) {
    MultiIndex alpha(num_vars);
    alpha.set(var, 1);
    return monomial(alpha, GaussRat(1));
}

Poly Poly::monomial(const MultiIndex& alpha, const GaussRat& c) {
    Poly p(alpha.num_vars());
    p.add_term(alpha, c);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [alpha, c] : terms_)
        if (alpha.degree() != d) return false;
    return true;
}

GaussRat Poly::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? GaussRat{} : it->second;
}

void Poly::add_term(const MultiIndex& alpha, const GaussRat& c) {
    if (c.is_zero()) return;
    if (nvars_ == 0) nvars_ = alpha.num_vars();
    if (alpha.num_vars() != nvars_) throw std::invalid_argument("Poly: dimension mismatch");
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::adopt_vars(const Poly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    if (o.nvars_ != 0 && o.nvars_ != nvars_) throw std::invalid_argument("Poly: dimension mismatch");
}

Poly Poly::conj() const {
    Poly out(nvars_);
    for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, c.conj());
    return out;
}

Poly Poly::derivative(int var) const {
    Poly out(nvars_);
    for (const auto& [alpha, c] : terms_) {
        const int e = alpha[var];
        if (e == 0) continue;
        MultiIndex beta(alpha);
        beta.bump(var, -1);
        out.add_term(beta, c * Rational(e));
    }
    return out;
}

Poly Poly::homogeneous_part(int degree) const {
    Poly out(nvars_);
    for (const auto& [alpha, c] : terms_)
        if (alpha.degree() == degree) out.terms_.emplace(alpha, c);
    return out;
}

GaussRat Poly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_ && !terms_.empty())
        throw std::invalid_argument("Poly::eval: point dimension mismatch");
    GaussRat sum;
    for (const auto& [alpha, c] : terms_) {
        Rational m = 1;
        for (int v = 0; v < alpha.num_vars(); ++v)
            for (int e = 0; e < alpha[v]; ++e) m *= point[static_cast<std::size_t>(v)];
        sum += c * m;
    }
    return sum;
}

Poly& Poly::operator+=(const Poly& o) {
    adopt_vars(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    adopt_vars(o);
    for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
    return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, v] : terms_) v *= c;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.nvars_ != 0 ? a.nvars_ : b.nvars_);
    out.adopt_vars(b);
    for (const auto& [alpha, ca] : a.terms_)
        for (const auto& [beta, cb] : b.terms_) out.add_term(alpha + beta, ca * cb);
    return out;
}

Poly norm_squared_poly(int num_vars) {
    Poly p(num_vars);
    for (int v = 0; v < num_vars; ++v) {
        MultiIndex alpha(num_vars);
        alpha.set(v, 2);
        p.add_term(alpha, GaussRat(1));
    }
    return p;
}

}  // namespace fueter
