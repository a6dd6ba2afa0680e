#ifndef FUETER_SECTIONS_HPP
#define FUETER_SECTIONS_HPP

// Polynomial sections of V0 = Sym^k C^2, V1 = Sym^{k-1} C^2 (x) C^{2n} and
// V2 = Sym^{k-2} C^2 (x) Wedge^2 C^{2n}. Symmetric primed indices are stored once
// per slot; Wedge^2 is stored on pairs A < B.

#include "fueter/poly.hpp"
#include "fueter/spinor.hpp"

#include <span>
#include <string>
#include <vector>

namespace fueter {

enum class Space { V0, V1, V2 };

std::string space_name(Space s);

/// Number of stored components of a section of the given space.
int component_count(Space s, const ComplexParams& params);

template <Space S>
class Section {
public:
    explicit Section(const ComplexParams& params)
        : params_(params), comps_(static_cast<std::size_t>(component_count(S, params)), Poly(params.num_vars())) {}

    static constexpr Space space = S;

    const ComplexParams& params() const { return params_; }
    int size() const { return static_cast<int>(comps_.size()); }
    const Poly& component(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
    Poly& component(int i) { return comps_.at(static_cast<std::size_t>(i)); }
    std::span<const Poly> components() const { return comps_; }

    /// Weight of component i in the induced inner product.
    long multiplicity(int i) const;
    /// Primed slot of component i.
    PrimedSlot slot_of(int i) const;

    // V0: component f_j, j = number of 1' indices.
    int index(int ones) const requires(S == Space::V0) { return ones; }
    // V1: f_{tail, A}.
    int index(int ones, int a) const requires(S == Space::V1) { return ones * params_.num_unprimed() + a; }
    int unprimed_of(int i) const requires(S == Space::V1) { return i % params_.num_unprimed(); }
    // V2: f_{AB, tail} with A < B.
    int index(const UnprimedPair& pair, int ones) const requires(S == Space::V2) {
        return pair.index(params_.num_unprimed()) * (params_.k() - 1) + ones;
    }
    UnprimedPair pair_of(int i) const requires(S == Space::V2) {
        return UnprimedPair::from_index(i / (params_.k() - 1), params_.num_unprimed());
    }
    /// f_{AB, tail} for any ordered (A, B), antisymmetric on read.
    Poly read(int a, int b, int ones) const requires(S == Space::V2) {
        const auto o = orient(a, b);
        if (o.sign == 0) return Poly(params_.num_vars());
        const Poly& p = component(index(UnprimedPair(o.a, o.b), ones));
        return o.sign > 0 ? p : -p;
    }

    int degree() const {
        int d = -1;
        for (const auto& p : comps_) d = std::max(d, p.degree());
        return d;
    }
    bool is_zero() const {
        for (const auto& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    Section& operator+=(const Section& o) {
        check_same(o);
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
        return *this;
    }
    Section& operator-=(const Section& o) {
        check_same(o);
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
        return *this;
    }
    Section& operator*=(const GaussRat& c) {
        for (auto& p : comps_) p *= c;
        return *this;
    }
    friend Section operator+(Section a, const Section& b) { return a += b; }
    friend Section operator-(Section a, const Section& b) { return a -= b; }
    friend Section operator*(Section a, const GaussRat& c) { return a *= c; }
    friend Section operator*(const GaussRat& c, Section a) { return a *= c; }
    friend bool operator==(const Section& a, const Section& b) { return a.params_ == b.params_ && a.comps_ == b.comps_; }

    Section homogeneous_part(int degree) const {
        Section out(params_);
        for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i].homogeneous_part(degree);
        return out;
    }
    /// Component values at a rational point.
    std::vector<GaussRat> eval(std::span<const Rational> point) const {
        std::vector<GaussRat> out;
        out.reserve(comps_.size());
        for (const auto& p : comps_) out.push_back(p.eval(point));
        return out;
    }

    void check_same(const Section& o) const {
        if (!(params_ == o.params_)) throw std::invalid_argument("section parameter mismatch");
    }

private:
    ComplexParams params_;
    std::vector<Poly> comps_;
};

using Spinor0Field = Section<Space::V0>;
using Spinor1Field = Section<Space::V1>;
using Spinor2Field = Section<Space::V2>;

template <Space S>
PrimedSlot Section<S>::slot_of(int i) const {
    const int k = params_.k();
    if constexpr (S == Space::V0) return {k, i};
    else if constexpr (S == Space::V1) return {k - 1, i / params_.num_unprimed()};
    else return {k - 2, i % (k - 1)};
}

template <Space S>
long Section<S>::multiplicity(int i) const {
    // Each unordered pair stands for the two ordered pairs (A,B) and (B,A).
    const long pair_factor = S == Space::V2 ? 2 : 1;
    return pair_factor * slot_multiplicity(slot_of(i));
}

}  // namespace fueter

#endif  // FUETER_SECTIONS_HPP
