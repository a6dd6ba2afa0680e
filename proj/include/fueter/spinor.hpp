#ifndef FUETER_SPINOR_HPP
#define FUETER_SPINOR_HPP

// Index bookkeeping for symmetric primed spinor indices (0', 1') and
// antisymmetric unprimed pairs (A, B in 0..2n-1).

#include "fueter/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fueter {

/// Quaternionic dimension n (the space is R^{4n}) and spinor weight k.
class ComplexParams {
public:
    ComplexParams(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int num_vars() const { return 4 * n_; }
    int num_unprimed() const { return 2 * n_; }

    int dim_v0() const { return k_ + 1; }
    int dim_v1() const { return 2 * k_ * n_; }
    int dim_v2() const { return (k_ - 1) * n_ * (2 * n_ - 1); }

    friend bool operator==(const ComplexParams&, const ComplexParams&) = default;

private:
    int n_;
    int k_;
};

/// Canonical representative of a symmetric primed word: its length and the
/// number of indices equal to 1'.
struct PrimedSlot {
    int length = 0;
    int ones = 0;

    PrimedSlot() = default;
    PrimedSlot(int length, int ones);

    friend bool operator==(const PrimedSlot&, const PrimedSlot&) = default;
    friend auto operator<=>(const PrimedSlot&, const PrimedSlot&) = default;
};

/// A raw primed word A_1'...A_L'; bit i set means position i holds 1'.
struct PrimedWord {
    int length = 0;
    std::uint64_t bits = 0;

    int ones() const;
    int at(int pos) const { return static_cast<int>((bits >> pos) & 1U); }
    PrimedSlot slot() const { return {length, ones()}; }

    friend bool operator==(const PrimedWord&, const PrimedWord&) = default;
    friend auto operator<=>(const PrimedWord&, const PrimedWord&) = default;
};

std::vector<PrimedWord> all_words(int length);

/// Unordered unprimed pair stored with A < B.
struct UnprimedPair {
    int a = 0;
    int b = 1;

    UnprimedPair(int a, int b);

    /// Position of (a, b) in the lexicographic enumeration of pairs a < b < dim.
    int index(int dim) const;
    static UnprimedPair from_index(int index, int dim);
    static int count(int dim) { return dim * (dim - 1) / 2; }
};

/// Sign and canonical pair for reading f_{AB}: +1 for A < B, -1 for A > B, 0 on the diagonal.
struct OrientedPair {
    int sign;
    int a;
    int b;
};
OrientedPair orient(int a, int b);

/// The raising/lowering tables for primed and unprimed indices.
class EpsilonTables {
public:
    explicit EpsilonTables(int n);

    /// eps_{A'B'}
    int primed_lower(int a, int b) const { return kPrimedLower[a][b]; }
    /// eps^{A'B'}
    int primed_upper(int a, int b) const { return kPrimedUpper[a][b]; }
    /// eps_{AB}, block diagonal with [[0,1],[-1,0]] blocks.
    int unprimed_lower(int a, int b) const;
    /// eps^{AB}, the inverse of eps_{AB}.
    int unprimed_upper(int a, int b) const;
    int unprimed_dim() const { return dim_; }

private:
    static constexpr int kPrimedLower[2][2] = {{0, 1}, {-1, 0}};
    static constexpr int kPrimedUpper[2][2] = {{0, -1}, {1, 0}};
    int dim_;
};

/// Number of raw words collapsing to the slot: C(length, ones).
long slot_multiplicity(const PrimedSlot& slot);

/// Averages raw word values over each slot's orbit. Every word of the common
/// length must be present; throws std::invalid_argument otherwise.
template <class T>
std::map<PrimedSlot, T> symmetrize_components(const std::map<PrimedWord, T>& raw) {
    if (raw.empty()) throw std::invalid_argument("symmetrize_components: empty input");
    const int length = raw.begin()->first.length;
    std::map<PrimedSlot, T> out;
    for (const auto& word : all_words(length)) {
        auto it = raw.find(word);
        if (it == raw.end()) throw std::invalid_argument("symmetrize_components: missing primed word");
        auto [pos, inserted] = out.try_emplace(word.slot(), it->second);
        if (!inserted) pos->second += it->second;
    }
    if (raw.size() != std::size_t{1} << length)
        throw std::invalid_argument("symmetrize_components: words of mixed length");
    for (auto& [slot, value] : out) value *= frac(1, slot_multiplicity(slot));
    return out;
}

/// One term of a symmetrization expansion.
struct SlotTerm {
    PrimedSlot slot;
    Rational coeff;
};

/// Symmetrizes the word (head, tail...) over its k = tail.length + 1
/// positions: k terms with coefficient 1/k each, all in the same slot.
std::vector<SlotTerm> expand_symmetrization(int head, const PrimedSlot& tail);

/// Merges terms with equal slots and drops zero coefficients.
std::vector<SlotTerm> collapse(const std::vector<SlotTerm>& terms);

/// The transpose of expand_symmetrization: for a target slot of length k,
/// the (head, tail) pairs whose symmetrization reaches it and their weights.
/// For F symmetric in its tail, F_{(w)} = sum weight * F(head, tail).
struct HeadSplit {
    int head;
    PrimedSlot tail;
    Rational weight;
};
std::vector<HeadSplit> head_decomposition(const PrimedSlot& slot);

/// Prepends a primed index to a symmetric tail.
inline PrimedSlot prepend(int head, const PrimedSlot& tail) { return {tail.length + 1, tail.ones + head}; }

/// v^{A'} = sum_{B'} v_{B'} eps^{B'A'}.
template <class T>
std::array<T, 2> raise_primed(const std::array<T, 2>& lowered) {
    std::array<T, 2> out{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const int e = EpsilonTables(1).primed_upper(b, a);
            if (e == 1) out[a] += lowered[b];
            if (e == -1) out[a] -= lowered[b];
        }
    return out;
}

/// v_{A'} = sum_{B'} v^{B'} eps_{B'A'}.
template <class T>
std::array<T, 2> lower_primed(const std::array<T, 2>& raised) {
    std::array<T, 2> out{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const int e = EpsilonTables(1).primed_lower(b, a);
            if (e == 1) out[a] += raised[b];
            if (e == -1) out[a] -= raised[b];
        }
    return out;
}

}  // namespace fueter

#endif  // FUETER_SPINOR_HPP
