#include "fueter/spinor.hpp"

#include <bit>
#include <string>

namespace fueter {

ComplexParams::ComplexParams(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("ComplexParams: n must be >= 1, got " + std::to_string(n));
    if (k < 2) throw std::invalid_argument("ComplexParams: k must be >= 2, got " + std::to_string(k));
}

PrimedSlot::PrimedSlot(int length, int ones) : length(length), ones(ones) {
    if (length < 0 || ones < 0 || ones > length) throw std::invalid_argument("PrimedSlot: ones out of range");
}

int PrimedWord::ones() const { return std::popcount(bits); }

std::vector<PrimedWord> all_words(int length) {
    if (length < 0 || length > 20) throw std::invalid_argument("all_words: unsupported length");
    std::vector<PrimedWord> out;
    out.reserve(std::size_t{1} << length);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) out.push_back({length, bits});
    return out;
}

UnprimedPair::UnprimedPair(int a, int b) : a(a), b(b) {
    if (a < 0 || a >= b) throw std::invalid_argument("UnprimedPair: requires 0 <= A < B");
}

int UnprimedPair::index(int dim) const {
    // pairs (0,1),(0,2),...,(0,dim-1),(1,2),...
    return a * dim - a * (a + 1) / 2 + (b - a - 1);
}

UnprimedPair UnprimedPair::from_index(int index, int dim) {
    for (int a = 0; a < dim; ++a) {
        const int row = dim - a - 1;
        if (index < row) return {a, a + 1 + index};
        index -= row;
    }
    throw std::out_of_range("UnprimedPair::from_index");
}

OrientedPair orient(int a, int b) {
    if (a == b) return {0, a, b};
    if (a < b) return {1, a, b};
    return {-1, b, a};
}

EpsilonTables::EpsilonTables(int n) : dim_(2 * n) {}

int EpsilonTables::unprimed_lower(int a, int b) const {
    if (a / 2 != b / 2) return 0;
    return kPrimedLower[a % 2][b % 2];
}

int EpsilonTables::unprimed_upper(int a, int b) const {
    if (a / 2 != b / 2) return 0;
    return kPrimedUpper[a % 2][b % 2];
}

long slot_multiplicity(const PrimedSlot& slot) { return binomial(slot.length, slot.ones).get_num().get_si(); }

std::vector<SlotTerm> expand_symmetrization(int head, const PrimedSlot& tail) {
    if (head != 0 && head != 1) throw std::invalid_argument("expand_symmetrization: head must be 0' or 1'");
    const int k = tail.length + 1;
    // Placing the head at any of the k positions keeps the multiset of
    // indices, hence the slot, unchanged.
    return std::vector<SlotTerm>(k, SlotTerm{prepend(head, tail), frac(1, k)});
}

std::vector<SlotTerm> collapse(const std::vector<SlotTerm>& terms) {
    std::map<PrimedSlot, Rational> merged;
    for (const auto& t : terms) merged[t.slot] += t.coeff;
    std::vector<SlotTerm> out;
    for (auto& [slot, c] : merged)
        if (sgn(c) != 0) out.push_back({slot, c});
    return out;
}

std::vector<HeadSplit> head_decomposition(const PrimedSlot& slot) {
    const int k = slot.length;
    if (k < 1) throw std::invalid_argument("head_decomposition: slot must have length >= 1");
    std::vector<HeadSplit> out;
    if (slot.ones < k) out.push_back({0, PrimedSlot(k - 1, slot.ones), frac(k - slot.ones, k)});
    if (slot.ones > 0) out.push_back({1, PrimedSlot(k - 1, slot.ones - 1), frac(slot.ones, k)});
    return out;
}

}  // namespace fueter
