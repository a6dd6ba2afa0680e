#include "fueter/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace fueter {

double WeightedScalar::to_double() const {
    return value.re.get_d() * std::pow(std::numbers::pi / 2.0, 2.0 * n);
}

WeightedScalar& WeightedScalar::operator+=(const WeightedScalar& o) {
    if (o.n != n) throw std::invalid_argument("WeightedScalar: dimension mismatch");
    value += o.value;
    return *this;
}

WeightedScalar& WeightedScalar::operator-=(const WeightedScalar& o) {
    if (o.n != n) throw std::invalid_argument("WeightedScalar: dimension mismatch");
    value -= o.value;
    return *this;
}

Rational moment_1d(int m) {
    if (m < 0) throw std::invalid_argument("moment_1d: negative exponent");
    if (m % 2 != 0) return 0;
    // m(2p) = ((2p-1)/4) m(2p-2), m(0) = 1
    thread_local std::vector<Rational> table{Rational(1)};
    while (static_cast<int>(table.size()) <= m / 2) {
        const long p = static_cast<long>(table.size());
        table.push_back(table.back() * frac(2 * p - 1, 4));
    }
    return table[static_cast<std::size_t>(m / 2)];
}

WeightedScalar monomial_moment(const MultiIndex& alpha) {
    if (alpha.num_vars() % 4 != 0) throw std::invalid_argument("monomial_moment: expected 4n exponents");
    WeightedScalar out{GaussRat(1), alpha.num_vars() / 4};
    for (int v = 0; v < alpha.num_vars(); ++v) {
        if (alpha[v] % 2 != 0) return {GaussRat{}, out.n};
        out.value *= moment_1d(alpha[v]);
    }
    return out;
}

WeightedScalar ip_poly(const Poly& p, const Poly& q) {
    if (!p.is_zero() && !q.is_zero() && p.num_vars() != q.num_vars())
        throw std::invalid_argument("ip_poly: dimension mismatch");
    const int nvars = p.num_vars() != 0 ? p.num_vars() : q.num_vars();
    if (nvars % 4 != 0) throw std::invalid_argument("ip_poly: expected 4n variables");
    WeightedScalar out{GaussRat{}, nvars / 4};
    if (p.is_zero() || q.is_zero()) return out;

    // Only pairs whose odd-exponent patterns agree have nonzero moments.
    std::unordered_map<std::uint64_t, std::vector<const Poly::Terms::value_type*>> buckets;
    for (const auto& term : q.terms()) buckets[term.first.parity_mask()].push_back(&term);
    for (const auto& [alpha, ca] : p.terms()) {
        auto it = buckets.find(alpha.parity_mask());
        if (it == buckets.end()) continue;
        for (const auto* term : it->second) {
            Rational m = 1;
            for (int v = 0; v < nvars; ++v) m *= moment_1d(alpha[v] + term->first[v]);
            out.value += ca * term->second.conj() * m;
        }
    }
    return out;
}

}  // namespace fueter
