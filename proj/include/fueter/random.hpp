#ifndef FUETER_RANDOM_HPP
#define FUETER_RANDOM_HPP

// Seeded generation of random polynomial sections.
//
// The generator is std::mt19937_64 (fully specified by the C++ standard), and
// every draw is `engine() % range`, so a seed produces the same sections on
// any conforming implementation. Per component: term count in [0, 5]; per
// term: total degree uniform in [0, max_degree], each unit of degree assigned
// to a uniformly chosen variable; real and imaginary parts p/q with p uniform
// in [-9, 9] and q uniform in {1, 2, 3}.

#include "fueter/sections.hpp"

#include <cstdint>
#include <random>

namespace fueter {

class SectionSampler {
public:
    explicit SectionSampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t uniform(std::uint64_t range) { return engine_() % range; }
    Rational coefficient();
    GaussRat complex_coefficient();
    MultiIndex exponent(int num_vars, int max_degree);
    Poly poly(int num_vars, int max_degree, int max_terms = 5);
    /// Rational point with coordinates p/q, |p| <= 9, q in {1,2,3}.
    std::vector<Rational> point(int num_vars);

    template <Space S>
    Section<S> section(const ComplexParams& params, int max_degree) {
        Section<S> out(params);
        for (int i = 0; i < out.size(); ++i) out.component(i) = poly(params.num_vars(), max_degree);
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace fueter

#endif  // FUETER_RANDOM_HPP
