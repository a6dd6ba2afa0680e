#include "fueter/random.hpp"

namespace fueter {

Rational SectionSampler::coefficient() {
    const long p = static_cast<long>(uniform(19)) - 9;
    const long q = static_cast<long>(uniform(3)) + 1;
    return frac(p, q);
}

GaussRat SectionSampler::complex_coefficient() {
    Rational re = coefficient();
    Rational im = coefficient();
    return {std::move(re), std::move(im)};
}

MultiIndex SectionSampler::exponent(int num_vars, int max_degree) {
    MultiIndex alpha(num_vars);
    const int degree = static_cast<int>(uniform(static_cast<std::uint64_t>(max_degree) + 1));
    for (int i = 0; i < degree; ++i) alpha.bump(static_cast<int>(uniform(static_cast<std::uint64_t>(num_vars))), 1);
    return alpha;
}

Poly SectionSampler::poly(int num_vars, int max_degree, int max_terms) {
    Poly p(num_vars);
    const int terms = static_cast<int>(uniform(static_cast<std::uint64_t>(max_terms) + 1));
    for (int t = 0; t < terms; ++t) {
        MultiIndex alpha = exponent(num_vars, max_degree);
        p.add_term(alpha, complex_coefficient());
    }
    return p;
}

std::vector<Rational> SectionSampler::point(int num_vars) {
    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(num_vars));
    for (int v = 0; v < num_vars; ++v) x.push_back(coefficient());
    return x;
}

}  // namespace fueter
