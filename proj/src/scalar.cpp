#include "fueter/scalar.hpp"

#include <stdexcept>

namespace fueter {

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    const Rational den = o.norm();
    if (sgn(den) == 0) throw std::domain_error("GaussRat: division by zero");
    *this *= o.conj();
    re /= den;
    im /= den;
    return *this;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
    const Integer den = b.re * b.re + b.im * b.im;
    if (sgn(den) == 0) throw std::domain_error("exact_div: division by zero");
    Integer nr = a.re * b.re + a.im * b.im;
    Integer ni = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(nr.get_mpz_t(), den.get_mpz_t()) || !mpz_divisible_p(ni.get_mpz_t(), den.get_mpz_t()))
        throw std::domain_error("exact_div: quotient is not a Gaussian integer");
    mpz_divexact(nr.get_mpz_t(), nr.get_mpz_t(), den.get_mpz_t());
    mpz_divexact(ni.get_mpz_t(), ni.get_mpz_t(), den.get_mpz_t());
    return {std::move(nr), std::move(ni)};
}

GaussRat to_rat(const GaussInt& z) { return {Rational(z.re), Rational(z.im)}; }

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const GaussRat& z) {
    return "(" + to_string(z.re) + ", " + to_string(z.im) + ")";
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits, 10);
    };
    const auto slash = text.find('/');
    Integer num = parse_int(text.substr(0, slash));
    Integer den = slash == std::string_view::npos ? Integer(1) : parse_int(text.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational binomial(long n, long r) {
    if (r < 0 || r > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return Rational(out);
}

}  // namespace fueter
