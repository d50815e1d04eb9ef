#include <intdiff/errors.hpp>
#include <intdiff/rational.hpp>

namespace intdiff {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

Rational falling(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (n - i);
    return Rational(r);
}

Rational power(const Rational& base, unsigned exponent) {
    Rational r(1);
    Rational b(base);
    while (exponent != 0) {
        if (exponent & 1u) r *= b;
        exponent >>= 1u;
        if (exponent != 0) b *= b;
    }
    return r;
}

Integer lcm_of_denominators(const Rational& a, const Integer& acc) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), acc.get_mpz_t(), a.get_den_mpz_t());
    return r;
}

}  // namespace intdiff
