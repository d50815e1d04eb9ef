#pragma once

// Exponential polynomials over the field of fractions of the exponential
// constants Q[E(mu)], together with derivation, integration from 0 and
// point evaluation.

#include <intdiff/rational.hpp>

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace intdiff {

// Finite sum  sum_mu q_mu E(mu)  with E(mu) = e^mu, mu rational.
class ExpConstant {
public:
    using Terms = std::map<Rational, Rational>;  // exponent -> coefficient, no zeros

    ExpConstant() = default;
    ExpConstant(const Rational& c);  // NOLINT: c * E(0)
    ExpConstant(long c) : ExpConstant(Rational(c)) {}  // NOLINT
    static ExpConstant exp(const Rational& mu, const Rational& coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    Rational min_exponent() const;    // requires !is_zero()

    void add_term(const Rational& mu, const Rational& c);

    ExpConstant operator-() const;
    friend ExpConstant operator+(const ExpConstant& a, const ExpConstant& b);
    friend ExpConstant operator-(const ExpConstant& a, const ExpConstant& b);
    friend ExpConstant operator*(const ExpConstant& a, const ExpConstant& b);
    friend bool operator==(const ExpConstant& a, const ExpConstant& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

// Element of the fraction field K of Q[E(mu)].  Numerator and denominator are
// reduced by a polynomial gcd in E(1/d) and the denominator starts at E(0)
// with coefficient 1.  Equality falls back to cross-multiplication.
class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(const Rational& q) : num_(q), den_(Rational(1)) {}  // NOLINT
    Scalar(long q) : Scalar(Rational(q)) {}                    // NOLINT
    Scalar(int q) : Scalar(Rational(q)) {}                     // NOLINT
    Scalar(ExpConstant num, ExpConstant den);
    Scalar(const ExpConstant& num) : Scalar(num, ExpConstant(Rational(1))) {}  // NOLINT
    static Scalar exp(const Rational& mu) { return Scalar(ExpConstant::exp(mu)); }

    const ExpConstant& num() const { return num_; }
    const ExpConstant& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.is_rational() && den_.is_rational(); }
    Rational rational_value() const;  // requires is_rational()

    Scalar inv() const;  // throws DivisionByZero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    struct Raw {};
    Scalar(ExpConstant num, ExpConstant den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    ExpConstant num_;
    ExpConstant den_;
};

Scalar scalar_inv(const Scalar& s);

// Guaranteed-precision float value: interval arithmetic with increasing
// working precision until the enclosure is narrower than tol (relative to
// max(1, |value|)).
double eval_float(const Scalar& s, double tol = 1e-15);

// x^degree e^(freq x)
struct Monomial {
    Rational freq;
    unsigned degree = 0;

    static Monomial one() { return Monomial{Rational(0), 0}; }
    bool is_one() const { return degree == 0 && freq == 0; }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree == b.degree && a.freq == b.freq;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int c = cmp(a.freq, b.freq);
        return c != 0 ? c < 0 : a.degree < b.degree;
    }
};

// Characters are point evaluations ev_a; ev_0 is the evaluation e of the
// section integral from 0.
using Character = Rational;

class ExpPoly {
public:
    using Terms = std::map<Monomial, Scalar>;  // no zero coefficients

    ExpPoly() = default;
    ExpPoly(const Scalar& c);  // NOLINT: constant
    ExpPoly(long c) : ExpPoly(Scalar(c)) {}  // NOLINT
    ExpPoly(int c) : ExpPoly(Scalar(c)) {}   // NOLINT
    static ExpPoly monomial(const Monomial& m, const Scalar& c = Scalar(1));
    static ExpPoly x(unsigned degree = 1) { return monomial(Monomial{0, degree}); }
    static ExpPoly exp(const Rational& freq) { return monomial(Monomial{freq, 0}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;  // coefficient of 1
    Scalar coefficient(const Monomial& m) const;
    unsigned max_degree() const;
    // Leading term in the canonical (descending) order; requires !is_zero().
    std::pair<Monomial, Scalar> leading() const;

    void add_term(const Monomial& m, const Scalar& c);

    ExpPoly operator-() const;
    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const Scalar& c, const ExpPoly& a);
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

ExpPoly monomial_product(const Monomial& a, const Monomial& b, const Scalar& c);

ExpPoly derive(const ExpPoly& f);
ExpPoly derive(const ExpPoly& f, unsigned times);
ExpPoly derive(const Monomial& m);
// Antiderivative vanishing at 0.
ExpPoly integrate(const ExpPoly& f);
ExpPoly integrate(const Monomial& m);
Scalar evaluate(const ExpPoly& f, const Character& a);
Scalar evaluate(const Monomial& m, const Character& a);
// k-fold iterated integral from 0 (f^(-k)).
ExpPoly antider(const ExpPoly& f, unsigned k);

}  // namespace intdiff
