#include <intdiff/errors.hpp>
#include <intdiff/expalg.hpp>

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace intdiff {

// ---------------------------------------------------------------- ExpConstant

ExpConstant::ExpConstant(const Rational& c) {
    if (c != 0) terms_.emplace(Rational(0), c);
}

ExpConstant ExpConstant::exp(const Rational& mu, const Rational& coeff) {
    ExpConstant r;
    r.add_term(mu, coeff);
    return r;
}

bool ExpConstant::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational ExpConstant::rational_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

Rational ExpConstant::min_exponent() const { return terms_.begin()->first; }

void ExpConstant::add_term(const Rational& mu, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(mu, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExpConstant ExpConstant::operator-() const {
    ExpConstant r(*this);
    for (auto& [mu, c] : r.terms_) c = -c;
    return r;
}

ExpConstant operator+(const ExpConstant& a, const ExpConstant& b) {
    ExpConstant r(a);
    for (const auto& [mu, c] : b.terms_) r.add_term(mu, c);
    return r;
}

ExpConstant operator-(const ExpConstant& a, const ExpConstant& b) {
    ExpConstant r(a);
    for (const auto& [mu, c] : b.terms_) r.add_term(mu, -c);
    return r;
}

ExpConstant operator*(const ExpConstant& a, const ExpConstant& b) {
    ExpConstant r;
    for (const auto& [m1, c1] : a.terms_)
        for (const auto& [m2, c2] : b.terms_) r.add_term(m1 + m2, c1 * c2);
    return r;
}

// ---------------------------------------------------- univariate Q[t] helpers

namespace {

using Poly = std::vector<Rational>;  // index = power of t

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = q*b + r
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Rational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    r = std::move(a);
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

constexpr long kMaxDenseDegree = 4096;

bool is_unit_one(const ExpConstant& c) {
    return c.terms().size() == 1 && c.terms().begin()->first == 0 && c.terms().begin()->second == 1;
}

}  // namespace

// --------------------------------------------------------------------- Scalar

Scalar::Scalar(ExpConstant num, ExpConstant den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Scalar::normalize() {
    if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = ExpConstant(Rational(1));
        return;
    }
    if (den_.terms().size() == 1) {
        const Rational mu = den_.terms().begin()->first;
        const Rational c = den_.terms().begin()->second;
        if (mu == 0 && c == 1) return;
        ExpConstant n;
        for (const auto& [e, q] : num_.terms()) n.add_term(e - mu, q / c);
        num_ = std::move(n);
        den_ = ExpConstant(Rational(1));
        return;
    }
    // Laurent polynomials in t = E(1/d): cancel the polynomial gcd.
    Integer d = 1;
    for (const auto& [e, q] : num_.terms()) d = lcm_of_denominators(e, d);
    for (const auto& [e, q] : den_.terms()) d = lcm_of_denominators(e, d);
    const Rational a = num_.min_exponent();
    const Rational b = den_.min_exponent();
    auto to_poly = [&](const ExpConstant& x, const Rational& base, Poly& out) {
        for (const auto& [e, q] : x.terms()) {
            Rational idx = (e - base) * Rational(d);
            if (idx > kMaxDenseDegree) return false;
            long k = idx.get_num().get_si();
            if (static_cast<long>(out.size()) <= k) out.resize(static_cast<std::size_t>(k) + 1, Rational(0));
            out[static_cast<std::size_t>(k)] = q;
        }
        return true;
    };
    Poly N, M;
    bool dense = to_poly(num_, a, N) && to_poly(den_, b, M);
    if (dense) {
        Poly g = poly_gcd(N, M);
        if (g.size() > 1) {
            Poly q, r;
            poly_divmod(N, g, q, r);
            N = q;
            poly_divmod(M, g, q, r);
            M = q;
        }
        const Rational c0 = M.front();
        ExpConstant n, m;
        for (std::size_t i = 0; i < N.size(); ++i)
            if (N[i] != 0) n.add_term(a - b + Rational(static_cast<long>(i)) / Rational(d), N[i] / c0);
        for (std::size_t i = 0; i < M.size(); ++i)
            if (M[i] != 0) m.add_term(Rational(static_cast<long>(i)) / Rational(d), M[i] / c0);
        num_ = std::move(n);
        den_ = std::move(m);
        if (den_.terms().size() == 1) normalize();
        return;
    }
    // Too sparse for dense gcd: only shift so the denominator starts at E(0)
    // with coefficient 1.  Equality still works by cross-multiplication.
    const Rational c0 = den_.terms().begin()->second;
    ExpConstant n, m;
    for (const auto& [e, q] : num_.terms()) n.add_term(e - b, q / c0);
    for (const auto& [e, q] : den_.terms()) m.add_term(e - b, q / c0);
    num_ = std::move(n);
    den_ = std::move(m);
}

bool Scalar::is_one() const { return is_unit_one(num_) && is_unit_one(den_); }

Rational Scalar::rational_value() const {
    if (!is_rational()) throw InvariantViolation("scalar is not rational");
    return num_.rational_value() / den_.rational_value();
}

Scalar Scalar::inv() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar scalar_inv(const Scalar& s) { return s.inv(); }

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Raw{}); }

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_unit_one(den_) && is_unit_one(o.den_)) {
        num_ = num_ + o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ = num_ + o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    num_ = num_ * o.num_;
    if (num_.is_zero()) {
        den_ = ExpConstant(Rational(1));
        return *this;
    }
    if (is_unit_one(den_) && is_unit_one(o.den_)) return *this;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.num_ == b.num_ && a.den_ == b.den_) return true;
    if (is_unit_one(a.den_) && is_unit_one(b.den_)) return false;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

// ----------------------------------------------------------------- eval_float

namespace {

class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    ~Real() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

struct Interval {
    Real lo, hi;
    explicit Interval(mpfr_prec_t p) : lo(p), hi(p) {}
};

// Encloses sum q E(mu).
void enclose(const ExpConstant& c, Interval& out, mpfr_prec_t prec) {
    mpfr_set_zero(out.lo.get(), 1);
    mpfr_set_zero(out.hi.get(), 1);
    Real mlo(prec), mhi(prec), elo(prec), ehi(prec), tlo(prec), thi(prec);
    for (const auto& [mu, q] : c.terms()) {
        mpfr_set_q(mlo.get(), mu.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(mhi.get(), mu.get_mpq_t(), MPFR_RNDU);
        mpfr_exp(elo.get(), mlo.get(), MPFR_RNDD);
        mpfr_exp(ehi.get(), mhi.get(), MPFR_RNDU);
        if (q >= 0) {
            mpfr_mul_q(tlo.get(), elo.get(), q.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(thi.get(), ehi.get(), q.get_mpq_t(), MPFR_RNDU);
        } else {
            mpfr_mul_q(tlo.get(), ehi.get(), q.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(thi.get(), elo.get(), q.get_mpq_t(), MPFR_RNDU);
        }
        mpfr_add(out.lo.get(), out.lo.get(), tlo.get(), MPFR_RNDD);
        mpfr_add(out.hi.get(), out.hi.get(), thi.get(), MPFR_RNDU);
    }
}

}  // namespace

double eval_float(const Scalar& s, double tol) {
    if (s.is_zero()) return 0.0;
    if (s.is_rational()) return s.rational_value().get_d();
    for (mpfr_prec_t prec = 64; prec <= 8192; prec *= 2) {
        Interval n(prec), d(prec);
        enclose(s.num(), n, prec);
        enclose(s.den(), d, prec);
        bool den_pos = mpfr_sgn(d.lo.get()) > 0;
        bool den_neg = mpfr_sgn(d.hi.get()) < 0;
        if (!den_pos && !den_neg) continue;  // denominator not yet separated from 0
        Real lo(prec), hi(prec);
        mpfr_srcptr ns[2] = {n.lo.get(), n.hi.get()};
        mpfr_srcptr ds[2] = {d.lo.get(), d.hi.get()};
        mpfr_set_inf(lo.get(), 1);
        mpfr_set_inf(hi.get(), -1);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Real t(prec);
                mpfr_div(t.get(), ns[i], ds[j], MPFR_RNDD);
                mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
                mpfr_div(t.get(), ns[i], ds[j], MPFR_RNDU);
                mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
            }
        double a = mpfr_get_d(lo.get(), MPFR_RNDN);
        double b = mpfr_get_d(hi.get(), MPFR_RNDN);
        double mid = 0.5 * (a + b);
        if (b - a <= tol * std::max(1.0, std::fabs(mid))) return mid;
    }
    throw PrecisionExhausted("eval_float: interval refinement did not converge");
}

// -------------------------------------------------------------------- ExpPoly

ExpPoly::ExpPoly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Monomial::one(), c);
}

ExpPoly ExpPoly::monomial(const Monomial& m, const Scalar& c) {
    ExpPoly r;
    r.add_term(m, c);
    return r;
}

bool ExpPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar ExpPoly::constant_value() const { return coefficient(Monomial::one()); }

Scalar ExpPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

unsigned ExpPoly::max_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree);
    return d;
}

std::pair<Monomial, Scalar> ExpPoly::leading() const {
    if (terms_.empty()) throw InvariantViolation("leading term of zero");
    return *terms_.rbegin();
}

void ExpPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    for (const auto& [m1, c1] : a.terms_)
        for (const auto& [m2, c2] : b.terms_)
            r.add_term(Monomial{m1.freq + m2.freq, m1.degree + m2.degree}, c1 * c2);
    return r;
}

ExpPoly operator*(const Scalar& c, const ExpPoly& a) {
    if (c.is_zero()) return ExpPoly();
    ExpPoly r(a);
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

ExpPoly monomial_product(const Monomial& a, const Monomial& b, const Scalar& c) {
    return ExpPoly::monomial(Monomial{a.freq + b.freq, a.degree + b.degree}, c);
}

ExpPoly derive(const Monomial& m) {
    ExpPoly r;
    if (m.degree > 0) r.add_term(Monomial{m.freq, m.degree - 1}, Scalar(Rational(m.degree)));
    if (m.freq != 0) r.add_term(m, Scalar(m.freq));
    return r;
}

ExpPoly derive(const ExpPoly& f) {
    ExpPoly r;
    for (const auto& [m, c] : f.terms()) r += c * derive(m);
    return r;
}

ExpPoly derive(const ExpPoly& f, unsigned times) {
    ExpPoly r(f);
    for (unsigned i = 0; i < times && !r.is_zero(); ++i) r = derive(r);
    return r;
}

ExpPoly integrate(const Monomial& m) {
    const unsigned n = m.degree;
    ExpPoly r;
    if (m.freq == 0) {
        r.add_term(Monomial{0, n + 1}, Scalar(make_rational(1, static_cast<long>(n) + 1)));
        return r;
    }
    // e^{mu x} sum_k (-1)^k n!/(n-k)! x^{n-k} / mu^{k+1}  -  (-1)^n n! / mu^{n+1}
    const Rational& mu = m.freq;
    Rational mu_pow = mu;
    for (unsigned k = 0; k <= n; ++k) {
        Rational c = falling(n, k) / mu_pow;
        if (k % 2 == 1) c = -c;
        r.add_term(Monomial{mu, n - k}, Scalar(c));
        if (k < n) mu_pow *= mu;
    }
    Rational c0 = factorial(n) / mu_pow;
    if (n % 2 == 0) c0 = -c0;
    r.add_term(Monomial::one(), Scalar(c0));
    return r;
}

ExpPoly integrate(const ExpPoly& f) {
    ExpPoly r;
    for (const auto& [m, c] : f.terms()) r += c * integrate(m);
    return r;
}

Scalar evaluate(const Monomial& m, const Character& a) {
    if (a == 0) return m.degree == 0 ? Scalar(1) : Scalar();
    Rational coeff = power(a, m.degree);
    if (m.freq == 0) return Scalar(coeff);
    return Scalar(ExpConstant::exp(m.freq * a, coeff));
}

Scalar evaluate(const ExpPoly& f, const Character& a) {
    Scalar r;
    for (const auto& [m, c] : f.terms()) r += c * evaluate(m, a);
    return r;
}

ExpPoly antider(const ExpPoly& f, unsigned k) {
    ExpPoly r(f);
    for (unsigned i = 0; i < k; ++i) r = integrate(r);
    return r;
}

}  // namespace intdiff
