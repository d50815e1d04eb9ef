#include <intdiff/errors.hpp>
#include <intdiff/problems.hpp>

#include <algorithm>
#include <cstdint>

namespace intdiff {

// --------------------------------------------------------------- DiffOperator

DiffOperator::DiffOperator(std::vector<ExpPoly> lower_coefficients) : coeffs_(std::move(lower_coefficients)) {}

DiffOperator DiffOperator::D(unsigned n) { return DiffOperator(std::vector<ExpPoly>(n)); }

DiffOperator DiffOperator::from_char_poly(const std::vector<Rational>& poly) {
    if (poly.empty() || poly.back() != 1) throw InvariantViolation("characteristic polynomial must be monic");
    std::vector<ExpPoly> c;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) c.emplace_back(Scalar(poly[i]));
    return DiffOperator(std::move(c));
}

DiffOperator DiffOperator::from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> poly{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= r * poly[i];
        }
        poly = std::move(next);
    }
    return from_char_poly(poly);
}

DiffOperator DiffOperator::from_operator(const IntDiffOperator& op) {
    if (!op.is_differential()) throw InvariantViolation("not a differential operator");
    if (op.is_zero()) throw InvariantViolation("zero is not monic");
    const unsigned n = op.diff_order();
    if (!(op.diff_coefficient(n) == ExpPoly(1))) throw InvariantViolation("differential operator is not monic");
    std::vector<ExpPoly> c;
    for (unsigned i = 0; i < n; ++i) c.push_back(op.diff_coefficient(i));
    return DiffOperator(std::move(c));
}

bool DiffOperator::is_constant_coefficient() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExpPoly& c) {
        return c.is_constant() && c.constant_value().is_rational();
    });
}

std::vector<Rational> DiffOperator::char_poly() const {
    if (!is_constant_coefficient()) throw UnsupportedOperator("operator has non-constant coefficients");
    std::vector<Rational> p;
    for (const auto& c : coeffs_) p.push_back(c.constant_value().rational_value());
    p.emplace_back(1);
    return p;
}

IntDiffOperator DiffOperator::to_operator() const {
    IntDiffOperator op = IntDiffOperator::D(order());
    for (unsigned i = 0; i < order(); ++i) op += IntDiffOperator::diff(coeffs_[i], i);
    return op;
}

ExpPoly DiffOperator::apply(const ExpPoly& f) const {
    ExpPoly r = derive(f, order());
    ExpPoly d = f;
    for (unsigned i = 0; i < order(); ++i) {
        if (!coeffs_[i].is_zero()) r += coeffs_[i] * d;
        d = derive(d);
    }
    return r;
}

void DiffOperator::attach_kernel_basis(std::vector<ExpPoly> basis) {
    kernel_basis_ = std::make_shared<const std::vector<ExpPoly>>(std::move(basis));
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    if (a.is_constant_coefficient() && b.is_constant_coefficient()) {
        std::vector<Rational> pa = a.char_poly(), pb = b.char_poly();
        std::vector<Rational> p(pa.size() + pb.size() - 1, Rational(0));
        for (std::size_t i = 0; i < pa.size(); ++i)
            for (std::size_t j = 0; j < pb.size(); ++j) p[i + j] += pa[i] * pb[j];
        return DiffOperator::from_char_poly(p);
    }
    return DiffOperator::from_operator(a.to_operator() * b.to_operator());
}

namespace {

std::optional<DiffOperator> quotient(const DiffOperator& a, const DiffOperator& b, bool right) {
    if (b.order() > a.order()) return std::nullopt;
    IntDiffOperator rem = a.to_operator();
    IntDiffOperator q;
    const IntDiffOperator bop = b.to_operator();
    while (!rem.is_zero()) {
        if (!rem.is_differential()) return std::nullopt;
        const unsigned m = rem.diff_order();
        if (m < b.order()) return std::nullopt;
        IntDiffOperator term = IntDiffOperator::diff(rem.diff_coefficient(m), m - b.order());
        rem -= right ? term * bop : bop * term;
        q += term;
    }
    return DiffOperator::from_operator(q);
}

}  // namespace

std::optional<DiffOperator> right_quotient(const DiffOperator& a, const DiffOperator& b) {
    return quotient(a, b, true);
}

std::optional<DiffOperator> left_quotient(const DiffOperator& a, const DiffOperator& b) {
    return quotient(a, b, false);
}

// --------------------------------------------------------- fundamental systems

namespace {

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    if (n > Integer("1000000000000")) throw UnsupportedOperator("characteristic polynomial coefficients too large");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Rational horner(const std::vector<Rational>& p, const Rational& x) {
    Rational r(0);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& root) {
    // p = (x - root) q
    std::vector<Rational> q(p.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        carry = p[i + 1] + carry * root;
        q[i] = carry;
    }
    return q;
}

std::vector<std::vector<ExpPoly>> wronskian_matrix(const std::vector<ExpPoly>& u) {
    const std::size_t n = u.size();
    std::vector<std::vector<ExpPoly>> w(n, std::vector<ExpPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        ExpPoly d = u[j];
        for (std::size_t i = 0; i < n; ++i) {
            w[i][j] = d;
            d = derive(d);
        }
    }
    return w;
}

// Determinants of the leading |S| rows restricted to column sets S.
std::vector<ExpPoly> leading_minors(const std::vector<std::vector<ExpPoly>>& w) {
    const std::size_t n = w.size();
    if (n > 20) throw UnsupportedOperator("operator order too large for the Wronskian expansion");
    const std::uint32_t full = (1u << n);
    std::vector<ExpPoly> det(full);
    det[0] = ExpPoly(1);
    for (std::uint32_t s = 1; s < full; ++s) {
        const int k = __builtin_popcount(s);
        const std::size_t row = static_cast<std::size_t>(k - 1);
        ExpPoly acc;
        int pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(s & (1u << j))) continue;
            const ExpPoly& sub = det[s & ~(1u << j)];
            if (!sub.is_zero() && !w[row][j].is_zero()) {
                ExpPoly t = w[row][j] * sub;
                if ((row + static_cast<std::size_t>(pos)) % 2 == 1) acc -= t;
                else acc += t;
            }
            ++pos;
        }
        det[s] = std::move(acc);
    }
    return det;
}

FundamentalSystem complete_system(std::vector<ExpPoly> u) {
    FundamentalSystem fs;
    const std::size_t n = u.size();
    fs.u = std::move(u);
    if (n == 0) {
        fs.wronskian = ExpPoly(1);
        fs.wronskian_inverse = ExpPoly(1);
        return fs;
    }
    auto minors = leading_minors(wronskian_matrix(fs.u));
    fs.wronskian = minors.back();
    const auto& t = fs.wronskian.terms();
    if (t.size() != 1 || t.begin()->first.degree != 0)
        throw UnsupportedOperator("Wronskian is not a unit of the exponential polynomials");
    const Monomial& m = t.begin()->first;
    fs.wronskian_inverse = ExpPoly::monomial(Monomial{-m.freq, 0}, t.begin()->second.inv());
    return fs;
}

}  // namespace

std::optional<std::vector<std::pair<Rational, unsigned>>> rational_roots(const std::vector<Rational>& poly_in) {
    std::vector<Rational> p = poly_in;
    while (!p.empty() && p.back() == 0) p.pop_back();
    std::vector<std::pair<Rational, unsigned>> roots;
    if (p.empty()) return std::nullopt;
    unsigned zero_mult = 0;
    while (p.size() > 1 && p.front() == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
    while (p.size() > 1) {
        Integer l = 1;
        for (const auto& c : p) l = lcm_of_denominators(c, l);
        Integer a0 = Integer(p.front() * Rational(l));
        Integer an = Integer(p.back() * Rational(l));
        bool found = false;
        for (const auto& num : divisors(a0)) {
            for (const auto& den : divisors(an)) {
                for (int sign : {1, -1}) {
                    Rational cand(Integer(sign * num), den);
                    cand.canonicalize();
                    if (horner(p, cand) != 0) continue;
                    unsigned mult = 0;
                    while (p.size() > 1 && horner(p, cand) == 0) {
                        p = deflate(p, cand);
                        ++mult;
                    }
                    roots.emplace_back(cand, mult);
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

FundamentalSystem fundamental_system(const DiffOperator& T, const std::vector<ExpPoly>& user_basis) {
    if (user_basis.size() != T.order())
        throw DimensionMismatch("fundamental system size differs from the operator order");
    for (const auto& u : user_basis)
        if (!T.apply(u).is_zero()) throw InvariantViolation("supplied function is not in the kernel");
    FundamentalSystem fs = complete_system(user_basis);
    if (fs.wronskian.is_zero()) throw InvariantViolation("supplied functions are linearly dependent");
    return fs;
}

FundamentalSystem fundamental_system(const DiffOperator& T) {
    if (T.kernel_basis()) return fundamental_system(T, *T.kernel_basis());
    if (!T.is_constant_coefficient())
        throw UnsupportedOperator("no fundamental system for a variable-coefficient operator");
    auto roots = rational_roots(T.char_poly());
    if (!roots) throw UnsupportedOperator("characteristic polynomial does not split over the rationals");
    std::vector<ExpPoly> u;
    for (const auto& [lambda, mult] : *roots)
        for (unsigned k = 0; k < mult; ++k)
            u.push_back(ExpPoly::monomial(Monomial{lambda, k}, Scalar(Rational(1) / factorial(k))));
    return complete_system(std::move(u));
}

// ------------------------------------------------------------ BoundaryProblem

BoundaryProblem::BoundaryProblem(DiffOperator T, std::vector<StieltjesCondition> conditions)
    : T_(std::move(T)), B_(cond_basis(conditions)) {}

std::vector<StieltjesCondition> initial_conditions(unsigned n) {
    std::vector<StieltjesCondition> b;
    for (unsigned k = 0; k < n; ++k) b.push_back(StieltjesCondition::eval(Rational(0), k));
    return b;
}

BoundaryProblem BoundaryProblem::initial_value(const DiffOperator& T) {
    return BoundaryProblem(T, initial_conditions(T.order()));
}

bool operator==(const BoundaryProblem& a, const BoundaryProblem& b) {
    return a.T_ == b.T_ && a.B_.size() == b.B_.size() && cond_space_contains(a.B_, b.B_);
}

BoundaryProblem bp_mul(const BoundaryProblem& p1, const BoundaryProblem& p2) {
    std::vector<StieltjesCondition> b;
    const IntDiffOperator t2 = p2.T().to_operator();
    for (const auto& beta : p1.B()) b.push_back(cond_compose(beta, t2));
    for (const auto& beta : p2.B()) b.push_back(beta);
    return BoundaryProblem(p1.T() * p2.T(), std::move(b));
}

Matrix evaluation_matrix(const std::vector<StieltjesCondition>& bs, const std::vector<ExpPoly>& us) {
    Matrix m(bs.size(), std::vector<Scalar>(us.size()));
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = 0; j < us.size(); ++j) m[i][j] = cond_apply(bs[i], us[j]);
    return m;
}

Matrix evaluation_matrix(const BoundaryProblem& p, const FundamentalSystem& fs) {
    return evaluation_matrix(p.B(), fs.u);
}

bool is_regular(const BoundaryProblem& p) {
    if (p.dim() != p.order()) return false;
    if (p.order() == 0) return true;
    return !determinant(evaluation_matrix(p, fundamental_system(p.T()))).is_zero();
}

bool is_well_posed(const BoundaryProblem& p) {
    if (!is_regular(p)) return false;
    // B is a span, so it has a low-order basis iff every basis element is low order.
    return std::all_of(p.B().begin(), p.B().end(), [&](const StieltjesCondition& b) {
        auto o = b.order();
        return !o || *o < p.order();
    });
}

IntDiffOperator fundamental_right_inverse(const FundamentalSystem& fs) {
    const std::size_t n = fs.u.size();
    if (n == 0) return IntDiffOperator(1);
    auto minors = leading_minors(wronskian_matrix(fs.u));
    const std::uint32_t full = (1u << n) - 1;
    IntDiffOperator r;
    for (std::size_t i = 0; i < n; ++i) {
        // cofactor of entry (n-1, i)
        ExpPoly w = minors[full & ~(1u << i)];
        if ((n - 1 + i) % 2 == 1) w = -w;
        r += IntDiffOperator::integral(fs.u[i], w * fs.wronskian_inverse);
    }
    return r;
}

IntDiffOperator fundamental_right_inverse(const DiffOperator& T) {
    return fundamental_right_inverse(fundamental_system(T));
}

std::vector<ExpPoly> projector_coefficients(const BoundaryProblem& p) {
    if (p.dim() != p.order()) throw SingularProblem("dimension of the boundary space differs from the order");
    FundamentalSystem fs = fundamental_system(p.T());
    auto inv = inverse(evaluation_matrix(p, fs));
    if (!inv) throw SingularProblem("evaluation matrix is singular");
    const std::size_t n = p.order();
    std::vector<ExpPoly> c(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) c[j] += (*inv)[i][j] * fs.u[i];
    return c;
}

IntDiffOperator projector(const BoundaryProblem& p) {
    std::vector<ExpPoly> c = projector_coefficients(p);
    IntDiffOperator P;
    for (std::size_t j = 0; j < c.size(); ++j) P += left_mul_function(c[j], p.B()[j].to_operator());
    return P;
}

IntDiffOperator greens_operator(const BoundaryProblem& p) {
    IntDiffOperator P = projector(p);
    IntDiffOperator fri = fundamental_right_inverse(p.T());
    return fri - P * fri;
}

// Scaled so the first rendered term has coefficient 1; nullspace vectors carry arbitrary scale.
static StieltjesCondition monic(const StieltjesCondition& b) {
    const IntDiffOperator op = b.to_operator();
    if (op.is_zero()) return b;
    return op.terms().rbegin()->second.inv() * b;
}

BoundaryProblem divide_left(const DiffOperator& T1, const BoundaryProblem& p2, const BoundaryProblem& p) {
    if (!(T1 * p2.T() == p.T())) throw FactorMismatch("T1 * T2 differs from the operator of p");
    if (!is_regular(p)) throw SingularProblem("divide_left needs a regular problem");
    if (!is_regular(p2)) throw SingularProblem("divide_left needs a regular right factor");
    // Conditions of B vanishing on Ker T2 are exactly B1 T2; compose them with any right inverse of T2.
    FundamentalSystem fs2 = fundamental_system(p2.T());
    Matrix e = evaluation_matrix(p.B(), fs2.u);
    IntDiffOperator g2 = greens_operator(p2);
    std::vector<StieltjesCondition> b1;
    for (const auto& c : left_nullspace(e, p.B().size())) {
        StieltjesCondition gamma;
        for (std::size_t i = 0; i < c.size(); ++i) gamma += c[i] * p.B()[i];
        b1.push_back(monic(cond_compose(gamma, g2)));
    }
    return BoundaryProblem(T1, std::move(b1));
}

std::pair<BoundaryProblem, BoundaryProblem> lift_factorization(const BoundaryProblem& p, const DiffOperator& T1,
                                                               const DiffOperator& T2) {
    if (!(T1 * T2 == p.T())) throw FactorMismatch("T1 * T2 differs from the operator of p");
    if (!is_regular(p)) throw SingularProblem("lift_factorization needs a regular problem");
    FundamentalSystem fs2 = fundamental_system(T2);
    std::vector<std::size_t> rows = independent_rows(evaluation_matrix(p.B(), fs2.u));
    std::vector<StieltjesCondition> b2;
    if (rows.size() == T2.order()) {
        for (auto r : rows) b2.push_back(p.B()[r]);
    } else {
        b2 = initial_conditions(T2.order());
    }
    BoundaryProblem p2(T2, std::move(b2));
    return {divide_left(T1, p2, p), p2};
}

bool is_subproblem(const BoundaryProblem& q, const BoundaryProblem& p) {
    return right_quotient(p.T(), q.T()).has_value() && cond_space_contains(p.B(), q.B());
}

}  // namespace intdiff
