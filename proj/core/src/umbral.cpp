#include <intdiff/errors.hpp>
#include <intdiff/umbral.hpp>

#include <algorithm>
#include <set>

namespace intdiff {

UmbralExpansion umbral_coefficients(const StieltjesCondition& beta, unsigned N) {
    UmbralExpansion e;
    e.source = beta;
    e.bound = N;
    for (unsigned k = 0; k <= N; ++k)
        e.b.push_back(cond_apply(beta, ExpPoly::monomial(Monomial{0, k}, Scalar(Rational(1) / factorial(k)))));
    auto other = umbral_coefficients_by_antiderivatives(beta, N);
    for (unsigned k = 0; k <= N; ++k)
        if (!(other[k] == e.b[k])) throw InvariantViolation("umbral coefficient routes disagree");
    return e;
}

std::vector<Scalar> umbral_coefficients_by_antiderivatives(const StieltjesCondition& beta, unsigned N) {
    std::vector<Scalar> b(N + 1);
    for (const auto& [key, c] : beta.local()) {
        const auto& [a, i] = key;
        // E[a] D^i (x^k/k!) = a^(k-i)/(k-i)!
        for (unsigned k = i; k <= N; ++k) b[k] += c * Scalar(power(a, k - i) / factorial(k - i));
    }
    for (const auto& [a, f] : beta.global()) {
        std::vector<Scalar> bphi;
        ExpPoly F = f;
        for (unsigned j = 0; j <= N; ++j) {
            F = integrate(F);
            Scalar v = evaluate(F, a);
            bphi.push_back(j % 2 ? -v : v);
        }
        for (unsigned k = 0; k <= N; ++k) {
            Scalar s;
            for (unsigned j = 0; j <= k; ++j) s += Scalar(falling(k, j) * power(a, k - j)) * bphi[j];
            b[k] += Scalar(Rational(1) / factorial(k)) * s;
        }
    }
    return b;
}

unsigned minimal_monomial(const StieltjesCondition& beta, unsigned bound) {
    if (beta.is_zero()) throw ZeroCondition("condition has zero normal form");
    for (unsigned m = 0; m <= bound; ++m)
        if (!cond_apply(beta, ExpPoly::x(m)).is_zero()) return m;
    throw UmbralSearchExceeded("no monomial up to degree " + std::to_string(bound) + " detects the condition");
}

BoundaryProblem embed_single(const StieltjesCondition& beta, unsigned bound) {
    const unsigned k = minimal_monomial(beta, bound);
    std::vector<StieltjesCondition> b = initial_conditions(k);
    b.push_back(beta);
    return BoundaryProblem(DiffOperator::D(k + 1), std::move(b));
}

BoundaryProblem regularize(const BoundaryProblem& p, unsigned bound) {
    if (is_regular(p)) return p;
    // Start from the initial value problem and absorb one condition at a time:
    // beta o G~ either vanishes (beta is already implied) or is embedded into a
    // regular single-condition problem that is multiplied from the left.
    DiffOperator S = p.T();
    std::vector<StieltjesCondition> A = initial_conditions(S.order());
    for (const auto& beta : p.B()) {
        BoundaryProblem cur(S, A);
        StieltjesCondition gamma = cond_compose(beta, greens_operator(cur));
        if (gamma.is_zero()) continue;
        const unsigned k = minimal_monomial(gamma, bound);
        const IntDiffOperator sop = S.to_operator();
        std::vector<StieltjesCondition> next;
        for (unsigned i = 0; i < k; ++i) next.push_back(cond_compose(StieltjesCondition::eval(Rational(0), i), sop));
        next.push_back(beta);
        next.insert(next.end(), A.begin(), A.end());
        S = DiffOperator::D(k + 1) * S;
        A = std::move(next);
    }
    BoundaryProblem r(S, A);
    if (!is_regular(r)) throw InvariantViolation("regularization produced a singular problem");
    return r;
}

bool int_part_pol_check(const ExpPoly& f, unsigned n) {
    ExpPoly lhs = integrate(f * ExpPoly::x(n));
    ExpPoly rhs;
    ExpPoly F = f;
    for (unsigned k = 0; k <= n; ++k) {
        F = integrate(F);
        Rational c = falling(n, k);
        if (k % 2) c = -c;
        rhs += Scalar(c) * (ExpPoly::x(n - k) * F);
    }
    return lhs == rhs;
}

Rational superfactorial(unsigned i) {
    Rational r(1);
    for (unsigned k = 1; k <= i; ++k) r *= factorial(k);
    return r;
}

namespace {

void check_distinct(const std::vector<Rational>& points) {
    std::set<Rational> seen;
    for (const auto& a : points)
        if (!seen.insert(a).second) throw DuplicatePoints("points must be pairwise distinct");
}

}  // namespace

Matrix block_vandermonde_matrix(const std::vector<Rational>& points, unsigned s) {
    check_distinct(points);
    if (s == 0) throw DimensionMismatch("block size must be positive");
    const std::size_t n = points.size() * s;
    Matrix m(n, std::vector<Scalar>(n));
    for (std::size_t b = 0; b < points.size(); ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned j = 0; j < s && j <= i; ++j)
                m[i][b * s + j] = Scalar(power(points[b], static_cast<unsigned>(i - j)) / factorial(static_cast<unsigned>(i - j)));
    return m;
}

Rational block_vandermonde_formula(const std::vector<Rational>& points, unsigned s) {
    check_distinct(points);
    const unsigned r = static_cast<unsigned>(points.size());
    Rational v(1);
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = i + 1; j < r; ++j) v *= points[j] - points[i];
    return power(v, s * s) * power(superfactorial(s - 1), r) / superfactorial(r * s - 1);
}

Scalar block_vandermonde_det(const std::vector<Rational>& points, unsigned s) {
    Scalar d = determinant(block_vandermonde_matrix(points, s));
    if (!(d == Scalar(block_vandermonde_formula(points, s))))
        throw InvariantViolation("block Vandermonde determinant disagrees with the closed form");
    return d;
}

}  // namespace intdiff
