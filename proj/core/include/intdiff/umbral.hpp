#pragma once

// Umbral expansions of Stieltjes conditions and the regularization of
// boundary problems built on them.

#include <intdiff/problems.hpp>

#include <vector>

namespace intdiff {

inline constexpr unsigned kDefaultUmbralBound = 50;

struct UmbralExpansion {
    std::vector<Scalar> b;  // b_k = beta(x^k / k!), k = 0..bound
    StieltjesCondition source;
    unsigned bound = 0;
};

// Direct route; cross-checked against the antiderivative route, throwing
// InvariantViolation if the two ever disagree.
UmbralExpansion umbral_coefficients(const StieltjesCondition& beta, unsigned N);
// Local part directly, each global part E[a] A f through
// b_k = (1/k!) sum_j k(k-1)..(k-j+1) a^(k-j) (-1)^j f^(-j-1)(a).
std::vector<Scalar> umbral_coefficients_by_antiderivatives(const StieltjesCondition& beta, unsigned N);

// Least m <= bound with beta(x^m) != 0.
unsigned minimal_monomial(const StieltjesCondition& beta, unsigned bound = kDefaultUmbralBound);

// (D^(k+1), [E[0], ..., E[0] D^(k-1), beta]) with k the minimal monomial.
BoundaryProblem embed_single(const StieltjesCondition& beta, unsigned bound = kDefaultUmbralBound);

// Regular problem having p as a subproblem.
BoundaryProblem regularize(const BoundaryProblem& p, unsigned bound = kDefaultUmbralBound);

// A(f x^n) == sum_k (-1)^k n(n-1)..(n-k+1) x^(n-k) f^(-k-1)
bool int_part_pol_check(const ExpPoly& f, unsigned n);

Rational superfactorial(unsigned i);  // 1! 2! ... i!
// Block matrix (M(x_1) ... M(x_r)) with M(x)_{ij} = x^(i-j)/(i-j)!, n = r s.
Matrix block_vandermonde_matrix(const std::vector<Rational>& points, unsigned s);
// Determinant by elimination; throws InvariantViolation when it differs from
// V(r)^(s^2) sf(s-1)^r / sf(n-1).
Scalar block_vandermonde_det(const std::vector<Rational>& points, unsigned s);
Rational block_vandermonde_formula(const std::vector<Rational>& points, unsigned s);

}  // namespace intdiff
