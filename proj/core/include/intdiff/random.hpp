#pragma once

// Seeded generators for property suites, benchmarks and the selftest.

#include <intdiff/problems.hpp>

#include <random>
#include <vector>

namespace intdiff {

using Rng = std::mt19937_64;

struct ExpPolyShape {
    unsigned max_terms = 3;
    unsigned max_degree = 4;
    int max_freq = 3;
    int max_num = 5;
    int max_den = 4;
};

Rational random_rational(Rng& rng, int max_num = 5, int max_den = 4, bool nonzero = true);
ExpPoly random_exppoly(Rng& rng, const ExpPolyShape& shape = {});

// One of E[a], E[a] D, I[0,a] x^n (n <= 1) at the given points.
StieltjesCondition random_condition(Rng& rng, const std::vector<Rational>& points);

// Constant-coefficient operator prod (D - r) with roots from roots.
DiffOperator random_operator(Rng& rng, unsigned order, const std::vector<Rational>& roots);

// Regular constant-coefficient problem of order <= max_order (retries until regular).
BoundaryProblem random_regular_problem(Rng& rng, unsigned max_order, const std::vector<Rational>& points,
                                       const std::vector<Rational>& roots);

}  // namespace intdiff
