#pragma once

// Floating-point cross-checks of the exact results.

#include <intdiff/methfun.hpp>

#include <functional>
#include <vector>

namespace intdiff {

double eval_float(const ExpPoly& f, double x);

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                        int max_depth = 50);

// (G f)(x) with every integral evaluated by quadrature.
double quadrature_apply(const IntDiffOperator& G, const ExpPoly& f, double x);

struct VerifyReport {
    std::vector<Rational> points;
    std::vector<double> exact;
    std::vector<double> numeric;
    double max_deviation = 0;
};

// Compares the exact solution of T u = f, B u = values at equispaced points of
// [lo, hi] with quadrature of the Green's operator plus the exact kernel part.
VerifyReport verify_solution(const BoundaryProblem& p, const ExpPoly& f, const std::vector<Scalar>& values,
                             const Rational& lo, const Rational& hi, unsigned samples = 11);

}  // namespace intdiff
