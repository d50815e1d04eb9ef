#include <intdiff/errors.hpp>
#include <intdiff/numeric.hpp>

#include <algorithm>
#include <cmath>

namespace intdiff {

double eval_float(const ExpPoly& f, double x) {
    double s = 0;
    for (const auto& [m, c] : f.terms())
        s += eval_float(c) * std::pow(x, static_cast<double>(m.degree)) * std::exp(m.freq.get_d() * x);
    return s;
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15 * tol) return left + right + delta / 15;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
    if (a == b) return 0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double quadrature_apply(const IntDiffOperator& G, const ExpPoly& f, double x) {
    double s = 0;
    for (const auto& [k, c] : G.terms()) {
        const double left = eval_float(ExpPoly::monomial(k.left, c), x);
        const ExpPoly right = ExpPoly::monomial(k.right);
        auto integrand = [&](double xi) { return eval_float(right, xi) * eval_float(f, xi); };
        switch (k.kind) {
        case TermKind::Diff: s += left * eval_float(derive(f, k.order), x); break;
        case TermKind::Integral: s += left * adaptive_simpson(integrand, 0, x); break;
        case TermKind::Local: s += left * eval_float(derive(f, k.order), k.point.get_d()); break;
        case TermKind::Global: s += left * adaptive_simpson(integrand, 0, k.point.get_d()); break;
        }
    }
    return s;
}

VerifyReport verify_solution(const BoundaryProblem& p, const ExpPoly& f, const std::vector<Scalar>& values,
                             const Rational& lo, const Rational& hi, unsigned samples) {
    if (samples < 2) throw DimensionMismatch("at least two sample points are needed");
    if (values.size() != p.dim()) throw DimensionMismatch("one value per boundary condition is needed");
    const IntDiffOperator G = greens_operator(p);
    const ExpPoly u = solve_bvp(p.T(), p.B(), f, values);
    const ExpPoly homogeneous = u - op_apply(G, f);
    VerifyReport r;
    for (unsigned k = 0; k < samples; ++k) {
        Rational x = lo + (hi - lo) * Rational(k) / Rational(samples - 1);
        x.canonicalize();
        const double exact = eval_float(evaluate(u, x));
        const double numeric = quadrature_apply(G, f, x.get_d()) + eval_float(homogeneous, x.get_d());
        r.points.push_back(x);
        r.exact.push_back(exact);
        r.numeric.push_back(numeric);
        r.max_deviation = std::max(r.max_deviation, std::fabs(exact - numeric));
    }
    return r;
}

}  // namespace intdiff
