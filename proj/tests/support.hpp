#pragma once

#include <intdiff/axioms.hpp>
#include <intdiff/syntax.hpp>

#include <doctest.h>

#include <vector>

namespace test {

using namespace intdiff;

inline const std::vector<Rational>& points() {
    static const std::vector<Rational> p{Rational(0), Rational(1, 2), Rational(1)};
    return p;
}
inline const std::vector<Rational>& roots() {
    static const std::vector<Rational> r{Rational(-1), Rational(0), Rational(1), Rational(2)};
    return r;
}

inline ExpPoly X(unsigned n = 1) { return ExpPoly::x(n); }
inline ExpPoly Exp(long mu) { return ExpPoly::exp(Rational(mu)); }
inline Rational Q(long p, long q = 1) { return make_rational(p, q); }

inline BoundaryProblem P(const char* src) { return parse_problem(src); }
inline ExpPoly F(const char* src) { return parse_expr(src); }
inline IntDiffOperator Op(const char* src) { return parse_op(src); }
inline StieltjesCondition C(const char* src) { return parse_condition(src); }

inline std::vector<ExpPoly> probes() { return probe_functions(); }

}  // namespace test

// Readable failure messages.
namespace doctest {
template <> struct StringMaker<intdiff::ExpPoly> {
    static String convert(const intdiff::ExpPoly& f) { return intdiff::render(f).c_str(); }
};
template <> struct StringMaker<intdiff::Scalar> {
    static String convert(const intdiff::Scalar& c) { return intdiff::render(c).c_str(); }
};
template <> struct StringMaker<intdiff::IntDiffOperator> {
    static String convert(const intdiff::IntDiffOperator& op) { return intdiff::render(op).c_str(); }
};
template <> struct StringMaker<intdiff::BoundaryProblem> {
    static String convert(const intdiff::BoundaryProblem& p) { return intdiff::render(p).c_str(); }
};
template <> struct StringMaker<intdiff::StieltjesCondition> {
    static String convert(const intdiff::StieltjesCondition& c) { return intdiff::render(c).c_str(); }
};
template <> struct StringMaker<intdiff::Verdict> {
    static String convert(intdiff::Verdict v) { return intdiff::to_string(v); }
};
}  // namespace doctest
