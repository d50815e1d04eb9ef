#pragma once

// Text syntax shared by the command line and the tests.
//
//   expressions  x^2/2 - x/2,  x*exp(-2*x),  exp(1) - 1
//   operators    D, A, E[a], I[a,b], functions as multiplication operators,
//                '*' or juxtaposition for composition: exp(x)*A*exp(-x) - exp(x)*E[0]
//   problems     (D^2, [E[0], E[1]]);  (1, []) is the identity
//   combinations 2*(D, [E[0]]) - (D, [E[1]])
//   fractions    inv(D, [E[0]]) * ((D, [E[1]]))
//   methorious   x + 1/2*1:(D, [I[0,1]])

#include <intdiff/errors.hpp>
#include <intdiff/methfun.hpp>

#include <set>
#include <string>
#include <vector>

namespace intdiff {

struct ParseError : Error {
    ParseError(const std::string& message, std::size_t line, std::size_t column, std::set<std::string> expected);
    std::size_t line;
    std::size_t column;
    std::set<std::string> expected;
};

Scalar parse_scalar(const std::string& src);
ExpPoly parse_expr(const std::string& src);
IntDiffOperator parse_op(const std::string& src);
DiffOperator parse_diff_op(const std::string& src);
StieltjesCondition parse_condition(const std::string& src);
BoundaryProblem parse_problem(const std::string& src);
ProblemCombination parse_combination(const std::string& src);
MethoriousOperator parse_fraction(const std::string& src);
MethoriousFunction parse_methorious(const std::string& src);
Rational parse_point(const std::string& src);

// Structured form used by problem files.
struct ProblemSpec {
    std::string T;
    std::vector<std::string> conditions;
    std::vector<std::string> fundamental_system;  // optional
    std::vector<std::string> values;              // optional
};
BoundaryProblem parse_problem(const ProblemSpec& spec);

enum class Style { Plain, Latex };

std::string render(const Rational& q, Style s = Style::Plain);
std::string render(const Scalar& c, Style s = Style::Plain);
std::string render(const ExpPoly& f, Style s = Style::Plain);
std::string render(const IntDiffOperator& op, Style s = Style::Plain);
std::string render(const DiffOperator& T, Style s = Style::Plain);
std::string render(const StieltjesCondition& b, Style s = Style::Plain);
std::string render(const BoundaryProblem& p, Style s = Style::Plain);
std::string render(const ProblemCombination& r, Style s = Style::Plain);
std::string render(const MethoriousOperator& f, Style s = Style::Plain);
std::string render(const MethoriousFunction& m, Style s = Style::Plain);
std::string render(const MethoriousHyperfunction& h, Style s = Style::Plain);

}  // namespace intdiff
