#pragma once

// Left Ore localization of the ring of boundary problems: common left
// multiples, Ore quadruples, fractions and the bounded kernel search.

#include <intdiff/umbral.hpp>

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace intdiff {

// Finite sum  sum lambda_i (T_i, B_i)  in the monoid algebra, equal problems merged.
class ProblemCombination {
public:
    using Term = std::pair<Rational, BoundaryProblem>;

    ProblemCombination() = default;
    static ProblemCombination single(const BoundaryProblem& p, const Rational& lambda = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Rational& lambda, const BoundaryProblem& p);

    ProblemCombination operator-() const;
    friend ProblemCombination operator+(ProblemCombination a, const ProblemCombination& b);
    friend ProblemCombination operator-(const ProblemCombination& a, const ProblemCombination& b);
    friend ProblemCombination operator*(const Rational& c, const ProblemCombination& a);
    // Product in the monoid algebra.
    friend ProblemCombination operator*(const ProblemCombination& a, const ProblemCombination& b);
    friend ProblemCombination operator*(const BoundaryProblem& s, const ProblemCombination& a);
    friend ProblemCombination operator*(const ProblemCombination& a, const BoundaryProblem& s);
    // Same multiset of (coefficient, problem) up to order.
    friend bool operator==(const ProblemCombination& a, const ProblemCombination& b);

private:
    std::vector<Term> terms_;
};

// den^-1 num
struct MethoriousOperator {
    BoundaryProblem den;
    ProblemCombination num;

    static MethoriousOperator from_problem(const BoundaryProblem& p);  // (1,O)^-1 p
    static MethoriousOperator inverse_of(const BoundaryProblem& p);    // p^-1 (1,O)
};

struct CommonLeftMultiple {
    DiffOperator T, C1, C2;  // T = C1 T1 = C2 T2
};
CommonLeftMultiple common_left_multiple(const DiffOperator& T1, const DiffOperator& T2);

// (q1, q2) regular with q1 p1 = q2 p2.
std::pair<BoundaryProblem, BoundaryProblem> ore_quadruple(const BoundaryProblem& p1, const BoundaryProblem& p2,
                                                          unsigned bound = kDefaultUmbralBound);

// (s~, r~) with s~ r = r~ s.
std::pair<BoundaryProblem, ProblemCombination> ore_linear(const ProblemCombination& r, const BoundaryProblem& s,
                                                          unsigned bound = kDefaultUmbralBound);

MethoriousOperator frac_mul(const MethoriousOperator& a, const MethoriousOperator& b,
                            unsigned bound = kDefaultUmbralBound);
MethoriousOperator frac_add(const MethoriousOperator& a, const MethoriousOperator& b,
                            unsigned bound = kDefaultUmbralBound);
MethoriousOperator frac_neg(const MethoriousOperator& a);

struct KernelSearchOptions {
    unsigned extra_order = 2;   // denominators up to max occurring order + extra_order
    unsigned max_monomial = 1;  // weights x^n, n <= max_monomial, in E[a] A x^n
    unsigned bound = kDefaultUmbralBound;
};

// Regular s with s r = 0, searched in a fixed order; nullopt when none is found.
std::optional<BoundaryProblem> kernel_witness(const ProblemCombination& r, const KernelSearchOptions& opt = {});

// sum lambda_i G_i, whose boundary-only shape is the conjectured kernel criterion.
IntDiffOperator greens_combination(const ProblemCombination& r);
bool kernel_conjecture_holds(const ProblemCombination& r);

// Exhaustive search for (T,B1)(S,C1) = (T,B2)(S,C2) over a finite dictionary of
// right factors.
struct RightMultipleSearch {
    std::size_t candidates = 0;
    std::size_t solutions = 0;
    std::size_t solutions_with_both_regular = 0;
    std::vector<std::tuple<DiffOperator, std::vector<StieltjesCondition>, std::vector<StieltjesCondition>>> examples;
};
RightMultipleSearch search_common_right_multiples(const BoundaryProblem& p1, const BoundaryProblem& p2,
                                                  unsigned max_order = 2);

// Conditions E[a], E[a] D and E[a] A x^n (a != 0, n <= max_monomial) over the given points.
std::vector<StieltjesCondition> condition_dictionary(const std::vector<Rational>& points, unsigned max_monomial = 1);

}  // namespace intdiff
