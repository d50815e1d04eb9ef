#pragma once

// Methorious functions F + I/I0: smooth part plus ideal elements g:(T,B)
// with T g = 0, and the action of boundary problems and their fractions.

#include <intdiff/ore.hpp>

#include <vector>

namespace intdiff {

// coefficient * g:(problem); g is stored with leading coefficient 1.
struct IdealElement {
    ExpPoly g;
    BoundaryProblem problem;
    Scalar coefficient{1};

    ExpPoly value() const { return coefficient * g; }
};

class MethoriousFunction {
public:
    MethoriousFunction() = default;
    MethoriousFunction(const ExpPoly& smooth);  // NOLINT: embedding of F
    // Throws InvariantViolation unless p.T g = 0.
    static MethoriousFunction ideal_element(const ExpPoly& g, const BoundaryProblem& p,
                                            const Scalar& coefficient = Scalar(1));

    const ExpPoly& smooth() const { return smooth_; }
    const std::vector<IdealElement>& ideal() const { return ideal_; }
    bool is_zero() const { return smooth_.is_zero() && ideal_.empty(); }
    // Adds h:(p) merging with an element of equal problem.
    void add_ideal(const ExpPoly& h, const BoundaryProblem& p);

    MethoriousFunction operator-() const;
    MethoriousFunction& operator+=(const MethoriousFunction& o);
    friend MethoriousFunction operator+(MethoriousFunction a, const MethoriousFunction& b) { return a += b; }
    friend MethoriousFunction operator-(const MethoriousFunction& a, const MethoriousFunction& b) { return a + (-b); }
    friend MethoriousFunction operator*(const Scalar& c, const MethoriousFunction& m);
    // Representation equality (no I0 reasoning).
    friend bool operator==(const MethoriousFunction& a, const MethoriousFunction& b);

private:
    ExpPoly smooth_;
    std::vector<IdealElement> ideal_;
};

// den^-1 value
struct MethoriousHyperfunction {
    BoundaryProblem den;
    MethoriousFunction value;
};

enum class Verdict { Equal, NotEqual, Unknown };
const char* to_string(Verdict v);

// (T,B) f = T f + (P f):(T,B);  g:(T~,B~) -> g:((T,B)(T~,B~)).
MethoriousFunction act(const BoundaryProblem& p, const MethoriousFunction& m);
MethoriousFunction act(const ProblemCombination& r, const MethoriousFunction& m);

// Rewrites h:(Q) as (T~ h):(Q1) whenever Q = Q1 (T~,B~) with B~ h = 0; repeated
// with the largest right factor first until nothing applies.
MethoriousFunction deflate(const MethoriousFunction& m);

struct EqualityOptions {
    unsigned extra_order = 2;  // inflation targets up to the sum of orders plus this
};
// Smooth parts compared exactly; ideal parts after deflation and a bounded
// search for a common inflation.  NotEqual means the difference survives the
// exhaustive bounded search.
Verdict mf_eq(const MethoriousFunction& a, const MethoriousFunction& b, const EqualityOptions& opt = {});

// p^-1 m; throws NotLeftDivisible when an ideal element has no left factor p.
MethoriousFunction apply_inverse(const BoundaryProblem& p, const MethoriousFunction& m);

ExpPoly solve_bvp(const DiffOperator& T, const std::vector<StieltjesCondition>& conditions, const ExpPoly& f,
                  const std::vector<Scalar>& values);

// den^-1 (num m), simplified to a plain methorious function when den divides.
MethoriousHyperfunction hyper_act(const MethoriousOperator& frac, const MethoriousFunction& m,
                                  unsigned bound = kDefaultUmbralBound);
Verdict hyper_eq(const MethoriousHyperfunction& a, const MethoriousHyperfunction& b,
                 unsigned bound = kDefaultUmbralBound);

// Syntactic equality first, then agreement of the actions on probe functions.
Verdict frac_eq(const MethoriousOperator& a, const MethoriousOperator& b, unsigned bound = kDefaultUmbralBound);
std::vector<ExpPoly> probe_functions();

// Coefficient functions c_j of the fundamental formula (T,B) f = T f + (sum c_j beta_j f):(T,B).
std::vector<ExpPoly> fundamental_formula(const BoundaryProblem& p);

}  // namespace intdiff
