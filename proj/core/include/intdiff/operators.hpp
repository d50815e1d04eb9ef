#pragma once

// Integro-differential operators with point-evaluation characters.
//
// Normal forms are sums of four kinds of basis terms with monomial
// coefficient functions:
//   Diff      m * D^i
//   Integral  m * A * r          (A integrates from 0)
//   Local     m * E[a] * D^i
//   Global    m * E[a] * A * r   (a != 0, since E[0]*A = 0)
// Because I(f,g) is bilinear in f and g, expanding both sides into
// monomials is what makes the representation unique.

#include <intdiff/expalg.hpp>

#include <map>
#include <optional>
#include <vector>

namespace intdiff {

enum class TermKind : unsigned char { Diff = 0, Integral = 1, Local = 2, Global = 3 };

struct TermKey {
    TermKind kind = TermKind::Diff;
    Monomial left;
    Rational point;      // Local, Global
    unsigned order = 0;  // Diff, Local
    Monomial right;      // Integral, Global

    static TermKey diff(const Monomial& f, unsigned i);
    static TermKey integral(const Monomial& f, const Monomial& g);
    static TermKey local(const Monomial& f, const Character& a, unsigned i);
    static TermKey global(const Monomial& f, const Character& a, const Monomial& g);

    friend bool operator<(const TermKey& a, const TermKey& b);
    friend bool operator==(const TermKey& a, const TermKey& b);
};

class IntDiffOperator {
public:
    using Terms = std::map<TermKey, Scalar>;

    IntDiffOperator() = default;
    IntDiffOperator(const ExpPoly& f);  // NOLINT: multiplication operator
    IntDiffOperator(const Scalar& c) : IntDiffOperator(ExpPoly(c)) {}  // NOLINT
    IntDiffOperator(long c) : IntDiffOperator(ExpPoly(c)) {}            // NOLINT
    IntDiffOperator(int c) : IntDiffOperator(ExpPoly(c)) {}             // NOLINT

    static IntDiffOperator D(unsigned order = 1);
    static IntDiffOperator A();
    static IntDiffOperator E(const Character& a);
    // Typed constructors mirroring the four term kinds.
    static IntDiffOperator diff(const ExpPoly& f, unsigned i);
    static IntDiffOperator integral(const ExpPoly& f, const ExpPoly& g);
    static IntDiffOperator local(const ExpPoly& f, const Character& a, unsigned i);
    static IntDiffOperator global(const ExpPoly& f, const Character& a, const ExpPoly& g);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const TermKey& k, const Scalar& c);

    // Parts of the direct sum decomposition.
    bool is_differential() const;  // only Diff terms
    bool is_boundary() const;      // only Local / Global terms
    unsigned diff_order() const;   // highest Diff order (0 if none)
    ExpPoly diff_coefficient(unsigned i) const;

    IntDiffOperator operator-() const;
    IntDiffOperator& operator+=(const IntDiffOperator& o);
    IntDiffOperator& operator-=(const IntDiffOperator& o);
    friend IntDiffOperator operator+(IntDiffOperator a, const IntDiffOperator& b) { return a += b; }
    friend IntDiffOperator operator-(IntDiffOperator a, const IntDiffOperator& b) { return a -= b; }
    friend IntDiffOperator operator*(const IntDiffOperator& a, const IntDiffOperator& b);
    friend IntDiffOperator operator*(const Scalar& c, const IntDiffOperator& a);
    friend bool operator==(const IntDiffOperator& a, const IntDiffOperator& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

IntDiffOperator op_add(const IntDiffOperator& p, const IntDiffOperator& q);
IntDiffOperator op_mul(const IntDiffOperator& p, const IntDiffOperator& q);
ExpPoly op_apply(const IntDiffOperator& p, const ExpPoly& f);

// The primitive left multiplications the product is built from.
IntDiffOperator left_mul_function(const ExpPoly& f, const IntDiffOperator& p);
IntDiffOperator left_mul_D(const IntDiffOperator& p);
IntDiffOperator left_mul_A(const IntDiffOperator& p);
IntDiffOperator left_mul_E(const Character& a, const IntDiffOperator& p);

// Boundary condition  sum_a ( sum_i c_{a,i} E[a] D^i + E[a] A f_a ).
class StieltjesCondition {
public:
    using LocalKey = std::pair<Rational, unsigned>;  // (point, derivative order)
    using Local = std::map<LocalKey, Scalar>;
    using Global = std::map<Rational, ExpPoly>;       // point != 0

    StieltjesCondition() = default;
    static StieltjesCondition eval(const Character& a, unsigned order = 0);
    // E[a] A f; for a = 0 this is the zero condition.
    static StieltjesCondition integral(const Character& a, const ExpPoly& f);
    // Definite integral over [a, b] with weight f.
    static StieltjesCondition definite(const Character& a, const Character& b, const ExpPoly& f);
    // Requires a boundary operator whose terms all have left coefficient 1.
    static StieltjesCondition from_operator(const IntDiffOperator& op);

    const Local& local() const { return local_; }
    const Global& global() const { return global_; }
    bool is_zero() const { return local_.empty() && global_.empty(); }
    // Largest derivative order among local terms; nullopt when purely global.
    std::optional<unsigned> order() const;
    std::vector<Rational> points() const;

    IntDiffOperator to_operator() const;

    StieltjesCondition operator-() const;
    StieltjesCondition& operator+=(const StieltjesCondition& o);
    StieltjesCondition& operator-=(const StieltjesCondition& o);
    friend StieltjesCondition operator+(StieltjesCondition a, const StieltjesCondition& b) { return a += b; }
    friend StieltjesCondition operator-(StieltjesCondition a, const StieltjesCondition& b) { return a -= b; }
    friend StieltjesCondition operator*(const Scalar& c, const StieltjesCondition& b);
    friend bool operator==(const StieltjesCondition& a, const StieltjesCondition& b) {
        return a.local_ == b.local_ && a.global_ == b.global_;
    }

private:
    void add_local(const Rational& a, unsigned i, const Scalar& c);
    void add_global(const Rational& a, const ExpPoly& f);

    Local local_;
    Global global_;
};

Scalar cond_apply(const StieltjesCondition& beta, const ExpPoly& f);
StieltjesCondition cond_compose(const StieltjesCondition& beta, const IntDiffOperator& p);
bool cond_independent(const std::vector<StieltjesCondition>& bs);

// Subspace utilities for boundary spaces given by spanning lists.
std::size_t cond_rank(const std::vector<StieltjesCondition>& bs);
// Greedy first-occurrence basis of the span.
std::vector<StieltjesCondition> cond_basis(const std::vector<StieltjesCondition>& bs);
bool cond_in_span(const std::vector<StieltjesCondition>& bs, const StieltjesCondition& beta);
bool cond_space_contains(const std::vector<StieltjesCondition>& big, const std::vector<StieltjesCondition>& small);
bool cond_space_equal(const std::vector<StieltjesCondition>& a, const std::vector<StieltjesCondition>& b);
// Coordinates of beta in the independent list bs (nullopt when outside the span).
std::optional<std::vector<Scalar>> cond_coordinates(const std::vector<StieltjesCondition>& bs,
                                                    const StieltjesCondition& beta);

}  // namespace intdiff
