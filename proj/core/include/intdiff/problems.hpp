#pragma once

// Boundary problems (T, B): monic differential operator plus boundary space.

#include <intdiff/linalg.hpp>
#include <intdiff/operators.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace intdiff {

// Monic T = D^n + c_{n-1} D^{n-1} + ... + c_0.
class DiffOperator {
public:
    DiffOperator() = default;  // the identity, order 0
    explicit DiffOperator(std::vector<ExpPoly> lower_coefficients);
    static DiffOperator D(unsigned n = 1);
    // Constant coefficients from a monic characteristic polynomial given
    // low-to-high (last entry must be 1).
    static DiffOperator from_char_poly(const std::vector<Rational>& poly);
    // prod (D - r) over the listed roots.
    static DiffOperator from_roots(const std::vector<Rational>& roots);
    // Throws InvariantViolation unless op is a monic purely differential operator.
    static DiffOperator from_operator(const IntDiffOperator& op);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
    const std::vector<ExpPoly>& coefficients() const { return coeffs_; }
    bool is_constant_coefficient() const;
    std::vector<Rational> char_poly() const;  // requires constant coefficients
    IntDiffOperator to_operator() const;
    ExpPoly apply(const ExpPoly& f) const;

    // User-supplied kernel basis for operators outside the native scope.
    void attach_kernel_basis(std::vector<ExpPoly> basis);
    const std::shared_ptr<const std::vector<ExpPoly>>& kernel_basis() const { return kernel_basis_; }

    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<ExpPoly> coeffs_;
    std::shared_ptr<const std::vector<ExpPoly>> kernel_basis_;
};

// Exact division of monic operators; nullopt when there is a remainder.
std::optional<DiffOperator> right_quotient(const DiffOperator& a, const DiffOperator& b);  // a = Q b
std::optional<DiffOperator> left_quotient(const DiffOperator& a, const DiffOperator& b);   // a = b Q

struct FundamentalSystem {
    std::vector<ExpPoly> u;
    ExpPoly wronskian;
    ExpPoly wronskian_inverse;
};

// Rational roots with multiplicity; nullopt when the polynomial does not split over Q.
std::optional<std::vector<std::pair<Rational, unsigned>>> rational_roots(const std::vector<Rational>& poly);

FundamentalSystem fundamental_system(const DiffOperator& T);
// Validates T u_i = 0 and invertibility of the Wronskian.
FundamentalSystem fundamental_system(const DiffOperator& T, const std::vector<ExpPoly>& user_basis);

class BoundaryProblem {
public:
    BoundaryProblem() = default;  // (1, O)
    // Conditions are reduced to an independent basis in first-occurrence order.
    BoundaryProblem(DiffOperator T, std::vector<StieltjesCondition> conditions);
    static BoundaryProblem identity() { return BoundaryProblem(); }
    // Initial conditions at 0: E[0], E[0]D, ..., E[0]D^(n-1).
    static BoundaryProblem initial_value(const DiffOperator& T);

    const DiffOperator& T() const { return T_; }
    const std::vector<StieltjesCondition>& B() const { return B_; }
    unsigned order() const { return T_.order(); }
    std::size_t dim() const { return B_.size(); }

    // Same operator and same boundary space.
    friend bool operator==(const BoundaryProblem& a, const BoundaryProblem& b);

private:
    DiffOperator T_;
    std::vector<StieltjesCondition> B_;
};

std::vector<StieltjesCondition> initial_conditions(unsigned n);

BoundaryProblem bp_mul(const BoundaryProblem& p1, const BoundaryProblem& p2);
Matrix evaluation_matrix(const BoundaryProblem& p, const FundamentalSystem& fs);
Matrix evaluation_matrix(const std::vector<StieltjesCondition>& bs, const std::vector<ExpPoly>& us);
bool is_regular(const BoundaryProblem& p);
bool is_well_posed(const BoundaryProblem& p);
IntDiffOperator fundamental_right_inverse(const DiffOperator& T);
IntDiffOperator fundamental_right_inverse(const FundamentalSystem& fs);
IntDiffOperator projector(const BoundaryProblem& p);
// Coefficient functions c_j = sum_i u_i (beta(u)^-1)_{ij}, so P = sum_j c_j beta_j.
std::vector<ExpPoly> projector_coefficients(const BoundaryProblem& p);
IntDiffOperator greens_operator(const BoundaryProblem& p);
BoundaryProblem divide_left(const DiffOperator& T1, const BoundaryProblem& p2, const BoundaryProblem& p);
std::pair<BoundaryProblem, BoundaryProblem> lift_factorization(const BoundaryProblem& p, const DiffOperator& T1,
                                                               const DiffOperator& T2);
// q.T right-divides p.T and q's boundary space lies in p's.
bool is_subproblem(const BoundaryProblem& q, const BoundaryProblem& p);

}  // namespace intdiff
