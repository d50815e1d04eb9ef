// Acceptance run: one PASS/FAIL line per criterion.  Reference values are
// computed here independently of the library routines under test.

#include <intdiff/axioms.hpp>
#include <intdiff/numeric.hpp>
#include <intdiff/syntax.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace intdiff;

namespace {

// Pinned limits.
constexpr double kAxiomSeconds = 10.0;
constexpr double kSecondOrderSeconds = 1.0;
constexpr double kAntiIsoSeconds = 60.0;
constexpr double kVerifySeconds = 5.0;
constexpr double kVerifyDeviation = 1e-6;
constexpr double kClosedFormTolerance = 1e-9;
constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome* o;
    void operator()(bool cond, const std::string& what) const {
        if (!cond && o->pass) {
            o->pass = false;
            o->detail = "failed: " + what;
        }
    }
};

const std::vector<Rational> kPoints{Rational(0), make_rational(1, 2), Rational(1)};
const std::vector<Rational> kRoots{Rational(-1), Rational(0), Rational(1), Rational(2)};

ExpPoly X(unsigned n = 1) { return ExpPoly::x(n); }
ExpPoly Exp(const Rational& mu) { return ExpPoly::exp(mu); }
ExpPoly half() { return ExpPoly(Scalar(make_rational(1, 2))); }

// ---- test-side oracles ------------------------------------------------------

// Probe family for comparing condition spaces: a condition lies in span(B)
// iff appending its probe values does not raise the rank.
std::vector<ExpPoly> probe_family() {
    std::vector<ExpPoly> fs;
    for (const Rational mu : {Rational(0), Rational(1), Rational(-1), Rational(2), make_rational(1, 3), make_rational(-5, 2)})
        for (unsigned k = 0; k <= 4; ++k) fs.push_back(X(k) * Exp(mu));
    return fs;
}

Matrix probe_rows(const std::vector<StieltjesCondition>& bs) {
    static const auto fam = probe_family();
    Matrix m;
    for (const auto& b : bs) {
        m.emplace_back();
        for (const auto& f : fam) m.back().push_back(cond_apply(b, f));
    }
    return m;
}

std::size_t probe_rank(const std::vector<StieltjesCondition>& bs) { return bs.empty() ? 0 : rank(probe_rows(bs)); }

bool space_contains(const std::vector<StieltjesCondition>& big, const std::vector<StieltjesCondition>& small) {
    auto all = big;
    all.insert(all.end(), small.begin(), small.end());
    return probe_rank(all) == probe_rank(big);
}

bool space_equal(const std::vector<StieltjesCondition>& a, const std::vector<StieltjesCondition>& b) {
    return space_contains(a, b) && space_contains(b, a);
}

// Polynomial long division on coefficient lists (low to high); true when b | a.
bool poly_divides(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
    }
    return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

// Kernel basis x^k e^(r x) from the roots of a product of (D - r) factors.
std::vector<ExpPoly> kernel_from_roots(const std::vector<Rational>& roots) {
    std::vector<ExpPoly> out;
    std::vector<Rational> seen;
    for (const auto& r : roots) {
        const auto k = static_cast<unsigned>(std::count(seen.begin(), seen.end(), r));
        out.push_back(X(k) * Exp(r));
        seen.push_back(r);
    }
    return out;
}

std::vector<Rational> random_roots(Rng& rng, unsigned n) {
    std::uniform_int_distribution<std::size_t> pick(0, kRoots.size() - 1);
    std::vector<Rational> rs;
    for (unsigned i = 0; i < n; ++i) rs.push_back(kRoots[pick(rng)]);
    return rs;
}

bool oracle_regular(const std::vector<Rational>& roots, const std::vector<StieltjesCondition>& bs) {
    if (bs.size() != roots.size()) return false;
    if (bs.empty()) return true;
    const auto u = kernel_from_roots(roots);
    Matrix m;
    for (const auto& b : bs) {
        m.emplace_back();
        for (const auto& f : u) m.back().push_back(cond_apply(b, f));
    }
    return !determinant(m).is_zero();
}

struct RootedProblem {
    std::vector<Rational> roots;
    BoundaryProblem p;
};

RootedProblem random_regular(Rng& rng, unsigned max_order) {
    std::uniform_int_distribution<unsigned> order(1, max_order);
    for (;;) {
        const auto rs = random_roots(rng, order(rng));
        std::vector<StieltjesCondition> bs;
        for (std::size_t i = 0; i < rs.size(); ++i) bs.push_back(random_condition(rng, kPoints));
        if (oracle_regular(rs, bs)) return {rs, BoundaryProblem(DiffOperator::from_roots(rs), bs)};
    }
}

// Leibniz expansion over all permutations.
Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m[i][perm[i]];
        total += inversions % 2 ? -prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Rational fact(unsigned n) {
    Rational r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

Rational pow_q(const Rational& b, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

// ---- criteria ---------------------------------------------------------------

Outcome axiom_suite() {
    Outcome o;
    Check check{&o};
    Rng rng(kSeed);
    const ExpPolyShape shape{3, 4, 3, 5, 4};
    auto e = [](const ExpPoly& f) { return f - integrate(derive(f)); };
    for (int i = 0; i < 200; ++i) {
        const ExpPoly f = random_exppoly(rng, shape), g = random_exppoly(rng, shape);
        const ExpPoly F = integrate(f), G = integrate(g), df = derive(f), dg = derive(g);
        check(derive(F) == f, "section axiom");
        check(derive(f * g) == df * g + f * dg, "Leibniz rule");
        check(integrate(df) * integrate(dg) + integrate(derive(f * g)) == integrate(df) * g + f * integrate(dg),
              "differential Baxter axiom");
        check(integrate(f * g) == f * G - integrate(df * G), "integration by parts form");
        check(F * G == integrate(f * G) + integrate(g * F), "pure Baxter axiom");
        check(e(f * g) == e(f) * e(g), "evaluation multiplicative");
        check(e(f) == ExpPoly(evaluate(f, 0)), "evaluation is ev_0");
    }
    o.detail = o.pass ? "200 random pairs, degree <= 4, |frequency| <= 3" : o.detail;
    return o;
}

Outcome second_order() {
    Outcome o;
    Check check{&o};
    const BoundaryProblem p(DiffOperator::D(2), {StieltjesCondition::eval(0), StieltjesCondition::eval(1)});
    const IntDiffOperator G = greens_operator(p);
    check(IntDiffOperator::D(2) * G == IntDiffOperator(1), "D^2 G = 1");
    for (const ExpPoly& f : {ExpPoly(1), X(), Exp(1)}) {
        const ExpPoly u = op_apply(G, f);
        check(evaluate(u, 0).is_zero() && evaluate(u, 1).is_zero(), "boundary conditions of G f");
        // u = int_0^x (x - t) f - x int_0^1 (1 - t) f
        const ExpPoly If = integrate(f), Itf = integrate(X() * f);
        const ExpPoly oracle = X() * If - Itf - (evaluate(If, 1) - evaluate(Itf, 1)) * X();
        check(u == oracle, "G f against the variation-of-constants integral");
    }
    check(op_apply(G, 1) == half() * X(2) - half() * X(), "G(1) = x^2/2 - x/2");
    o.detail = o.pass ? "T G = 1, boundary values exact, G(1) = " + render(op_apply(G, 1)) : o.detail;
    return o;
}

Outcome ill_posed() {
    Outcome o;
    Check check{&o};
    const BoundaryProblem p(DiffOperator::from_roots({Rational(1)}), {StieltjesCondition::eval(0, 2)});
    const IntDiffOperator ex(Exp(1)), emx(Exp(-1));
    const IntDiffOperator expected = ex * IntDiffOperator::A() * emx - ex * IntDiffOperator::E(0) -
                                     ex * IntDiffOperator::E(0) * IntDiffOperator::D();
    check(greens_operator(p) == expected, "Green's operator normal form");
    check(!is_well_posed(p), "is_well_posed must be false");
    check(is_regular(p), "problem is regular");
    o.detail = o.pass ? render(expected) : o.detail;
    return o;
}

Outcome anti_isomorphism() {
    Outcome o;
    Check check{&o};
    Rng rng(kSeed + 4);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_regular(rng, 2), b = random_regular(rng, 2);
        check(greens_operator(bp_mul(a.p, b.p)) == greens_operator(b.p) * greens_operator(a.p),
              render(a.p) + " * " + render(b.p));
    }
    o.detail = o.pass ? "50 random regular pairs of order <= 2" : o.detail;
    return o;
}

Outcome block_vandermonde() {
    Outcome o;
    Check check{&o};
    Rng rng(kSeed + 5);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned s = 1; s <= 3; ++s) {
            std::vector<Rational> pts;
            while (pts.size() < r) {
                Rational q(num(rng), den(rng));
                q.canonicalize();
                if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
            }
            const unsigned n = r * s;
            std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
            for (unsigned b = 0; b < r; ++b)
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < s && j <= i; ++j) m[i][b * s + j] = pow_q(pts[b], i - j) / fact(i - j);
            Rational V = 1;
            for (unsigned i = 0; i < r; ++i)
                for (unsigned j = i + 1; j < r; ++j) V *= pts[j] - pts[i];
            Rational sf_s = 1, sf_n = 1;
            for (unsigned k = 1; k + 1 <= s; ++k) sf_s *= fact(k);
            for (unsigned k = 1; k + 1 <= n; ++k) sf_n *= fact(k);
            const Rational formula = pow_q(V, s * s) * pow_q(sf_s, r) / sf_n;
            const Rational brute = leibniz_det(m);
            const std::string tag = "r=" + std::to_string(r) + " s=" + std::to_string(s);
            check(brute == formula, "oracle self-consistency " + tag);
            check(block_vandermonde_det(pts, s) == Scalar(brute), "determinant " + tag);
            check(block_vandermonde_formula(pts, s) == formula, "formula " + tag);
        }
    o.detail = o.pass ? "r, s in {1,2,3}; Leibniz expansion oracle" : o.detail;
    return o;
}

Outcome int_part_pol() {
    Outcome o;
    Check check{&o};
    Rng rng(kSeed + 6);
    std::uniform_int_distribution<unsigned> deg(0, 5);
    for (int i = 0; i < 50; ++i) {
        const ExpPoly f = random_exppoly(rng);
        const unsigned n = deg(rng);
        ExpPoly rhs, F = f;
        Rational falling = 1;
        for (unsigned k = 0; k <= n; ++k) {
            F = integrate(F);  // f^(-k-1)
            const ExpPoly term = ExpPoly(Scalar(falling)) * X(n - k) * F;
            rhs = k % 2 ? rhs - term : rhs + term;
            falling *= n - k;
        }
        check(integrate(f * X(n)) == rhs, "oracle identity n=" + std::to_string(n));
        check(int_part_pol_check(f, n), "library check n=" + std::to_string(n));
    }
    o.detail = o.pass ? "50 random (f, n <= 5)" : o.detail;
    return o;
}

Outcome regularization() {
    Outcome o;
    Check check{&o};
    Rng rng(kSeed + 7);
    std::uniform_int_distribution<unsigned> order(1, 2), nconds(1, 3);
    int count = 0;
    while (count < 50) {
        const auto rs = random_roots(rng, order(rng));
        std::vector<StieltjesCondition> bs;
        const unsigned m = nconds(rng);
        for (unsigned i = 0; i < m; ++i) bs.push_back(random_condition(rng, kPoints));
        if (oracle_regular(rs, bs)) continue;
        const BoundaryProblem p(DiffOperator::from_roots(rs), bs);
        ++count;
        const BoundaryProblem r = regularize(p);
        const std::string tag = render(p) + " -> " + render(r);
        const auto cr = r.T().char_poly();
        auto rr = rational_roots(cr);
        std::vector<Rational> roots;
        if (rr)
            for (const auto& [root, mult] : *rr)
                for (unsigned k = 0; k < mult; ++k) roots.push_back(root);
        check(rr.has_value() && oracle_regular(roots, r.B()), "regular " + tag);
        check(poly_divides(cr, p.T().char_poly()), "operator right-divides " + tag);
        check(space_contains(r.B(), bs), "boundary containment " + tag);
    }
    o.detail = o.pass ? "50 random singular problems" : o.detail;
    return o;
}

Outcome ore_quad() {
    Outcome o;
    Check check{&o};
    const BoundaryProblem p1(DiffOperator::D(), {StieltjesCondition::eval(0)});
    const BoundaryProblem p2(DiffOperator::D(), {StieltjesCondition::eval(1)});
    const StieltjesCondition mean = StieltjesCondition::integral(1, ExpPoly(1));
    auto [q1, q2] = ore_quadruple(p1, p2);
    for (const auto* q : {&q1, &q2}) {
        check(q->T() == DiffOperator::D() && q->B().size() == 1 && space_equal(q->B(), {mean}), "factor is (D, [I[0,1]])");
    }
    const std::vector<StieltjesCondition> target{StieltjesCondition::eval(0), StieltjesCondition::eval(1)};
    for (const auto& prod : {bp_mul(q1, p1), bp_mul(q2, p2)}) {
        check(prod.T() == DiffOperator::D(2), "product operator D^2");
        check(prod.B().size() == 2 && space_equal(prod.B(), target), "product space [E[0], E[1]]");
    }
    o.detail = o.pass ? "q1 = " + render(q1) + ", q2 = " + render(q2) : o.detail;
    return o;
}

Outcome kernel_example() {
    Outcome o;
    Check check{&o};
    const BoundaryProblem p0(DiffOperator::D(), {StieltjesCondition::eval(0)});
    const BoundaryProblem p1(DiffOperator::D(), {StieltjesCondition::eval(1)});
    ProblemCombination n;
    n.add(1, p0);
    n.add(-1, p1);
    const auto w = kernel_witness(n);
    check(w.has_value(), "witness found");
    if (w) {
        check(w->T() == DiffOperator::D() && space_equal(w->B(), {StieltjesCondition::integral(1, ExpPoly(1))}),
              "witness is (D, [I[0,1]])");
        check(render(*w) == "(D, [I[0,1]])", "rendering");
        check(bp_mul(*w, p0) == bp_mul(*w, p1), "w p0 = w p1");
    }
    const IntDiffOperator sum = greens_operator(p0) - greens_operator(p1);
    bool boundary = !sum.is_zero();
    for (const auto& [k, c] : sum.terms()) boundary = boundary && (k.kind == TermKind::Local || k.kind == TermKind::Global);
    check(boundary, "sum of Green's operators lies in the boundary part");
    check(kernel_conjecture_holds(n), "library consistency check");
    o.detail = o.pass ? "witness " + render(*w) + "; G0 - G1 = " + render(sum) : o.detail;
    return o;
}

MethoriousFunction random_methorious(Rng& rng) {
    MethoriousFunction m(random_exppoly(rng, {2, 2, 2, 3, 2}));
    const auto r = random_regular(rng, 2);
    const auto u = kernel_from_roots(r.roots);
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    return m + MethoriousFunction::ideal_element(u[pick(rng)], r.p, Scalar(random_rational(rng)));
}

Outcome module_laws() {
    Outcome o;
    Check check{&o};
    Rng rng(kSeed + 10);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_regular(rng, 2), q = random_regular(rng, 2);
        const MethoriousFunction m = random_methorious(rng);
        check(mf_eq(act(bp_mul(p.p, q.p), m), act(p.p, act(q.p, m))) == Verdict::Equal,
              "associativity for " + render(p.p) + ", " + render(q.p));
        check(mf_eq(act(BoundaryProblem::identity(), m), m) == Verdict::Equal, "unit law");
    }
    for (int i = 0; i < 50; ++i) {
        const auto p = random_regular(rng, 2);
        const ExpPoly f = random_exppoly(rng);
        check(!act(p.p, f).is_zero() && mf_eq(act(p.p, f), MethoriousFunction()) == Verdict::NotEqual,
              "nonzero f maps to nonzero");
        check(act(p.p, ExpPoly()).is_zero(), "zero maps to zero");
    }
    o.detail = o.pass ? "50 triples; 50 embedding samples" : o.detail;
    return o;
}

Outcome fundamental_formulae() {
    Outcome o;
    Check check{&o};
    const BoundaryProblem d1(DiffOperator::D(), {StieltjesCondition::eval(1)});
    const BoundaryProblem dF(DiffOperator::D(), {StieltjesCondition::integral(1, ExpPoly(1))});
    for (const ExpPoly& f : {ExpPoly(1), X(), Exp(1), X(2) * Exp(-2)}) {
        const auto delta = MethoriousFunction(derive(f)) + MethoriousFunction::ideal_element(1, d1, evaluate(f, 1));
        check(act(d1, f) == delta, "D_1 f = f' + f(1) delta_1 for " + render(f));
        const Scalar mean = evaluate(integrate(f), 1);
        const auto eps = MethoriousFunction(derive(f)) + MethoriousFunction::ideal_element(1, dF, mean);
        check(act(dF, f) == eps, "D_F f = f' + mean(f) eps for " + render(f));
    }
    check(act(dF, X()) == MethoriousFunction(1) + MethoriousFunction::ideal_element(1, dF, Scalar(make_rational(1, 2))),
          "mean value of x is 1/2");

    const BoundaryProblem p(DiffOperator::D(2), {StieltjesCondition::eval(0), StieltjesCondition::eval(1)});
    const IntDiffOperator G = greens_operator(p);
    Rng rng(kSeed + 11);
    for (int i = 0; i < 10; ++i) {
        const ExpPoly f = random_exppoly(rng);
        const Scalar a(random_rational(rng)), b(random_rational(rng));
        const ExpPoly boundary = a * (1 - X()) + b * X();
        const ExpPoly u = op_apply(G, f) + boundary;
        check(derive(u, 2) == f && evaluate(u, 0) == a && evaluate(u, 1) == b, "contract of u = G f + a(1-x) + b x");
        check(solve_bvp(p.T(), p.B(), f, {a, b}) == u, "solve_bvp reproduces the formula");
        const auto pu = MethoriousFunction(f) + MethoriousFunction::ideal_element(boundary, p);
        check(mf_eq(act(p, u), pu) == Verdict::Equal, "(D^2, [E[0], E[1]]) u = f + (a(1-x) + b x):p");
        check(mf_eq(apply_inverse(p, pu), u) == Verdict::Equal, "inverse recovers u");
    }
    o.detail = o.pass ? "Dirac and mean-value formulae; inhomogeneous solution formula" : o.detail;
    return o;
}

Outcome greens_localization() {
    Outcome o;
    Check check{&o};
    Rng rng(kSeed + 12);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_regular(rng, 2);
        const ExpPoly f = random_exppoly(rng);
        check(apply_inverse(p.p, f) == MethoriousFunction(op_apply(greens_operator(p.p), f)),
              "p^-1 f = G f for " + render(p.p));
        for (const auto& u : kernel_from_roots(p.roots))
            check(mf_eq(apply_inverse(p.p, MethoriousFunction::ideal_element(u, p.p)), u) == Verdict::Equal,
                  "p^-1 (u:p) = u for " + render(p.p));
    }
    o.detail = o.pass ? "50 random regular problems of order <= 2" : o.detail;
    return o;
}

Outcome numeric_verify() {
    Outcome o;
    Check check{&o};
    const BoundaryProblem p(DiffOperator::D(2), {StieltjesCondition::eval(0), StieltjesCondition::eval(1)});
    const VerifyReport r = verify_solution(p, Exp(1), {Scalar(0), Scalar(0)}, 0, 1, 11);
    check(r.points.size() == 11, "11 sample points");
    double exact_dev = 0, numeric_dev = 0;
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const double x = r.points[i].get_d();
        const double closed = std::exp(x) - 1 - (std::exp(1.0) - 1) * x;
        exact_dev = std::max(exact_dev, std::abs(closed - r.exact[i]));
        numeric_dev = std::max(numeric_dev, std::abs(closed - r.numeric[i]));
    }
    check(r.max_deviation < kVerifyDeviation, "exact vs quadrature deviation");
    check(exact_dev < kClosedFormTolerance, "exact column vs closed form e^x - 1 - (e - 1) x");
    check(numeric_dev < kVerifyDeviation, "quadrature column vs closed form");
    std::ostringstream s;
    s << "max deviation " << r.max_deviation << ", closed form deviation " << exact_dev;
    if (o.pass) o.detail = s.str();
    return o;
}

Outcome not_right_permutable() {
    Outcome o;
    Check check{&o};
    const BoundaryProblem p1(DiffOperator::D(), {StieltjesCondition::eval(0)});
    const BoundaryProblem p2(DiffOperator::D(), {StieltjesCondition::eval(1)});
    const RightMultipleSearch s = search_common_right_multiples(p1, p2);
    check(s.candidates > 0, "nonempty dictionary");
    check(s.solutions_with_both_regular == 0, "no solution with both factors regular");
    for (const auto& [S, c1, c2] : s.examples) {
        const BoundaryProblem f1(S, c1), f2(S, c2);
        check(bp_mul(p1, f1) == bp_mul(p2, f2), "recorded solution satisfies the equation");
        check(!is_regular(f1) || !is_regular(f2), "recorded solution has a singular factor");
    }
    o.detail = o.pass ? std::to_string(s.candidates) + " candidates, " + std::to_string(s.solutions) +
                            " solutions, none with both factors regular"
                      : o.detail;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double limit;  // seconds, 0 = none
    };
    const std::vector<Criterion> criteria{
        {1, "integro-differential algebra axioms", axiom_suite, kAxiomSeconds},
        {2, "second-order Green's operator", second_order, kSecondOrderSeconds},
        {3, "ill-posed regular problem", ill_posed, 0},
        {4, "Green's operators reverse products", anti_isomorphism, kAntiIsoSeconds},
        {5, "block Vandermonde determinant", block_vandermonde, 0},
        {6, "integration of polynomial multiples", int_part_pol, 0},
        {7, "regularization", regularization, 0},
        {8, "Ore quadruple example", ore_quad, 0},
        {9, "kernel witness and boundary-part check", kernel_example, 0},
        {10, "module laws and embedding", module_laws, 0},
        {11, "fundamental formulae and inhomogeneous problem", fundamental_formulae, 0},
        {12, "localized Green's operators", greens_localization, 0},
        {13, "numeric cross-check", numeric_verify, kVerifySeconds},
        {14, "no regular common right multiple", not_right_permutable, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit > 0 && secs >= c.limit) {
            o.pass = false;
            o.detail += " (runtime over " + std::to_string(c.limit) + " s)";
        }
        std::ostringstream t;
        t.precision(3);
        t << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << " [" << t.str()
                  << " s]" << std::endl;
        if (!o.pass) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
