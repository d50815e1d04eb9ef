#include "support.hpp"

using namespace test;

namespace {

DiffOperator Dm(long r) { return DiffOperator::from_roots({Q(r)}); }

MethoriousOperator random_fraction(Rng& rng) {
    static const std::vector<BoundaryProblem> pool{P("(D, [E[0]])"), P("(D, [E[1]])"), P("(D, [I[0,1]])"),
                                                   P("(D - 1, [E[0]])")};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size()), sign(0, 1);
    MethoriousOperator f;
    const std::size_t d = pick(rng);
    if (d < pool.size()) f.den = pool[d];
    const std::size_t n = pick(rng);
    f.num = ProblemCombination::single(n < pool.size() ? pool[n] : BoundaryProblem::identity(),
                                       sign(rng) ? Q(1) : Q(-1));
    return f;
}

}  // namespace

TEST_CASE("common left multiples") {
    auto c = common_left_multiple(DiffOperator::D(), DiffOperator::D());
    CHECK(c.T == DiffOperator::D());
    CHECK(c.C1 == DiffOperator());
    CHECK(c.C2 == DiffOperator());
    c = common_left_multiple(DiffOperator::D(), Dm(1));
    CHECK(c.T == DiffOperator::from_char_poly({Q(0), Q(-1), Q(1)}));
    CHECK(c.C1 == Dm(1));
    CHECK(c.C2 == DiffOperator::D());
    c = common_left_multiple(Dm(1), DiffOperator::from_char_poly({Q(-1), Q(0), Q(1)}));
    CHECK(c.T == DiffOperator::from_char_poly({Q(-1), Q(0), Q(1)}));
    CHECK(c.C1 == Dm(-1));
    CHECK(c.C2 == DiffOperator());
}

TEST_CASE("Ore quadruples") {
    const BoundaryProblem p1 = P("(D, [E[0]])"), p2 = P("(D, [E[1]])");
    auto [q1, q2] = ore_quadruple(p1, p2);
    CHECK(q1 == P("(D, [I[0,1]])"));
    CHECK(q2 == P("(D, [I[0,1]])"));
    CHECK(bp_mul(q1, p1) == P("(D^2, [E[0], E[1]])"));
    CHECK(bp_mul(q2, p2) == P("(D^2, [E[0], E[1]])"));

    auto [i1, i2] = ore_quadruple(p1, p1);
    CHECK(i1 == BoundaryProblem::identity());
    CHECK(i2 == BoundaryProblem::identity());

    const BoundaryProblem p3 = P("(D - 1, [E[0]])");
    auto [r1, r2] = ore_quadruple(p1, p3);
    CHECK(is_regular(r1));
    CHECK(is_regular(r2));
    CHECK(bp_mul(r1, p1) == bp_mul(r2, p3));
    CHECK(bp_mul(r1, p1).T() == DiffOperator::from_char_poly({Q(0), Q(-1), Q(1)}));
}

TEST_CASE("Ore quadruples of random regular problems") {
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        const BoundaryProblem a = random_regular_problem(rng, 2, points(), roots());
        const BoundaryProblem b = random_regular_problem(rng, 2, points(), roots());
        auto [q1, q2] = ore_quadruple(a, b);
        CHECK(is_regular(q1));
        CHECK(is_regular(q2));
        CHECK(bp_mul(q1, a) == bp_mul(q2, b));
    }
}

TEST_CASE("linear Ore condition") {
    const BoundaryProblem e0 = P("(D, [E[0]])"), e1 = P("(D, [E[1]])"), f = P("(D, [I[0,1]])");
    auto [s, r] = ore_linear(ProblemCombination::single(e0), e1);
    CHECK(s == f);
    CHECK(r == ProblemCombination::single(f));

    auto [s2, r2] = ore_linear(ProblemCombination::single(e1), e1);
    CHECK(s2 == BoundaryProblem::identity());
    CHECK(r2 == ProblemCombination::single(BoundaryProblem::identity()));

    const ProblemCombination n = ProblemCombination::single(e0) - ProblemCombination::single(e1);
    auto [s3, r3] = ore_linear(n, e0);
    CHECK(s3 * n == r3 * e0);
}

TEST_CASE("fraction products") {
    const BoundaryProblem a = P("(D, [E[0]])"), b = P("(D^2, [E[0], E[1]])");
    const MethoriousOperator ab = frac_mul(MethoriousOperator::from_problem(a), MethoriousOperator::from_problem(b));
    CHECK(ab.den == BoundaryProblem::identity());
    CHECK(ab.num == ProblemCombination::single(bp_mul(a, b)));

    const MethoriousOperator g = frac_mul(MethoriousOperator::inverse_of(P("(D, [E[0]])")),
                                          MethoriousOperator::inverse_of(P("(D, [E[1]])")));
    CHECK(g.den.order() == 2);
    CHECK(is_regular(g.den));
    CHECK(frac_eq(g, MethoriousOperator{bp_mul(P("(D, [I[0,1]])"), P("(D, [E[0]])")),
                                        ProblemCombination::single(P("(D, [I[0,1]])"))}) != Verdict::NotEqual);
    // Acts as the composite of the two Green's operators.
    const IntDiffOperator G = greens_operator(P("(D, [E[0]])")) * greens_operator(P("(D, [E[1]])"));
    for (const auto& f : probes()) {
        CHECK(hyper_eq(hyper_act(g, f), MethoriousHyperfunction{BoundaryProblem::identity(), op_apply(G, f)}) ==
              Verdict::Equal);
    }

    const MethoriousOperator inv_pair =
        frac_mul(MethoriousOperator::inverse_of(b), MethoriousOperator::from_problem(b));
    for (const auto& f : probes())
        CHECK(hyper_eq(hyper_act(inv_pair, f), MethoriousHyperfunction{BoundaryProblem::identity(), f}) == Verdict::Equal);
}

TEST_CASE("fraction sums") {
    const MethoriousOperator s = frac_add(MethoriousOperator::inverse_of(P("(D, [E[0]])")),
                                          MethoriousOperator::inverse_of(P("(D, [E[1]])")));
    CHECK(s.den == P("(D^2, [E[0], E[1]])"));
    CHECK(s.num == ProblemCombination::single(P("(D, [I[0,1]])"), 2));

    const MethoriousOperator a = MethoriousOperator::inverse_of(P("(D, [E[0]])"));
    MethoriousOperator zero;
    CHECK(frac_eq(frac_add(a, zero), a) == Verdict::Equal);

    const MethoriousOperator e = MethoriousOperator::from_problem(P("(D^2, [E[0], E[1]])"));
    CHECK(frac_add(e, frac_neg(e)).num.is_zero());
}

TEST_CASE("fraction ring laws up to action") {
    Rng rng(42);
    for (int i = 0; i < 10; ++i) {
        const MethoriousOperator a = random_fraction(rng), b = random_fraction(rng), c = random_fraction(rng);
        CHECK(frac_eq(frac_mul(frac_mul(a, b), c), frac_mul(a, frac_mul(b, c))) == Verdict::Equal);
        CHECK(frac_eq(frac_mul(a, frac_add(b, c)), frac_add(frac_mul(a, b), frac_mul(a, c))) == Verdict::Equal);
        CHECK(frac_eq(frac_add(a, b), frac_add(b, a)) == Verdict::Equal);
    }
}

TEST_CASE("kernel witnesses") {
    const ProblemCombination n = parse_combination("(D, [E[0]]) - (D, [E[1]])");
    const auto w = kernel_witness(n);
    REQUIRE(w);
    CHECK(*w == P("(D, [I[0,1]])"));
    CHECK(render(*w) == "(D, [I[0,1]])");
    CHECK((*w * n).is_zero());
    CHECK(kernel_conjecture_holds(n));

    CHECK_FALSE(kernel_witness(ProblemCombination::single(BoundaryProblem::identity())).has_value());

    const ProblemCombination n2 = parse_combination("2*(D, [E[0]]) - 2*(D, [E[1]])");
    const auto w2 = kernel_witness(n2);
    REQUIRE(w2);
    CHECK(*w2 == *w);
    CHECK(kernel_conjecture_holds(n2));
}

TEST_CASE("no regular common right multiples") {
    const RightMultipleSearch s = search_common_right_multiples(P("(D, [E[0]])"), P("(D, [E[1]])"));
    CHECK(s.candidates > 0);
    CHECK(s.solutions > 0);
    CHECK(s.solutions_with_both_regular == 0);
}
