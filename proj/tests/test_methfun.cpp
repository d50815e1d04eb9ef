#include "support.hpp"

using namespace test;

namespace {

MethoriousFunction delta(const char* problem) { return MethoriousFunction::ideal_element(1, P(problem)); }

MethoriousFunction random_methorious(Rng& rng) {
    MethoriousFunction m(random_exppoly(rng, {2, 2, 2, 3, 2}));
    const BoundaryProblem r = random_regular_problem(rng, 2, points(), roots());
    const auto u = fundamental_system(r.T()).u;
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    return m + MethoriousFunction::ideal_element(u[pick(rng)], r, Scalar(random_rational(rng)));
}

}  // namespace

TEST_CASE("action on smooth functions") {
    CHECK(act(P("(D, [E[0]])"), ExpPoly(1)) == delta("(D, [E[0]])"));
    CHECK(act(P("(D, [E[1]])"), Exp(1)) ==
          MethoriousFunction(Exp(1)) + MethoriousFunction::ideal_element(1, P("(D, [E[1]])"), Scalar::exp(1)));
    CHECK(act(P("(D, [I[0,1]])"), X()) ==
          MethoriousFunction(1) + MethoriousFunction::ideal_element(1, P("(D, [I[0,1]])"), Scalar(Q(1, 2))));
}

TEST_CASE("ideal elements require kernel functions") {
    CHECK_THROWS_AS(MethoriousFunction::ideal_element(X(), P("(D, [E[0]])")), InvariantViolation);
}

TEST_CASE("equality modulo inflation") {
    const BoundaryProblem p = P("(D, [E[0]])"), q = P("(D, [E[0]])");
    const MethoriousFunction a = MethoriousFunction::ideal_element(1, p);
    const MethoriousFunction b = MethoriousFunction::ideal_element(op_apply(greens_operator(q), 1), bp_mul(p, q));
    CHECK(mf_eq(a, b) == Verdict::Equal);
    CHECK(mf_eq(delta("(D, [E[0]])"), delta("(D, [E[1]])")) == Verdict::NotEqual);
    CHECK(mf_eq(a, a) == Verdict::Equal);
    CHECK(mf_eq(MethoriousFunction(X()), MethoriousFunction(X(2))) == Verdict::NotEqual);
}

TEST_CASE("inverse problems") {
    const BoundaryProblem p = P("(D^2, [E[0], E[1]])");
    CHECK(apply_inverse(p, ExpPoly(1)) == MethoriousFunction(F("x^2/2 - x/2")));
    const MethoriousFunction fp = MethoriousFunction::ideal_element(X(), p);
    CHECK(mf_eq(apply_inverse(p, fp), MethoriousFunction(X())) == Verdict::Equal);
    CHECK(apply_inverse(P("(D, [E[0]])"), delta("(D, [E[0]])")) == MethoriousFunction(1));
    CHECK_THROWS_AS(apply_inverse(P("(D, [E[1]])"), delta("(D, [E[0]])")), NotLeftDivisible);
}

TEST_CASE("inhomogeneous boundary problems") {
    const BoundaryProblem p = P("(D^2, [E[0], E[1]])");
    CHECK(solve_bvp(p.T(), p.B(), 0, {Scalar(0), Scalar(1)}) == X());
    CHECK(solve_bvp(p.T(), p.B(), 1, {Scalar(0), Scalar(0)}) == F("x^2/2 - x/2"));
    CHECK(solve_bvp(DiffOperator::from_roots({Q(1)}), {C("E[0]")}, 0, {Scalar(1)}) == Exp(1));
    const ExpPoly f = Exp(1);
    const Scalar a(Q(2)), b(Q(-3, 2));
    CHECK(solve_bvp(p.T(), p.B(), f, {a, b}) == op_apply(greens_operator(p), f) + a * (1 - X()) + b * X());
}

TEST_CASE("solve contract on random problems") {
    Rng rng(51);
    for (int i = 0; i < 30; ++i) {
        const BoundaryProblem p = random_regular_problem(rng, 3, points(), roots());
        const ExpPoly f = random_exppoly(rng, {2, 2, 2, 3, 2});
        std::vector<Scalar> v;
        for (std::size_t k = 0; k < p.dim(); ++k) v.push_back(Scalar(random_rational(rng, 5, 4, false)));
        const ExpPoly u = solve_bvp(p.T(), p.B(), f, v);
        CHECK(p.T().apply(u) == f);
        for (std::size_t k = 0; k < p.dim(); ++k) CHECK(cond_apply(p.B()[k], u) == v[k]);
    }
}

TEST_CASE("fundamental formulae") {
    const auto c = fundamental_formula(P("(D^2, [E[0], E[1]])"));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == 1 - X());
    CHECK(c[1] == X());
    CHECK(fundamental_formula(P("(D, [E[1]])")) == std::vector<ExpPoly>{ExpPoly(1)});
    CHECK(fundamental_formula(P("(D, [I[0,1]])")) == std::vector<ExpPoly>{ExpPoly(1)});
}

TEST_CASE("fractions acting on methorious functions") {
    const BoundaryProblem p = P("(D^2, [E[0], E[1]])");
    for (const auto& f : probes()) {
        const auto h = hyper_act(MethoriousOperator::from_problem(p), f);
        CHECK(h.den == BoundaryProblem::identity());
        CHECK(mf_eq(h.value, act(p, f)) == Verdict::Equal);
        const auto g = hyper_act(MethoriousOperator::inverse_of(p), f);
        CHECK(g.den == BoundaryProblem::identity());
        CHECK(g.value == MethoriousFunction(op_apply(greens_operator(p), f)));
    }
    const auto d = hyper_act(MethoriousOperator::inverse_of(P("(D, [E[0]])")), delta("(D, [E[0]])"));
    CHECK(hyper_eq(d, MethoriousHyperfunction{BoundaryProblem::identity(), ExpPoly(1)}) == Verdict::Equal);
}

TEST_CASE("monoid action laws") {
    Rng rng(52);
    for (int i = 0; i < 15; ++i) {
        const BoundaryProblem p = random_regular_problem(rng, 2, points(), roots());
        const BoundaryProblem q = random_regular_problem(rng, 2, points(), roots());
        const MethoriousFunction m = random_methorious(rng);
        CHECK(mf_eq(act(bp_mul(p, q), m), act(p, act(q, m))) == Verdict::Equal);
        CHECK(act(BoundaryProblem::identity(), m) == m);
        CHECK(projector(bp_mul(p, q)) ==
              projector(q) + greens_operator(q) * projector(p) * q.T().to_operator());
    }
}

TEST_CASE("smooth functions embed faithfully") {
    Rng rng(53);
    for (int i = 0; i < 25; ++i) {
        const BoundaryProblem p = random_regular_problem(rng, 2, points(), roots());
        const ExpPoly f = random_exppoly(rng);
        CHECK_FALSE(act(p, f).is_zero());
        CHECK(mf_eq(act(p, f), MethoriousFunction()) == Verdict::NotEqual);
    }
    CHECK(act(P("(D, [E[0]])"), ExpPoly(0)).is_zero());
}

TEST_CASE("the integral problem annihilates the difference of deltas") {
    const MethoriousFunction diff = delta("(D, [E[1]])") - delta("(D, [E[0]])");
    CHECK(mf_eq(act(P("(D, [I[0,1]])"), diff), MethoriousFunction()) == Verdict::Equal);
    CHECK(deflate(act(P("(D, [I[0,1]])"), diff)).is_zero());
}

TEST_CASE("inverse then action is the identity") {
    Rng rng(54);
    for (int i = 0; i < 15; ++i) {
        const BoundaryProblem p = random_regular_problem(rng, 2, points(), roots());
        const MethoriousFunction m = act(p, random_methorious(rng));
        const MethoriousFunction back = apply_inverse(p, m);
        CHECK(mf_eq(act(p, back), m) == Verdict::Equal);
        const ExpPoly f = random_exppoly(rng);
        CHECK(mf_eq(act(p, apply_inverse(p, f)), f) == Verdict::Equal);
    }
}

TEST_CASE("localized Green's operators") {
    Rng rng(55);
    for (int i = 0; i < 15; ++i) {
        const BoundaryProblem p = random_regular_problem(rng, 2, points(), roots());
        const ExpPoly f = random_exppoly(rng);
        CHECK(apply_inverse(p, f) == MethoriousFunction(op_apply(greens_operator(p), f)));
        for (const auto& u : fundamental_system(p.T()).u)
            CHECK(mf_eq(apply_inverse(p, MethoriousFunction::ideal_element(u, p)), u) == Verdict::Equal);
    }
}

TEST_CASE("fraction equality") {
    const MethoriousOperator a = MethoriousOperator::inverse_of(P("(D, [E[0]])"));
    CHECK(frac_eq(a, a) == Verdict::Equal);
    CHECK(frac_eq(a, MethoriousOperator::inverse_of(P("(D, [E[1]])"))) == Verdict::NotEqual);
}
