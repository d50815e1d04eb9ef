#include <intdiff/random.hpp>
#include <intdiff/syntax.hpp>

#include <benchmark/benchmark.h>

using namespace intdiff;

namespace {

const std::vector<Rational> kPoints{Rational(0), make_rational(1, 2), Rational(1)};
const std::vector<Rational> kRoots{Rational(-1), Rational(0), Rational(1), Rational(2)};

void BM_ExpPolyProduct(benchmark::State& state) {
    Rng rng(1);
    const ExpPolyShape shape{static_cast<unsigned>(state.range(0)), 4, 3, 5, 4};
    const ExpPoly f = random_exppoly(rng, shape), g = random_exppoly(rng, shape);
    for (auto _ : state) benchmark::DoNotOptimize(integrate(f * g));
}
BENCHMARK(BM_ExpPolyProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_GreensSecondOrder(benchmark::State& state) {
    const BoundaryProblem p = parse_problem("(D^2, [E[0], E[1]])");
    for (auto _ : state) benchmark::DoNotOptimize(greens_operator(p));
}
BENCHMARK(BM_GreensSecondOrder);

void BM_GreensRandomOrder(benchmark::State& state) {
    Rng rng(2);
    std::vector<BoundaryProblem> ps;
    for (int i = 0; i < 16; ++i) {
        BoundaryProblem p;
        do {
            std::vector<StieltjesCondition> bs;
            for (long k = 0; k < state.range(0); ++k) bs.push_back(random_condition(rng, kPoints));
            p = BoundaryProblem(random_operator(rng, static_cast<unsigned>(state.range(0)), kRoots), bs);
        } while (!is_regular(p));
        ps.push_back(p);
    }
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(greens_operator(ps[i++ % ps.size()]));
}
BENCHMARK(BM_GreensRandomOrder)->DenseRange(1, 4);

void BM_OperatorProduct(benchmark::State& state) {
    const IntDiffOperator G = greens_operator(parse_problem("(D^2, [E[0], E[1]])"));
    const IntDiffOperator H = greens_operator(parse_problem("(D - 1, [E[0]*D^2])"));
    for (auto _ : state) benchmark::DoNotOptimize(G * H);
}
BENCHMARK(BM_OperatorProduct);

void BM_OreQuadruple(benchmark::State& state) {
    const BoundaryProblem p1 = parse_problem("(D, [E[0]])"), p2 = parse_problem("(D, [E[1]])");
    for (auto _ : state) benchmark::DoNotOptimize(ore_quadruple(p1, p2));
}
BENCHMARK(BM_OreQuadruple);

void BM_Regularize(benchmark::State& state) {
    const BoundaryProblem p = parse_problem("(D^2, [E[0], E[1], E[0]*D])");
    for (auto _ : state) benchmark::DoNotOptimize(regularize(p));
}
BENCHMARK(BM_Regularize);

void BM_KernelWitness(benchmark::State& state) {
    const ProblemCombination n = parse_combination("(D, [E[0]]) - (D, [E[1]])");
    for (auto _ : state) benchmark::DoNotOptimize(kernel_witness(n));
}
BENCHMARK(BM_KernelWitness);

void BM_ModuleLaw(benchmark::State& state) {
    const BoundaryProblem p = parse_problem("(D - 1, [I[0,1]])"), q = parse_problem("(D + 1, [E[1/2]*D])");
    const MethoriousFunction m = parse_methorious("x*exp(x) + 2:(D, [E[0]])");
    for (auto _ : state) benchmark::DoNotOptimize(mf_eq(act(bp_mul(p, q), m), act(p, act(q, m))));
}
BENCHMARK(BM_ModuleLaw);

void BM_ParseRender(benchmark::State& state) {
    const std::string src = "exp(x)*A*exp(-x) - exp(x)*E[0] - exp(x)*E[0]*D";
    for (auto _ : state) benchmark::DoNotOptimize(render(parse_op(src)));
}
BENCHMARK(BM_ParseRender);

}  // namespace

BENCHMARK_MAIN();
