#include <intdiff/errors.hpp>
#include <intdiff/random.hpp>

namespace intdiff {

Rational random_rational(Rng& rng, int max_num, int max_den, bool nonzero) {
    std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    Rational r(n, den(rng));
    r.canonicalize();
    return r;
}

ExpPoly random_exppoly(Rng& rng, const ExpPolyShape& shape) {
    std::uniform_int_distribution<unsigned> terms(1, shape.max_terms), degree(0, shape.max_degree);
    std::uniform_int_distribution<int> freq(-shape.max_freq, shape.max_freq);
    ExpPoly f;
    const unsigned n = terms(rng);
    for (unsigned i = 0; i < n; ++i)
        f += ExpPoly::monomial(Monomial{Rational(freq(rng)), degree(rng)},
                               Scalar(random_rational(rng, shape.max_num, shape.max_den)));
    return f;
}

StieltjesCondition random_condition(Rng& rng, const std::vector<Rational>& points) {
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    std::uniform_int_distribution<int> kind(0, 3);
    const Rational a = points[pick(rng)];
    switch (kind(rng)) {
    case 0: return StieltjesCondition::eval(a, 0);
    case 1: return StieltjesCondition::eval(a, 1);
    default: {
        if (a == 0) return StieltjesCondition::eval(a, 0);
        return StieltjesCondition::integral(a, ExpPoly::x(kind(rng) == 3 ? 1 : 0));
    }
    }
}

DiffOperator random_operator(Rng& rng, unsigned order, const std::vector<Rational>& roots) {
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    std::vector<Rational> rs;
    for (unsigned i = 0; i < order; ++i) rs.push_back(roots[pick(rng)]);
    return DiffOperator::from_roots(rs);
}

BoundaryProblem random_regular_problem(Rng& rng, unsigned max_order, const std::vector<Rational>& points,
                                       const std::vector<Rational>& roots) {
    std::uniform_int_distribution<unsigned> order(1, max_order);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const unsigned n = order(rng);
        DiffOperator T = random_operator(rng, n, roots);
        std::vector<StieltjesCondition> bs;
        for (unsigned i = 0; i < n; ++i) bs.push_back(random_condition(rng, points));
        BoundaryProblem p(T, bs);
        if (is_regular(p)) return p;
    }
    throw InvariantViolation("no regular problem found");
}

}  // namespace intdiff
