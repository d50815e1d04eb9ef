#include <intdiff/axioms.hpp>

namespace intdiff {

std::vector<AxiomResult> check_axioms(Rng& rng, std::size_t pairs, const ExpPolyShape& shape) {
    std::vector<AxiomResult> r{{"section"}, {"leibniz"}, {"differential baxter"}, {"integration by parts"},
                               {"pure baxter"}, {"evaluation multiplicative"}, {"evaluation projector"}};
    auto e = [](const ExpPoly& f) { return f - integrate(derive(f)); };
    for (std::size_t i = 0; i < pairs; ++i) {
        const ExpPoly f = random_exppoly(rng, shape), g = random_exppoly(rng, shape);
        const ExpPoly F = integrate(f), G = integrate(g);
        const ExpPoly df = derive(f), dg = derive(g);
        const bool checks[] = {
            derive(F) == f,
            derive(f * g) == df * g + f * dg,
            integrate(df) * integrate(dg) + integrate(derive(f * g)) == integrate(df) * g + f * integrate(dg),
            integrate(f * g) == f * G - integrate(df * G),
            F * G == integrate(f * G) + integrate(g * F),
            e(f * g) == e(f) * e(g),
            e(e(f)) == e(f),
        };
        for (std::size_t k = 0; k < r.size(); ++k) {
            ++r[k].total;
            if (checks[k]) ++r[k].passed;
        }
    }
    return r;
}

}  // namespace intdiff
