#pragma once

// Integro-differential algebra axioms checked on random exponential polynomials.

#include <intdiff/random.hpp>

#include <string>
#include <vector>

namespace intdiff {

struct AxiomResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    bool ok() const { return passed == total; }
};

std::vector<AxiomResult> check_axioms(Rng& rng, std::size_t pairs, const ExpPolyShape& shape = {});

}  // namespace intdiff
