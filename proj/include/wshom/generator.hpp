#pragma once

#include <cstdint>
#include <random>

#include "wshom/weighted_complex.hpp"

namespace wshom {

struct GeneratorParams {
    int max_dim = 3;
    int per_dim_budget = 15; // candidate simplices drawn per dimension (closure may add more)
    int max_weight = 10;     // weight range for maximal simplices
};

// Deterministic random weighted complex: the same seed and parameters
// always produce the same complex. Candidate simplices of each dimension
// up to max_dim are drawn from a small vertex pool and closed under
// faces; weights are drawn top-down so that every face carries the max
// over its cofaces plus a random non-negative increment.
WeightedComplex random_complex(Field f, std::uint64_t seed, const GeneratorParams& params = {});

// Random weight assignment w' with w'(s) <= w(s) pointwise and w' itself
// monotone, drawn top-down like the generator. Used to exercise the
// diagonal comparison maps.
WeightAssignment random_subweights(const WeightedComplex& x, std::mt19937_64& rng);

} // namespace wshom
