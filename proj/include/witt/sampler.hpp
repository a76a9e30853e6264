#pragma once

#include "witt/group.hpp"
#include "witt/scalar.hpp"
#include "witt/tpa.hpp"
#include "witt/vector.hpp"
#include "witt/wittfn.hpp"

#include <cstdint>
#include <vector>

namespace witt {

// Deterministic 64-bit linear congruential generator. Seeding with the same
// value reproduces the same draw sequence on every platform.
struct Lcg {
    std::uint64_t state = 0;

    explicit Lcg(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }

    // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    long long uniform(long long lo, long long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>((next() >> 33) % span);
    }

    // Small rational with numerator in [-3, 3] and denominator in [1, 3].
    Scalar rational() {
        long long num = uniform(-3, 3);
        long long den = uniform(1, 3);
        return Scalar(num, den);
    }

    // Small Gaussian rational.
    Scalar gaussian() { return rational() + rational() * Scalar::i(); }
};

// Sum of `terms` random scaled basis elements from `pool`; terms may merge or
// cancel, so the result can have fewer nonzero entries.
AlgebraVector draw_vector(Lcg& rng, const std::vector<GroupElement>& pool, int terms);

// Random parameter draw for the classified product of a finite non-abelian
// instance: a case2 product when f takes two values, a case3 product when it
// takes three.
Product draw_classified_product(Lcg& rng, const WittFunction& f, const CasePartition& part);

// Random mutation product with parameter supported on `pool`.
Product draw_mutation_product(Lcg& rng, const GroupSpec& spec,
                              const std::vector<GroupElement>& pool);

} // namespace witt
