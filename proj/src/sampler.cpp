#include "witt/sampler.hpp"

#include "witt/error.hpp"

namespace witt {

AlgebraVector draw_vector(Lcg& rng, const std::vector<GroupElement>& pool, int terms) {
    AlgebraVector v;
    if (pool.empty()) return v;
    for (int t = 0; t < terms; ++t) {
        const GroupElement& g =
            pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(pool.size()) - 1))];
        add_term(v, g, rng.gaussian());
    }
    return v;
}

Product draw_classified_product(Lcg& rng, const WittFunction& f, const CasePartition& part) {
    if (part.tag == CaseTag::Two) {
        std::vector<GroupElement> pool = enumerate_group(f.spec);
        return case2_product(f, part, draw_vector(rng, pool, 3));
    }
    if (part.tag == CaseTag::Three) {
        std::vector<GroupElement> all = enumerate_group(f.spec);
        std::array<AlgebraVector, 3> b;
        for (int i = 0; i < 3; ++i) {
            int want = (3 - i) % 3;
            std::vector<GroupElement> pool;
            for (const auto& g : all)
                if (part.tau.at(g) == want) pool.push_back(g);
            b[static_cast<std::size_t>(i)] = draw_vector(rng, pool, 2);
        }
        return case3_product(f, part, b[0], b[1], b[2]);
    }
    throw input_error("classified product draw requires a two-value or three-value instance");
}

Product draw_mutation_product(Lcg& rng, const GroupSpec& spec,
                              const std::vector<GroupElement>& pool) {
    return mutation_product(spec, draw_vector(rng, pool, 3));
}

} // namespace witt
