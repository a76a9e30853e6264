#pragma once

#include "witt/vector.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace witt {

// Homogeneous component of degree `degree`: e_a -> coeffs[a] * e_{a+degree}.
// `coeffs` is a coefficient table, not an AlgebraVector: explicit zeros are
// meaningful (defined and equal to 0); an absent key means "undefined here"
// (outside the stored window).
struct GradedMap {
    GroupElement degree;
    std::map<GroupElement, Scalar> coeffs;
};

// Finite sum of homogeneous components with pairwise distinct degrees,
// kept sorted by degree. The map is defined at `a` iff every part is.
struct LinearMap {
    std::vector<GradedMap> parts;
};

// Sorts parts by degree; throws input_error on duplicate degrees.
void canonicalize_map(LinearMap& m);

// phi(e_a), or nullopt if some part is undefined at a. An empty parts list is
// the zero map (defined everywhere).
std::optional<AlgebraVector> apply_basis(const LinearMap& m, const GroupSpec& spec,
                                         const GroupElement& a);

// phi(x) extended linearly; throws domain_error naming the missing
// (degree, element) on a coefficient-domain miss.
AlgebraVector apply_map(const LinearMap& m, const GroupSpec& spec, const AlgebraVector& x);

// Identity scaled by c: single degree-0 part, coefficient c on `domain`.
LinearMap scalar_map(const GroupSpec& spec, const Scalar& c,
                     const std::vector<GroupElement>& domain);

// Shift map e_a -> c * e_{a+g} with constant coefficient on `domain`.
LinearMap shift_map(const GroupSpec& spec, const GroupElement& g, const Scalar& c,
                    const std::vector<GroupElement>& domain);

// Shift map with coefficient c on elements satisfying `keep`, 0 elsewhere.
LinearMap restricted_shift_map(const GroupSpec& spec, const GroupElement& g, const Scalar& c,
                               const std::vector<GroupElement>& domain,
                               const std::function<bool(const GroupElement&)>& keep);

} // namespace witt
