#include "witt/maps.hpp"

#include "witt/error.hpp"

#include <algorithm>

namespace witt {

void canonicalize_map(LinearMap& m) {
    std::sort(m.parts.begin(), m.parts.end(),
              [](const GradedMap& a, const GradedMap& b) { return a.degree < b.degree; });
    for (std::size_t i = 1; i < m.parts.size(); ++i)
        if (m.parts[i].degree == m.parts[i - 1].degree)
            throw input_error("linear map: duplicate degree " + elem_to_string(m.parts[i].degree));
}

std::optional<AlgebraVector> apply_basis(const LinearMap& m, const GroupSpec& spec,
                                         const GroupElement& a) {
    AlgebraVector out;
    for (const auto& part : m.parts) {
        auto it = part.coeffs.find(a);
        if (it == part.coeffs.end()) return std::nullopt;
        add_term(out, elem_add(spec, a, part.degree), it->second);
    }
    return out;
}

AlgebraVector apply_map(const LinearMap& m, const GroupSpec& spec, const AlgebraVector& x) {
    AlgebraVector out;
    for (const auto& [a, c] : x) {
        for (const auto& part : m.parts) {
            auto it = part.coeffs.find(a);
            if (it == part.coeffs.end())
                throw domain_error("map coefficient missing at degree " +
                                   elem_to_string(part.degree) + ", element " + elem_to_string(a));
            add_term(out, elem_add(spec, a, part.degree), c * it->second);
        }
    }
    return out;
}

LinearMap scalar_map(const GroupSpec& spec, const Scalar& c,
                     const std::vector<GroupElement>& domain) {
    return shift_map(spec, zero_element(spec), c, domain);
}

LinearMap shift_map(const GroupSpec&, const GroupElement& g, const Scalar& c,
                    const std::vector<GroupElement>& domain) {
    LinearMap m;
    GradedMap part;
    part.degree = g;
    for (const auto& a : domain) part.coeffs.emplace(a, c);
    m.parts.push_back(std::move(part));
    return m;
}

LinearMap restricted_shift_map(const GroupSpec&, const GroupElement& g, const Scalar& c,
                               const std::vector<GroupElement>& domain,
                               const std::function<bool(const GroupElement&)>& keep) {
    LinearMap m;
    GradedMap part;
    part.degree = g;
    for (const auto& a : domain) part.coeffs.emplace(a, keep(a) ? c : Scalar(0));
    m.parts.push_back(std::move(part));
    return m;
}

} // namespace witt
