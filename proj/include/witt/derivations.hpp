#pragma once

#include "witt/algebra.hpp"
#include "witt/linsolve.hpp"

#include <string>
#include <vector>

namespace witt {

// Residual of the homogeneous half-derivation condition for the degree-gamma
// coefficient table d at the pair (a, b):
//   2(f(b)-f(a)) d(a+b) - (f(b)-f(a+g)) d(a) - (f(b+g)-f(a)) d(b).
// Zero on all pairs iff e_x -> d(x) e_{x+g} is a half-derivation.
// Throws domain_error when d is undefined at a, b, or a+b.
Scalar homogeneous_residual(const WittFunction& f, const GradedMap& d, const GroupElement& a,
                            const GroupElement& b);

// Definitional check phi([x,y]) = delta([phi(x),y] + [x,phi(y)]) over all
// basis pairs from `domain`. Pairs touching coefficients outside phi's stored
// domain are skipped; any skip (or an empty domain) makes a non-failing
// verdict Inconclusive instead of Pass.
CheckReport is_delta_derivation(const WittFunction& f, const LinearMap& phi, const Scalar& delta,
                                const std::vector<GroupElement>& domain);

struct SolutionSpace {
    // Unknown order: (degree, element), both ascending; column k of `basis`
    // is the coefficient d_degree(element) at unknowns[k].
    std::vector<std::pair<GroupElement, GroupElement>> unknowns;
    std::vector<Row> basis; // canonical RREF nullspace basis
    bool abelian_all_maps = false; // abelian instance: every linear map qualifies

    std::size_t dim() const { return basis.size(); }
    LinearMap to_map(const GroupSpec& spec, std::size_t k) const;
};

// Exact solve of the half-derivation space on a finite instance: one linear
// equation per (degree, a, b) triple, |Gamma|^2 unknowns, deterministic
// nullspace. On an abelian instance returns the special verdict instead of a
// matrix. Throws input_error on invalid f or an infinite group.
SolutionSpace solve_halfder_space(const WittFunction& f);

struct DegreeSolve {
    GroupElement degree;
    SolutionSpace space; // unknowns: (degree, a) for a in the window
    std::size_t equations = 0;
    bool underconstrained = false;
    bool hypothesis_witnessable = true;
    std::vector<std::string> flags;
};

// Per-degree windowed solve on a positive-rank instance. Unknowns are the
// window coefficients of one degree; equations come from pairs (a, b) with
// a, b, a+b all inside the window. A degree is flagged underconstrained when
// radius < 2*|degree| (the padding heuristic), when the constancy lemma's
// auxiliary element is not witnessable in-window for some index that needs
// it, or when no constraining pair exists.
std::vector<DegreeSolve> solve_halfder_space_windowed(const WittFunction& f,
                                                      const std::vector<GroupElement>& degrees,
                                                      long long radius);

struct FamilyMember {
    GroupElement degree;
    bool restricted = false; // coefficient vanishes off Gamma_0
    LinearMap map;
};

// The classified half-derivation family, materialized on `domain`:
//   Two:   one shift per degree in Gamma_0, one Gamma_0-restricted shift per
//          degree outside it (all degrees of the finite group);
//   Three: one shift per degree in Gamma_0;
//   Big:   one shift per degree in `degrees`.
// Throws input_error for Abelian (no finite classified family).
std::vector<FamilyMember> classified_basis(const WittFunction& f, const CasePartition& part,
                                           const std::vector<GroupElement>& domain,
                                           const std::vector<GroupElement>& degrees = {});

struct ComparisonReport {
    bool equal = false;
    bool family_in_solved = false;
    bool solved_in_family = false;
    std::size_t solved_dim = 0;
    std::size_t family_dim = 0;
    std::string detail;
};

// Mutual span containment between a solved space and a classified family,
// flattened onto the solved unknown order. A family coefficient that is
// nonzero outside the unknown set fails containment with a witness.
ComparisonReport compare_spaces(const SolutionSpace& solved,
                                const std::vector<FamilyMember>& family);

} // namespace witt
