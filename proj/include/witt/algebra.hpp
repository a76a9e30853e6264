#pragma once

#include "witt/maps.hpp"
#include "witt/vector.hpp"
#include "witt/wittfn.hpp"

#include <optional>
#include <string>
#include <vector>

namespace witt {

enum class Verdict { Pass, Fail, Inconclusive };

const char* verdict_name(Verdict v);

struct Witness {
    std::vector<GroupElement> elems;
    std::string note;
};

struct CheckReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::string detail;
};

// [e_a, e_b] = (f(b) - f(a)) e_{a+b}; returns the coefficient and the index.
std::pair<Scalar, GroupElement> bracket_basis(const WittFunction& f, const GroupElement& a,
                                              const GroupElement& b);

AlgebraVector bracket(const WittFunction& f, const AlgebraVector& x, const AlgebraVector& y);

// Exhaustive Jacobi check over all basis triples from `domain`, via the
// definition ([[x,y],z] cyclic sum of nested brackets). f is total, so every
// triple is decidable: the verdict is Pass or Fail (with the lex-first triple
// as witness). Runs on the parallel scan engine.
CheckReport verify_jacobi(const WittFunction& f, const std::vector<GroupElement>& domain);

// Antisymmetry [x,y] = -[y,x] over all pairs (property check).
CheckReport verify_antisymmetry(const WittFunction& f, const std::vector<GroupElement>& domain);

// The natural check domain: the whole group when finite, else a window.
std::vector<GroupElement> check_domain(const WittFunction& f, long long radius);

// All pairwise sums a+b (a, b in domain), joined with the domain itself:
// the padded set on which maps must be materialized so that pair checks
// over `domain` never miss a coefficient.
std::vector<GroupElement> padded_domain(const GroupSpec& spec,
                                        const std::vector<GroupElement>& domain);

} // namespace witt
