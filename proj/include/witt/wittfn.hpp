#pragma once

#include "witt/group.hpp"
#include "witt/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace witt {

enum class FnKind { Table, Additive };

// The structure function f : Gamma -> Q(i) of a Witt type algebra V(f),
// with basis {e_a} and bracket [e_a, e_b] = (f(b) - f(a)) e_{a+b}.
struct WittFunction {
    GroupSpec spec;
    FnKind kind = FnKind::Table;
    std::map<GroupElement, Scalar> table; // Table: complete on the finite group
    std::vector<Scalar> gen_values;       // Additive: one value per free generator
};

// Throws input_error on shape problems (table on infinite group, missing or
// extraneous table entries, gen_values count != rank).
WittFunction make_table_fn(GroupSpec spec, std::map<GroupElement, Scalar> table);
WittFunction make_additive_fn(GroupSpec spec, std::vector<Scalar> gen_values);

Scalar evaluate(const WittFunction& f, const GroupElement& a);

struct ValidationReport {
    bool valid = false;
    bool f0_nonzero = false; // set when f(0) != 0 (shift f by -f(0) to fix)
    std::optional<std::pair<GroupElement, GroupElement>> witness; // first failing pair
    std::string message;
};

// f gives a Lie algebra iff f(0) = 0 and, for all a, b:
// (f(a+b) - f(a) - f(b)) * (f(a) - f(b)) = 0. Exhaustive for tables,
// structural for additive functions.
ValidationReport validate(const WittFunction& f);

// Gamma_0 = f^{-1}(0). Materialized and closure-verified for finite groups
// (also re-checks: a - b in Gamma_0 implies f(a) = f(b)); predicate-backed
// otherwise. Throws internal_error if a theory re-check fails on valid f.
SubgroupTable kernel(const WittFunction& f);

enum class CaseTag { Abelian, Two, Three, Big };

const char* case_tag_name(CaseTag t);

struct CasePartition {
    CaseTag tag = CaseTag::Abelian;
    Scalar c;            // Two/Three: the distinguished nonzero value (0 otherwise)
    SubgroupTable gamma0;
    // Three only: tau(a) in {0,1,2} with f = 0, c, -c on tau = 0, 1, 2;
    // verified to be a surjective homomorphism onto Z/3.
    std::map<GroupElement, int> tau;
    std::vector<GroupElement> coset_reps; // Three: reps[i] lex-least with tau == i
};

// Distinct values attained by f (finite groups), ascending.
std::vector<Scalar> image_values(const WittFunction& f);

// Classifies a validated f by |f(Gamma)|: 1 -> Abelian, 2 -> Two, 3 -> Three
// (tau constructed and verified), >= 4 -> Big (additivity verified).
// Re-validates f and throws input_error if invalid; throws internal_error if
// an imported classification fact fails its empirical re-check.
CasePartition classify(const WittFunction& f);

} // namespace witt
