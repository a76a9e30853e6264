#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace witt {

// Finitely generated abelian group Z^rank x Z/m1 x ... x Z/mk.
struct GroupSpec {
    int rank = 0;
    std::vector<long long> torsion; // each >= 2

    bool finite() const { return rank == 0; }
    std::size_t components() const { return static_cast<std::size_t>(rank) + torsion.size(); }
    // Order of the torsion part (= group order when finite). Throws input_error on overflow.
    unsigned long long torsion_order() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Throws input_error if the shape is invalid (negative rank, torsion entry < 2).
void validate_spec(const GroupSpec& spec);

// Element in component coordinates: free coordinates first (any integer),
// then torsion coordinates canonicalized into [0, m).
struct GroupElement {
    std::vector<long long> free_part;
    std::vector<long long> tors_part;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    bool is_zero() const;
};

GroupElement zero_element(const GroupSpec& spec);
GroupElement elem_add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement elem_neg(const GroupSpec& spec, const GroupElement& a);
GroupElement elem_sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
// n*a for integer n (repeated-addition semantics, computed componentwise).
GroupElement elem_mul(const GroupSpec& spec, const GroupElement& a, long long n);

// Comma-joined coordinates, free first: "1,0,1".
std::string elem_to_string(const GroupElement& e);
GroupElement parse_element(const GroupSpec& spec, std::string_view s);

// All elements of a finite group in ascending lexicographic order.
// Throws input_error when rank > 0.
std::vector<GroupElement> enumerate_group(const GroupSpec& spec);

struct Window {
    long long radius = 0;
};

// Elements whose free coordinates all lie in [-radius, radius], torsion part
// unrestricted, ascending lexicographic order. Equals enumerate_group for rank 0.
std::vector<GroupElement> window_elements(const GroupSpec& spec, long long radius);

// Max-norm of the free part (0 for rank 0).
long long free_max_norm(const GroupElement& e);
bool in_window(const GroupElement& e, long long radius);

// Subgroup, either materialized (finite ambient group) or given by predicate.
struct SubgroupTable {
    GroupSpec spec;
    bool materialized = false;
    std::set<GroupElement> elements;
    std::function<bool(const GroupElement&)> predicate;
    std::string description;

    bool contains(const GroupElement& e) const;
};

SubgroupTable make_subgroup(const GroupSpec& spec, std::set<GroupElement> elements);
SubgroupTable make_subgroup(const GroupSpec& spec, std::function<bool(const GroupElement&)> pred,
                            std::string description);

// Exhaustive closure check (zero, negation, addition). Throws internal_error
// if `sub` is not materialized.
bool verify_subgroup(const SubgroupTable& sub, std::string* why = nullptr);

struct Coset {
    GroupElement representative; // lexicographically least member
    std::vector<GroupElement> elements;
};

// Cosets of a materialized subgroup in a finite group, ordered by representative.
std::vector<Coset> coset_decompose(const GroupSpec& spec, const SubgroupTable& sub);

} // namespace witt
