#pragma once

#include "witt/derivations.hpp"

#include <array>
#include <optional>

namespace witt {

enum class ProductKind { Mutation, Case3, Case2, Table };

const char* product_kind_name(ProductKind k);

// Commutative candidate product on V(f). All four variants evaluate totally
// on basis pairs (a table treats an absent entry as zero).
struct Product {
    ProductKind kind = ProductKind::Mutation;
    GroupSpec spec;
    AlgebraVector b;                // Mutation parameter; Case2 parameter
    AlgebraVector b_kernel;         // Case2: restriction of b to Gamma_0
    std::array<AlgebraVector, 3> b3; // Case3 parameters b_0, b_1, b_2
    CasePartition part;             // Case2 (gamma0), Case3 (tau)
    std::map<std::pair<GroupElement, GroupElement>, AlgebraVector> table;
};

// e_a * e_b = e_a . b . e_b = sum_g b_g e_{a+b+g}.
Product mutation_product(const GroupSpec& spec, AlgebraVector b);

// Direct sum over the three tau-cosets: within coset i the mutation by b_i,
// zero across distinct cosets. Requires part.tag == Three and supp(b_i)
// inside the coset with tau = -i mod 3 (throws input_error otherwise).
Product case3_product(const WittFunction& f, const CasePartition& part, AlgebraVector b0,
                      AlgebraVector b1, AlgebraVector b2);

// Two-value case product: mutation by b on Gamma_0 x Gamma_0, mutation by
// b's Gamma_0-restriction when exactly one factor is in Gamma_0, zero when
// neither is. Requires part.tag == Two.
Product case2_product(const WittFunction& f, const CasePartition& part, AlgebraVector b);

// Explicit table (finite groups); absent entries are zero. Entries are stored
// as given: commutativity is checked, never assumed.
Product table_product(const GroupSpec& spec,
                      std::map<std::pair<GroupElement, GroupElement>, AlgebraVector> entries);

AlgebraVector product_eval(const Product& p, const GroupElement& a, const GroupElement& b);
AlgebraVector product_apply(const Product& p, const AlgebraVector& x, const AlgebraVector& y);

struct AxiomReport {
    CheckReport commutative;
    CheckReport associative;
    CheckReport trans_leibniz;
    bool degenerate_zero = false; // product identically zero on the domain

    Verdict overall() const;
};

// The three transposed Poisson axioms over basis tuples from `domain`:
// commutativity (pairs), associativity (triples), and the transposed Leibniz
// law 2 z*[x,y] = [z*x, y] + [x, z*y] (triples). Exhaustive; witnesses are
// lex-first. Runs on the parallel scan engine.
AxiomReport check_axioms(const WittFunction& f, const Product& p,
                         const std::vector<GroupElement>& domain);

// Left multiplication z = e_g, materialized as a LinearMap with coefficient
// tables over `on_domain` (pass a padded domain for windowed pair checks).
LinearMap left_mult_operator(const Product& p, const GroupElement& g,
                             const std::vector<GroupElement>& on_domain);

struct TppReport {
    AxiomReport axioms;
    CheckReport halfder_route; // every left multiplication is a 1/2-derivation
    bool routes_agree = false;
    bool is_tpp = false;
    bool degenerate_zero = false;
};

// Dual-route transposed Poisson check. Route A: the three axioms. Route B:
// commutativity + associativity + every basis left multiplication passes
// is_delta_derivation with delta = 1/2. The routes must agree whenever both
// are conclusive; disagreement throws internal_error.
TppReport is_tpp(const WittFunction& f, const Product& p, const std::vector<GroupElement>& domain);

struct TppClassification {
    CaseTag tag = CaseTag::Abelian;
    ProductKind recovered_kind = ProductKind::Mutation;
    AlgebraVector b;
    std::array<AlgebraVector, 3> b3;
    bool reconstruction_matches = false;
    std::optional<std::pair<GroupElement, GroupElement>> mismatch; // first differing pair
    Verdict input_tpp = Verdict::Inconclusive; // is_tpp verdict for the input
    bool degenerate_zero = false;
    bool windowed = false; // verdict is window-consistency, not exactness
};

// Parameter recovery on a finite instance: case Two recovers b = e_0 * e_0,
// case Three recovers b_i = (e_{g_i} * e_{g_i}) . e_{-2 g_i}; the recovered
// product is rebuilt and compared against p on every pair. Runs is_tpp and
// reports its verdict alongside (recovery is mechanical and does not assume
// it). Abelian instances are rejected with input_error.
TppClassification classify_tpp(const WittFunction& f, const Product& p);

// Positive-rank variant: recovers b = e_0 * e_0 (total for symbolic
// products), rebuilds the mutation, and verifies coincidence with p on the
// window. The verdict is consistency on the window, not exactness.
TppClassification classify_tpp_windowed(const WittFunction& f, const Product& p,
                                        long long radius);

// Cyclic Hom-Lie identity [phi(x),[y,z]] + [phi(y),[z,x]] + [phi(z),[x,y]] = 0
// over basis triples. With literal_middle_term the second summand is replaced
// by [phi(y),[z,y]] (the transcribed variant, kept for comparison).
CheckReport homlie_check(const WittFunction& f, const LinearMap& phi,
                         const std::vector<GroupElement>& domain, bool literal_middle_term = false);

} // namespace witt
