#pragma once

#include "witt/group.hpp"
#include "witt/scalar.hpp"

#include <map>
#include <string>
#include <string_view>

namespace witt {

// Finitely supported vector sum c_a e_a. Invariant: no zero coefficients are
// stored, so map equality is vector equality and iteration order is the
// deterministic element order.
using AlgebraVector = std::map<GroupElement, Scalar>;

// v += c * e_a, maintaining the no-zero invariant.
void add_term(AlgebraVector& v, const GroupElement& a, const Scalar& c);

AlgebraVector vec_add(const AlgebraVector& x, const AlgebraVector& y);
AlgebraVector vec_sub(const AlgebraVector& x, const AlgebraVector& y);
AlgebraVector vec_scale(const Scalar& c, const AlgebraVector& x);
bool vec_is_zero(const AlgebraVector& x);

// Group algebra product: e_a . e_b = e_{a+b}, extended bilinearly.
AlgebraVector group_algebra_mul(const GroupSpec& spec, const AlgebraVector& x,
                                const AlgebraVector& y);
// x . e_g (support shift by g).
AlgebraVector vec_shift(const GroupSpec& spec, const AlgebraVector& x, const GroupElement& g);

// Literal: comma-joined "e<element>:<scalar>" terms in ascending element
// order, e.g. "e0:1,e2:1/2"; the zero vector prints as "0".
std::string vec_to_string(const AlgebraVector& v);
AlgebraVector parse_vector(const GroupSpec& spec, std::string_view s);

} // namespace witt
