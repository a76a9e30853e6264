#pragma once

#include "witt/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace witt {

using Row = std::vector<Scalar>;

struct Matrix {
    std::size_t cols = 0;
    std::vector<Row> rows;

    void add_row(Row r);
};

// In-place reduced row echelon form with leading-1 pivots, first-nonzero
// pivot selection in column order. RREF is unique for a fixed column order,
// which makes everything downstream deterministic. Returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

// Rank of a copy of m.
std::size_t rank(Matrix m);

// Canonical nullspace basis of m (RREF parameterization): one vector per free
// column in ascending column order, free coordinate set to 1.
std::vector<Row> nullspace(Matrix m);

// Span utilities. `basis` need not be reduced; these reduce internally.
bool in_span(const std::vector<Row>& basis, const Row& v, std::size_t cols);

struct SpanCompare {
    bool equal = false;
    bool a_in_b = false;
    bool b_in_a = false;
    std::optional<std::size_t> witness_a; // index of first A-vector outside span(B)
    std::optional<std::size_t> witness_b; // index of first B-vector outside span(A)
};

SpanCompare compare_spans(const std::vector<Row>& a, const std::vector<Row>& b, std::size_t cols);

} // namespace witt
