#include "witt/linsolve.hpp"

#include "witt/error.hpp"

namespace witt {

void Matrix::add_row(Row r) {
    if (r.size() != cols) throw internal_error("matrix row width mismatch");
    rows.push_back(std::move(r));
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
        std::size_t sel = m.rows.size();
        for (std::size_t i = r; i < m.rows.size(); ++i) {
            if (!m.rows[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[sel]);
        Scalar inv = m.rows[r][c].inv();
        for (std::size_t j = c; j < m.cols; ++j) m.rows[r][j] = m.rows[r][j] * inv;
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            if (i == r || m.rows[i][c].is_zero()) continue;
            Scalar factor = m.rows[i][c];
            for (std::size_t j = c; j < m.cols; ++j)
                m.rows[i][j] = m.rows[i][j] - factor * m.rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) {
    return rref(m).size();
}

std::vector<Row> nullspace(Matrix m) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        Row v(m.cols, Scalar(0));
        v[fc] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.rows[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Reduces v against an RREF basis; returns true when the residual is zero.
bool reduces_to_zero(const std::vector<Row>& rref_rows, const std::vector<std::size_t>& pivots,
                     Row v) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Scalar& coeff = v[pivots[i]];
        if (coeff.is_zero()) continue;
        Scalar factor = coeff;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - factor * rref_rows[i][j];
    }
    for (const Scalar& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace

bool in_span(const std::vector<Row>& basis, const Row& v, std::size_t cols) {
    Matrix m;
    m.cols = cols;
    for (const Row& r : basis) m.add_row(r);
    std::vector<std::size_t> pivots = rref(m);
    return reduces_to_zero(m.rows, pivots, v);
}

SpanCompare compare_spans(const std::vector<Row>& a, const std::vector<Row>& b, std::size_t cols) {
    SpanCompare res;
    Matrix ma, mb;
    ma.cols = mb.cols = cols;
    for (const Row& r : a) ma.add_row(r);
    for (const Row& r : b) mb.add_row(r);
    std::vector<std::size_t> pa = rref(ma), pb = rref(mb);

    res.a_in_b = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!reduces_to_zero(mb.rows, pb, a[i])) {
            res.a_in_b = false;
            res.witness_a = i;
            break;
        }
    }
    res.b_in_a = true;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!reduces_to_zero(ma.rows, pa, b[i])) {
            res.b_in_a = false;
            res.witness_b = i;
            break;
        }
    }
    res.equal = res.a_in_b && res.b_in_a;
    return res;
}

} // namespace witt
