#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/algebra.hpp"
#include "witt/error.hpp"
#include "witt/linsolve.hpp"
#include "witt/maps.hpp"
#include "witt/parallel.hpp"
#include "witt/vector.hpp"
#include "witt/wittfn.hpp"

using namespace witt;

namespace {

GroupSpec cyclic(long long n) {
    GroupSpec s;
    s.rank = 0;
    s.torsion = {n};
    return s;
}

GroupElement tors(long long k) {
    GroupElement e;
    e.tors_part = {k};
    return e;
}

GroupElement zelem(long long k) {
    GroupElement e;
    e.free_part = {k};
    return e;
}

WittFunction table_fn(const GroupSpec& spec, const std::vector<long long>& vals) {
    std::map<GroupElement, Scalar> t;
    auto elems = enumerate_group(spec);
    for (std::size_t i = 0; i < elems.size(); ++i) t[elems[i]] = Scalar(vals[i]);
    return make_table_fn(spec, t);
}

Row row(std::initializer_list<long long> xs) {
    Row r;
    for (long long x : xs) r.emplace_back(x);
    return r;
}

} // namespace

TEST_CASE("formal vectors drop zero coefficients") {
    GroupSpec z4 = cyclic(4);
    AlgebraVector v;
    add_term(v, tors(1), Scalar(1));
    add_term(v, tors(1), Scalar(-1));
    CHECK(vec_is_zero(v));
    add_term(v, tors(2), Scalar(1, 2));
    CHECK(vec_to_string(v) == "e2:1/2");
    AlgebraVector w = vec_scale(Scalar(4), v);
    CHECK(vec_to_string(w) == "e2:2");
    CHECK(vec_to_string(vec_sub(w, w)) == "0");
    CHECK(vec_to_string(vec_add(v, w)) == "e2:5/2");
}

TEST_CASE("vector literals round-trip") {
    GroupSpec z4 = cyclic(4);
    for (const char* lit : {"e0:1,e2:1/2", "e3:-1i", "0"}) {
        CHECK(vec_to_string(parse_vector(z4, lit)) == lit);
    }
    CHECK(vec_is_zero(parse_vector(z4, "")));
    CHECK_THROWS_AS(parse_vector(z4, "e1"), input_error);
    CHECK_THROWS_AS(parse_vector(z4, "x1:1"), input_error);
}

TEST_CASE("group algebra product convolves supports") {
    GroupSpec z4 = cyclic(4);
    AlgebraVector x = parse_vector(z4, "e1:1,e2:1");
    AlgebraVector y = parse_vector(z4, "e1:1");
    CHECK(vec_to_string(group_algebra_mul(z4, x, y)) == "e2:1,e3:1");
    CHECK(vec_to_string(vec_shift(z4, x, tors(3))) == "e0:1,e1:1");
}

TEST_CASE("graded maps distinguish undefined from explicit zero") {
    GroupSpec z4 = cyclic(4);
    auto all = enumerate_group(z4);
    GradedMap g;
    g.degree = tors(1);
    g.coeffs[tors(0)] = Scalar(1);
    g.coeffs[tors(1)] = Scalar(0); // defined, zero
    LinearMap m;
    m.parts = {g};
    auto at0 = apply_basis(m, z4, tors(0));
    REQUIRE(at0.has_value());
    CHECK(vec_to_string(*at0) == "e1:1");
    auto at1 = apply_basis(m, z4, tors(1));
    REQUIRE(at1.has_value());
    CHECK(vec_is_zero(*at1));
    CHECK(!apply_basis(m, z4, tors(2)).has_value()); // undefined
    AlgebraVector x = parse_vector(z4, "e2:1");
    CHECK_THROWS_AS(apply_map(m, z4, x), domain_error);
    LinearMap empty;
    CHECK(apply_basis(empty, z4, tors(2)).has_value()); // zero map is total
}

TEST_CASE("duplicate degrees are rejected") {
    GradedMap a, b;
    a.degree = tors(1);
    b.degree = tors(1);
    LinearMap m;
    m.parts = {a, b};
    CHECK_THROWS_AS(canonicalize_map(m), input_error);
}

TEST_CASE("named map families evaluate as stated") {
    GroupSpec z4 = cyclic(4);
    auto all = enumerate_group(z4);
    LinearMap sh = shift_map(z4, tors(1), Scalar(1, 2), all);
    CHECK(vec_to_string(*apply_basis(sh, z4, tors(2))) == "e3:1/2");
    auto keep = [&](const GroupElement& a) { return a == tors(0) || a == tors(2); };
    LinearMap rs = restricted_shift_map(z4, tors(1), Scalar(1), all, keep);
    CHECK(vec_to_string(*apply_basis(rs, z4, tors(0))) == "e1:1");
    CHECK(vec_is_zero(*apply_basis(rs, z4, tors(1))));
    LinearMap sc = scalar_map(z4, Scalar(3), all);
    CHECK(vec_to_string(*apply_basis(sc, z4, tors(3))) == "e3:3");
}

TEST_CASE("bracket follows the structure constants") {
    WittFunction f = table_fn(cyclic(3), {0, 1, -1});
    auto [c, e] = bracket_basis(f, tors(1), tors(2));
    CHECK(c.str() == "-2"); // f(2) - f(1) = -1 - 1
    CHECK(e == tors(0));
    AlgebraVector x = parse_vector(cyclic(3), "e1:1");
    AlgebraVector y = parse_vector(cyclic(3), "e2:1");
    CHECK(vec_to_string(bracket(f, x, y)) == "e0:-2");
    CHECK(vec_to_string(vec_add(bracket(f, x, y), bracket(f, y, x))) == "0");
}

TEST_CASE("jacobi holds exactly when the defining equation does") {
    WittFunction good = table_fn(cyclic(3), {0, 1, -1});
    auto all3 = enumerate_group(cyclic(3));
    CHECK(verify_jacobi(good, all3).verdict == Verdict::Pass);
    CHECK(verify_antisymmetry(good, all3).verdict == Verdict::Pass);

    WittFunction bad = table_fn(cyclic(4), {0, 1, 2, 1});
    auto rep = verify_jacobi(bad, enumerate_group(cyclic(4)));
    CHECK(rep.verdict == Verdict::Fail);
    REQUIRE(rep.witness.has_value());
    REQUIRE(rep.witness->elems.size() == 3);
    CHECK(rep.witness->elems[0] == tors(0));
    CHECK(rep.witness->elems[1] == tors(1));
    CHECK(rep.witness->elems[2] == tors(2));
}

TEST_CASE("padded domains absorb pairwise sums") {
    GroupSpec z;
    z.rank = 1;
    auto w = window_elements(z, 2);
    auto padded = padded_domain(z, w);
    CHECK(padded.size() == 9); // -4..4
    CHECK(padded.front() == zelem(-4));
    CHECK(padded.back() == zelem(4));
}

TEST_CASE("rref produces leading ones and full elimination") {
    Matrix m(3);
    m.add_row(row({2, 4, 6}));
    m.add_row(row({1, 2, 4}));
    auto pivots = rref(m);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 2);
    CHECK(m.rows[0] == row({1, 2, 0}));
    CHECK(m.rows[1] == row({0, 0, 1}));
    CHECK(rank(m) == 2);
}

TEST_CASE("nullspace basis is the canonical free-column parameterization") {
    Matrix m(3);
    m.add_row(row({1, 0, 1}));
    m.add_row(row({0, 1, 1}));
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == row({-1, -1, 1}));
    CHECK(in_span(ns, row({-2, -2, 2}), 3));
    CHECK(!in_span(ns, row({1, 0, 0}), 3));
}

TEST_CASE("span comparison certifies mutual containment") {
    std::vector<Row> a = {row({1, 0, 0}), row({0, 1, 0})};
    std::vector<Row> b = {row({1, 1, 0}), row({1, -1, 0})};
    auto cmp = compare_spans(a, b, 3);
    CHECK(cmp.equal);
    std::vector<Row> c = {row({1, 0, 0})};
    auto cmp2 = compare_spans(a, c, 3);
    CHECK(!cmp2.equal);
    CHECK(cmp2.b_in_a);
    CHECK(!cmp2.a_in_b);
    REQUIRE(cmp2.witness_a.has_value());
    CHECK(!in_span(c, a[*cmp2.witness_a], 3)); // witness is the index of the escaping vector
}

TEST_CASE("scan engines agree on verdict and first violation") {
    auto pred = [](std::size_t i) {
        if (i % 7 == 3) return par::Outcome::Skip;
        return i == 1234 || i == 4321 ? par::Outcome::Violation : par::Outcome::Ok;
    };
    auto serial = par::scan_serial(5000, pred);
    REQUIRE(serial.first_violation.has_value());
    CHECK(*serial.first_violation == 1234);
#ifdef _OPENMP
    auto parallel = par::scan_parallel(5000, pred);
    REQUIRE(parallel.first_violation.has_value());
    CHECK(*parallel.first_violation == *serial.first_violation);
    CHECK(parallel.skipped >= serial.skipped); // parallel scans past the violation
#endif
    auto clean = par::scan_serial(100, [](std::size_t) { return par::Outcome::Ok; });
    CHECK(!clean.first_violation.has_value());
    CHECK(clean.checked == 100);
}

TEST_CASE("thread cap forces the serial path without changing results") {
    WittFunction f = table_fn(cyclic(6), {0, 1, 1, 0, 1, 1});
    auto all = enumerate_group(cyclic(6));
    par::set_max_threads(1);
    auto serial = verify_jacobi(f, all);
    par::set_max_threads(0);
    auto dflt = verify_jacobi(f, all);
    CHECK(serial.verdict == dflt.verdict);
    CHECK(serial.checked == dflt.checked);
}

TEST_CASE("check domains come from enumeration or windows") {
    WittFunction f = table_fn(cyclic(3), {0, 1, -1});
    CHECK(check_domain(f, 99).size() == 3);
    GroupSpec z;
    z.rank = 1;
    WittFunction fid = make_additive_fn(z, {Scalar(1)});
    CHECK(check_domain(fid, 2).size() == 5);
}
