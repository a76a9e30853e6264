#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/error.hpp"
#include "witt/io.hpp"
#include "witt/sampler.hpp"

using namespace witt;
using nlohmann::json;

namespace {

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

const char* kZ4 = R"({
  "group": {"rank": 0, "torsion": [4]},
  "f": {"kind": "table", "values": {"0": "0", "1": "1", "2": "0", "3": "1"}},
  "seed": 42
})";

const char* kZid = R"({
  "group": {"rank": 1, "torsion": []},
  "f": {"kind": "additive", "gen_values": ["1"]},
  "window": {"radius": 8}
})";

} // namespace

TEST_CASE("instance documents parse with defaults attached") {
    Instance z4 = parse_instance_text(kZ4);
    CHECK(z4.spec.rank == 0);
    CHECK(z4.spec.torsion == std::vector<long long>{4});
    CHECK(evaluate(z4.f, tors(1)) == Scalar(1));
    CHECK(evaluate(z4.f, tors(2)) == Scalar(0));
    CHECK(!z4.radius.has_value());
    REQUIRE(z4.seed.has_value());
    CHECK(*z4.seed == 42);

    Instance zi = parse_instance_text(kZid);
    CHECK(zi.spec.rank == 1);
    CHECK(evaluate(zi.f, zelem(5)) == Scalar(5));
    REQUIRE(zi.radius.has_value());
    CHECK(*zi.radius == 8);
    CHECK(!zi.seed.has_value());
}

TEST_CASE("malformed instance documents are rejected as input errors") {
    CHECK_THROWS_AS(parse_instance_text("not json"), input_error);
    CHECK_THROWS_AS(parse_instance_text("[1,2]"), input_error);
    CHECK_THROWS_AS(parse_instance_text(R"({"f":{"kind":"table","values":{}}})"), input_error);
    CHECK_THROWS_AS(parse_instance_text(R"({"group":{"rank":0,"torsion":[4]}})"), input_error);
    CHECK_THROWS_AS(parse_instance_text(
                        R"({"group":{"rank":0,"torsion":[4]},"f":{"kind":"mystery"}})"),
                    input_error);
    // table with a missing element
    CHECK_THROWS_AS(parse_instance_text(
                        R"({"group":{"rank":0,"torsion":[2]},
                            "f":{"kind":"table","values":{"0":"0"}}})"),
                    input_error);
    // additive on a torsion component needs value 0 there
    CHECK_THROWS_AS(parse_instance_text(
                        R"({"group":{"rank":0,"torsion":[2]},
                            "f":{"kind":"additive","gen_values":["1"]}})"),
                    input_error);
    // f(0) != 0 parses fine; it is the validator that rejects it
    Instance f0 = parse_instance_text(
        R"({"group":{"rank":0,"torsion":[2]},
            "f":{"kind":"table","values":{"0":"1","1":"1"}}})");
    auto v = validate(f0.f);
    CHECK(!v.valid);
    CHECK(v.f0_nonzero);
    CHECK_THROWS_AS(load_instance("/nonexistent/spec.json"), input_error);
}

TEST_CASE("product documents cover all four variants") {
    Instance z4 = parse_instance_text(kZ4);

    Product pm = parse_product_json(z4.f, R"({"variant":"mutation","b":"e1:1,e2:1/2"})");
    CHECK(pm.kind == ProductKind::Mutation);
    CHECK(vec_to_string(pm.b) == "e1:1,e2:1/2");

    Product p2 = parse_product_json(z4.f, R"({"variant":"case2","b":"e0:1/2"})");
    CHECK(p2.kind == ProductKind::Case2);
    CHECK(vec_to_string(product_eval(p2, tors(0), tors(0))) == "e0:1/2");
    CHECK(vec_is_zero(product_eval(p2, tors(1), tors(3)))); // both factors off the kernel

    Product pt = parse_product_json(
        z4.f, R"({"variant":"table","entries":[["0","1","e1:1"],["1","0","e1:1"]]})");
    CHECK(pt.kind == ProductKind::Table);
    CHECK(vec_to_string(product_eval(pt, tors(0), tors(1))) == "e1:1");
    CHECK(vec_is_zero(product_eval(pt, tors(2), tors(2))));

    Instance z3 = parse_instance_text(
        R"({"group":{"rank":0,"torsion":[3]},
            "f":{"kind":"table","values":{"0":"0","1":"1","2":"-1"}}})");
    Product p3 = parse_product_json(z3.f, R"({"variant":"case3","b0":"","b1":"e2:1","b2":""})");
    CHECK(p3.kind == ProductKind::Case3);
    CHECK(vec_to_string(product_eval(p3, tors(1), tors(1))) == "e1:1");

    CHECK_THROWS_AS(parse_product_json(z4.f, R"({"variant":"case3","b0":"","b1":"","b2":""})"),
                    input_error); // two-value instance has no case3 product
    CHECK_THROWS_AS(parse_product_json(z4.f, R"({"variant":"nope"})"), input_error);
    CHECK_THROWS_AS(parse_product_json(z4.f, R"({"variant":"mutation"})"), input_error);
}

TEST_CASE("map literals cover named and explicit forms") {
    GroupSpec z4;
    z4.torsion = {4};
    auto all = enumerate_group(z4);

    LinearMap id = parse_map_literal(z4, "identity", all);
    CHECK(vec_to_string(*apply_basis(id, z4, tors(2))) == "e2:1");

    LinearMap sh = parse_map_literal(z4, "shift:1", all);
    CHECK(vec_to_string(*apply_basis(sh, z4, tors(3))) == "e0:1");

    LinearMap sh2 = parse_map_literal(z4, "shift:2:-1/2", all);
    CHECK(vec_to_string(*apply_basis(sh2, z4, tors(1))) == "e3:-1/2");

    LinearMap pj = parse_map_literal(
        z4, R"({"parts":[{"degree":"1","coeffs":{"0":"2","1":"0"}}]})", all);
    CHECK(vec_to_string(*apply_basis(pj, z4, tors(0))) == "e1:2");
    CHECK(vec_is_zero(*apply_basis(pj, z4, tors(1))));
    CHECK(!apply_basis(pj, z4, tors(2)).has_value()); // outside the stored domain

    CHECK_THROWS_AS(parse_map_literal(z4, "spin:1", all), input_error);
    CHECK_THROWS_AS(parse_map_literal(z4, R"({"parts":[{"degree":"1"}]})", all), input_error);
}

TEST_CASE("report fragments serialize deterministically") {
    GroupSpec z4;
    z4.torsion = {4};

    Witness w;
    w.elems = {tors(1), tors(2)};
    w.note = "pair";
    json wj = witness_json(w);
    CHECK(wj["elements"] == json::array({"1", "2"}));
    CHECK(wj["note"] == "pair");

    CheckReport r;
    r.verdict = Verdict::Fail;
    r.checked = 5;
    r.skipped = 0;
    r.witness = w;
    json cj = check_json(r);
    CHECK(cj["verdict"] == "fail");
    CHECK(cj["checked"] == 5);
    CHECK(cj["witness"]["elements"][0] == "1");

    json gj = group_json(z4);
    CHECK(gj["rank"] == 0);
    CHECK(gj["torsion"] == json::array({4}));

    AlgebraVector v;
    add_term(v, tors(0), Scalar(1, 2));
    add_term(v, tors(2), Scalar(0) - Scalar::i());
    CHECK(vector_json(v) == "e0:1/2,e2:-1i");

    json env = report_envelope("validate", z4);
    CHECK(env["tool"] == "witt");
    CHECK(env["version"] == "0.1.0");
    CHECK(env["mode"] == "validate");
    CHECK(env["group"]["torsion"][0] == 4);
}

TEST_CASE("rendering emits stable json and readable text") {
    json rep = {{"tool", "witt"}, {"version", "0.1.0"}, {"mode", "validate"},
                {"group", {{"rank", 0}, {"torsion", {4}}}},
                {"result", {{"verdict", "pass"}, {"items", {"a", "b"}}}}};
    std::string js = render_report(rep, true);
    CHECK(js.back() == '\n');
    CHECK(json::parse(js) == rep);
    CHECK(render_report(rep, true) == js); // byte-stable

    std::string txt = render_report(rep, false);
    CHECK(txt.find("verdict: pass") != std::string::npos);
    CHECK(txt.find("- a") != std::string::npos);
    CHECK(txt.find('{') == std::string::npos);
}

TEST_CASE("structure validation enforces the report contract") {
    json good = {{"tool", "witt"}, {"version", "0.1.0"}, {"mode", "homlie"},
                 {"group", {{"rank", 1}, {"torsion", json::array()}}},
                 {"check", {{"verdict", "inconclusive"}, {"checked", 0}, {"skipped", 3},
                            {"witness", {{"elements", {"0", "1"}}}}}}};
    CHECK(validate_report_structure(good).empty());

    json no_tool = good;
    no_tool.erase("tool");
    CHECK(!validate_report_structure(no_tool).empty());

    json wrong_tool = good;
    wrong_tool["tool"] = "other";
    CHECK(!validate_report_structure(wrong_tool).empty());

    json bad_verdict = good;
    bad_verdict["check"]["verdict"] = "maybe";
    CHECK(!validate_report_structure(bad_verdict).empty());

    json float_leak = good;
    float_leak["check"]["ratio"] = 0.5;
    CHECK(!validate_report_structure(float_leak).empty());

    json bad_witness = good;
    bad_witness["check"]["witness"] = {{"elements", {1, 2}}};
    CHECK(!validate_report_structure(bad_witness).empty());

    CHECK(!validate_report_structure(json::array()).empty());
}

TEST_CASE("the seeded generator is reproducible down to each draw") {
    Lcg rng(42);
    CHECK(rng.uniform(0, 9) == 4);
    CHECK(rng.uniform(0, 9) == 6);
    CHECK(rng.rational() == Scalar(-3));
    CHECK(rng.gaussian().str() == "2-3/2i");

    Lcg again(42);
    CHECK(again.uniform(0, 9) == 4);
}

TEST_CASE("vector draws accumulate terms from the pool") {
    GroupSpec z4;
    z4.torsion = {4};
    auto pool = enumerate_group(z4);
    Lcg a(7), b(7);
    AlgebraVector va = draw_vector(a, pool, 3);
    AlgebraVector vb = draw_vector(b, pool, 3);
    CHECK(va == vb);
    CHECK(va.size() <= 3); // terms may merge or cancel
    for (const auto& [g, c] : va) {
        CHECK(!c.is_zero());
        CHECK(g.tors_part.size() == 1);
    }
}
