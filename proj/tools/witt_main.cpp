#include "witt/algebra.hpp"
#include "witt/derivations.hpp"
#include "witt/error.hpp"
#include "witt/io.hpp"
#include "witt/parallel.hpp"
#include "witt/sampler.hpp"
#include "witt/tpa.hpp"
#include "witt/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::json;
using namespace witt;

namespace {

struct GlobalOpts {
    std::string format = "json";
    int threads = 0;
    bool timing = false;
};

class StopWatch {
  public:
    explicit StopWatch(bool enabled) : enabled_(enabled) {}

    void lap(const std::string& name) {
        if (!enabled_) return;
        auto now = std::chrono::steady_clock::now();
        laps_[name] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
        last_ = now;
    }

    void attach(json& rep) const {
        if (enabled_) rep["timing_ms"] = laps_;
    }

  private:
    bool enabled_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
    std::map<std::string, long long> laps_;
};

int emit(const json& rep, const GlobalOpts& g, int code) {
    std::cout << render_report(rep, g.format == "json");
    return code;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return 1;
        case Verdict::Inconclusive: return 3;
    }
    return 2;
}

long long resolve_radius(const Instance& inst, long long flag_radius) {
    if (flag_radius > 0) return flag_radius;
    if (inst.radius) return *inst.radius;
    throw input_error("positive-rank instance needs a window: pass --radius "
                      "or set window.radius in the spec file");
}

std::vector<GroupElement> degree_list(const GroupSpec& spec, const std::string& degrees) {
    if (spec.rank != 1 || !spec.torsion.empty())
        throw input_error("--degrees applies to the group Z (rank 1, no torsion)");
    auto pos = degrees.find("..");
    if (pos == std::string::npos)
        throw input_error("--degrees expects the form a..b, e.g. -3..3");
    long long a, b;
    try {
        a = std::stoll(degrees.substr(0, pos));
        b = std::stoll(degrees.substr(pos + 2));
    } catch (const std::exception&) {
        throw input_error("--degrees expects integer endpoints, e.g. -3..3");
    }
    if (a > b) throw input_error("--degrees expects a <= b");
    std::vector<GroupElement> out;
    for (long long d = a; d <= b; ++d) {
        GroupElement e;
        e.free_part = {d};
        out.push_back(e);
    }
    return out;
}

std::string read_inline_or_file(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw input_error("cannot open file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json validation_json(const ValidationReport& v) {
    json out = json::object();
    out["verdict"] = v.valid ? "pass" : "fail";
    if (v.f0_nonzero) out["f0_nonzero"] = true;
    if (!v.message.empty()) out["detail"] = v.message;
    if (v.witness) {
        Witness w;
        w.elems = {v.witness->first, v.witness->second};
        out["witness"] = witness_json(w);
    }
    return out;
}

json classification_json(const CasePartition& part) {
    json out = json::object();
    out["case"] = case_tag_name(part.tag);
    if (part.tag == CaseTag::Two || part.tag == CaseTag::Three) out["c"] = part.c.str();
    if (part.gamma0.materialized) {
        json ker = json::array();
        for (const auto& e : part.gamma0.elements) ker.push_back(elem_to_string(e));
        out["gamma0"] = std::move(ker);
    } else {
        out["gamma0"] = part.gamma0.description;
    }
    if (part.tag == CaseTag::Three) {
        json reps = json::array();
        for (const auto& e : part.coset_reps) reps.push_back(elem_to_string(e));
        out["coset_reps"] = std::move(reps);
    }
    return out;
}

json solution_json(const GroupSpec& spec, const SolutionSpace& sol) {
    json out = json::object();
    out["dim"] = sol.dim();
    json unknowns = json::array();
    for (const auto& [deg, a] : sol.unknowns)
        unknowns.push_back(json::array({elem_to_string(deg), elem_to_string(a)}));
    out["unknowns"] = std::move(unknowns);
    json basis = json::array();
    for (const auto& row : sol.basis) {
        json r = json::array();
        for (const auto& c : row) r.push_back(c.str());
        basis.push_back(std::move(r));
    }
    out["basis"] = std::move(basis);
    (void)spec;
    return out;
}

// Derivations section shared by `derivations` and `report`.
std::pair<json, Verdict> derivations_section(const Instance& inst, const std::string& degrees,
                                             long long flag_radius) {
    json out = json::object();
    if (inst.spec.finite()) {
        SolutionSpace sol = solve_halfder_space(inst.f);
        if (sol.abelian_all_maps) {
            out["abelian_all_maps"] = true;
            out["detail"] = "abelian instance: every linear map is a 1/2-derivation";
            out["verdict"] = "pass";
            return {out, Verdict::Pass};
        }
        out = solution_json(inst.spec, sol);
        out["nontrivial"] = sol.dim() > 1;
        CasePartition part = classify(inst.f);
        auto fam = classified_basis(inst.f, part, enumerate_group(inst.spec));
        ComparisonReport cmp = compare_spaces(sol, fam);
        json fj = json::object();
        fj["dim"] = cmp.family_dim;
        fj["equal"] = cmp.equal;
        fj["family_in_solved"] = cmp.family_in_solved;
        fj["solved_in_family"] = cmp.solved_in_family;
        if (!cmp.detail.empty()) fj["detail"] = cmp.detail;
        out["family"] = std::move(fj);
        Verdict v = cmp.equal ? Verdict::Pass : Verdict::Fail;
        out["verdict"] = verdict_name(v);
        return {out, v};
    }

    CasePartition part = classify(inst.f);
    if (part.tag == CaseTag::Abelian) {
        out["abelian_all_maps"] = true;
        out["detail"] = "abelian instance: every linear map is a 1/2-derivation";
        out["verdict"] = "pass";
        return {out, Verdict::Pass};
    }
    long long radius = resolve_radius(inst, flag_radius);
    std::vector<GroupElement> degs = degree_list(inst.spec, degrees);
    auto solves = solve_halfder_space_windowed(inst.f, degs, radius);
    out["window_radius"] = radius;
    json per = json::array();
    bool any_under = false, all_classified = true;
    for (const auto& d : solves) {
        json e = json::object();
        e["degree"] = elem_to_string(d.degree);
        e["dim"] = d.space.dim();
        e["equations"] = d.equations;
        e["underconstrained"] = d.underconstrained;
        if (!d.flags.empty()) e["flags"] = d.flags;
        json basis = json::array();
        for (const auto& row : d.space.basis) {
            json r = json::array();
            for (const auto& c : row) r.push_back(c.str());
            basis.push_back(std::move(r));
        }
        e["basis"] = std::move(basis);
        bool constant = d.space.dim() == 1;
        if (constant)
            for (const auto& c : d.space.basis[0])
                if (!(c == d.space.basis[0][0])) constant = false;
        e["constant_coefficient"] = constant;
        any_under = any_under || d.underconstrained;
        all_classified = all_classified && d.space.dim() == 1 && constant;
        per.push_back(std::move(e));
    }
    out["degrees"] = std::move(per);
    Verdict v = any_under ? Verdict::Inconclusive
                          : (all_classified ? Verdict::Pass : Verdict::Fail);
    out["verdict"] = verdict_name(v);
    out["detail"] = v == Verdict::Pass          ? "consistent with classification"
                    : v == Verdict::Inconclusive ? "window shortfall: increase --radius"
                                                 : "inconsistent with classification";
    return {out, v};
}

// Hom-Lie section over the classified non-scalar family members.
std::pair<json, Verdict> homlie_family_section(const Instance& inst, long long flag_radius) {
    json out = json::object();
    CasePartition part = classify(inst.f);
    if (part.tag == CaseTag::Abelian) {
        out["detail"] = "abelian instance: brackets vanish, nothing to check";
        out["verdict"] = "pass";
        return {out, Verdict::Pass};
    }
    std::vector<GroupElement> domain;
    std::vector<GroupElement> degs;
    if (inst.spec.finite()) {
        domain = enumerate_group(inst.spec);
    } else {
        long long radius = resolve_radius(inst, flag_radius);
        domain = window_elements(inst.spec, radius);
        degs = degree_list(inst.spec, "-3..3");
        out["window_radius"] = radius;
    }
    auto fam = classified_basis(inst.f, part, domain, degs);
    json members = json::array();
    Verdict agg = Verdict::Pass;
    std::size_t nontrivial = 0;
    for (const auto& m : fam) {
        if (m.degree.is_zero() && !m.restricted) continue; // scalar member
        ++nontrivial;
        CheckReport r = homlie_check(inst.f, m.map, domain);
        json e = json::object();
        e["degree"] = elem_to_string(m.degree);
        e["restricted"] = m.restricted;
        e["check"] = check_json(r);
        members.push_back(std::move(e));
        if (r.verdict == Verdict::Fail) agg = Verdict::Fail;
        else if (r.verdict == Verdict::Inconclusive && agg == Verdict::Pass)
            agg = Verdict::Inconclusive;
    }
    out["members"] = std::move(members);
    out["nontrivial_members"] = nontrivial;
    if (nontrivial == 0) out["detail"] = "only scalar members in the classified family";
    out["verdict"] = verdict_name(agg);
    return {out, agg};
}

int cmd_validate(const Instance& inst, const GlobalOpts& g) {
    json rep = report_envelope("validate", inst.spec);
    ValidationReport v = validate(inst.f);
    rep.update(validation_json(v));
    if (v.valid) rep["case"] = case_tag_name(classify(inst.f).tag);
    return emit(rep, g, v.valid ? 0 : 1);
}

int cmd_classify(const Instance& inst, const GlobalOpts& g) {
    json rep = report_envelope("classify", inst.spec);
    ValidationReport v = validate(inst.f);
    if (!v.valid) {
        rep.update(validation_json(v));
        return emit(rep, g, 1);
    }
    rep.update(classification_json(classify(inst.f)));
    rep["verdict"] = "pass";
    return emit(rep, g, 0);
}

int cmd_derivations(const Instance& inst, const GlobalOpts& g, const std::string& degrees,
                    long long flag_radius) {
    json rep = report_envelope("derivations", inst.spec);
    StopWatch watch(g.timing);
    ValidationReport v = validate(inst.f);
    if (!v.valid) {
        rep.update(validation_json(v));
        return emit(rep, g, 1);
    }
    auto [section, verdict] = derivations_section(inst, degrees, flag_radius);
    rep.update(section);
    watch.lap("solve");
    watch.attach(rep);
    return emit(rep, g, verdict_exit(verdict));
}

int cmd_tpp_verify(const Instance& inst, const GlobalOpts& g, const std::string& product_arg,
                   long long flag_radius) {
    json rep = report_envelope("tpp-verify", inst.spec);
    StopWatch watch(g.timing);
    ValidationReport v = validate(inst.f);
    if (!v.valid) {
        rep.update(validation_json(v));
        return emit(rep, g, 1);
    }
    Product p = parse_product_json(inst.f, read_inline_or_file(product_arg));
    std::vector<GroupElement> domain;
    if (inst.spec.finite()) {
        domain = enumerate_group(inst.spec);
    } else {
        long long radius = resolve_radius(inst, flag_radius);
        domain = window_elements(inst.spec, radius);
        rep["window_radius"] = radius;
    }
    TppReport t = is_tpp(inst.f, p, domain);
    watch.lap("check");
    rep["product"] = product_kind_name(p.kind);
    rep["commutative"] = check_json(t.axioms.commutative);
    rep["associative"] = check_json(t.axioms.associative);
    rep["trans_leibniz"] = check_json(t.axioms.trans_leibniz);
    rep["halfder_route"] = check_json(t.halfder_route);
    rep["routes_agree"] = t.routes_agree;
    rep["degenerate_zero"] = t.degenerate_zero;
    Verdict overall = t.is_tpp ? Verdict::Pass
                     : (t.axioms.overall() == Verdict::Fail ||
                        t.halfder_route.verdict == Verdict::Fail)
                         ? Verdict::Fail
                         : Verdict::Inconclusive;
    rep["verdict"] = verdict_name(overall);
    watch.attach(rep);
    return emit(rep, g, verdict_exit(overall));
}

int cmd_tpp_random(const Instance& inst, const GlobalOpts& g, long long trials,
                   long long seed_flag, long long flag_radius) {
    json rep = report_envelope("tpp-random", inst.spec);
    StopWatch watch(g.timing);
    ValidationReport v = validate(inst.f);
    if (!v.valid) {
        rep.update(validation_json(v));
        return emit(rep, g, 1);
    }
    if (trials <= 0) throw input_error("--trials expects a positive integer");
    std::uint64_t seed = seed_flag >= 0 ? static_cast<std::uint64_t>(seed_flag)
                                        : inst.seed.value_or(0);
    CasePartition part = classify(inst.f);
    if (part.tag == CaseTag::Abelian)
        throw input_error("abelian instance excluded from transposed Poisson sampling");

    std::vector<GroupElement> domain;
    std::vector<GroupElement> pool;
    long long radius = 0;
    const bool finite = inst.spec.finite();
    if (finite) {
        domain = enumerate_group(inst.spec);
    } else {
        radius = resolve_radius(inst, flag_radius);
        domain = window_elements(inst.spec, radius);
        pool = window_elements(inst.spec, std::min<long long>(2, radius));
        rep["window_radius"] = radius;
    }
    rep["seed"] = seed;
    rep["trials"] = trials;
    rep["case"] = case_tag_name(part.tag);

    Lcg rng(seed);
    json trial_list = json::array();
    long long passes = 0, failures = 0, roundtrip_failures = 0;
    for (long long t = 0; t < trials; ++t) {
        Product p = finite ? draw_classified_product(rng, inst.f, part)
                           : draw_mutation_product(rng, inst.spec, pool);
        TppReport r = is_tpp(inst.f, p, domain);
        bool roundtrip;
        json entry = json::object();
        entry["trial"] = t;
        if (p.kind == ProductKind::Case3) {
            entry["b0"] = vec_to_string(p.b3[0]);
            entry["b1"] = vec_to_string(p.b3[1]);
            entry["b2"] = vec_to_string(p.b3[2]);
            TppClassification cls = classify_tpp(inst.f, p);
            roundtrip = cls.reconstruction_matches && cls.b3 == p.b3;
        } else if (finite) {
            entry["b"] = vec_to_string(p.b);
            TppClassification cls = classify_tpp(inst.f, p);
            roundtrip = cls.reconstruction_matches && cls.b == p.b;
        } else {
            entry["b"] = vec_to_string(p.b);
            TppClassification cls = classify_tpp_windowed(inst.f, p, radius);
            roundtrip = cls.reconstruction_matches && cls.b == p.b;
        }
        entry["commutative"] = verdict_name(r.axioms.commutative.verdict);
        entry["associative"] = verdict_name(r.axioms.associative.verdict);
        entry["trans_leibniz"] = verdict_name(r.axioms.trans_leibniz.verdict);
        entry["halfder_route"] = verdict_name(r.halfder_route.verdict);
        entry["is_tpp"] = r.is_tpp;
        entry["routes_agree"] = r.routes_agree;
        entry["roundtrip"] = roundtrip ? "pass" : "fail";
        if (r.axioms.trans_leibniz.witness)
            entry["witness"] = witness_json(*r.axioms.trans_leibniz.witness);
        trial_list.push_back(std::move(entry));
        (r.is_tpp ? passes : failures)++;
        if (!roundtrip) roundtrip_failures++;
    }
    watch.lap("trials");
    rep["trial_reports"] = std::move(trial_list);
    json summary = json::object();
    summary["passes"] = passes;
    summary["failures"] = failures;
    summary["roundtrip_failures"] = roundtrip_failures;
    rep["summary"] = std::move(summary);
    Verdict overall =
        (failures == 0 && roundtrip_failures == 0) ? Verdict::Pass : Verdict::Fail;
    rep["verdict"] = verdict_name(overall);
    watch.attach(rep);
    return emit(rep, g, verdict_exit(overall));
}

int cmd_tpp_classify(const Instance& inst, const GlobalOpts& g, const std::string& product_arg,
                     long long flag_radius) {
    json rep = report_envelope("tpp-classify", inst.spec);
    ValidationReport v = validate(inst.f);
    if (!v.valid) {
        rep.update(validation_json(v));
        return emit(rep, g, 1);
    }
    Product p = parse_product_json(inst.f, read_inline_or_file(product_arg));
    TppClassification cls;
    if (inst.spec.finite()) {
        cls = classify_tpp(inst.f, p);
    } else {
        long long radius = resolve_radius(inst, flag_radius);
        cls = classify_tpp_windowed(inst.f, p, radius);
        rep["window_radius"] = radius;
    }
    rep["case"] = case_tag_name(cls.tag);
    rep["recovered_kind"] = product_kind_name(cls.recovered_kind);
    if (cls.recovered_kind == ProductKind::Case3) {
        rep["b0"] = vec_to_string(cls.b3[0]);
        rep["b1"] = vec_to_string(cls.b3[1]);
        rep["b2"] = vec_to_string(cls.b3[2]);
    } else {
        rep["b"] = vec_to_string(cls.b);
    }
    rep["reconstruction_matches"] = cls.reconstruction_matches;
    if (cls.mismatch) {
        Witness w;
        w.elems = {cls.mismatch->first, cls.mismatch->second};
        w.note = "first pair where input and reconstruction differ";
        rep["mismatch"] = witness_json(w);
    }
    rep["input_tpp"] = verdict_name(cls.input_tpp);
    rep["degenerate_zero"] = cls.degenerate_zero;
    rep["windowed"] = cls.windowed;
    Verdict overall = !cls.reconstruction_matches || cls.input_tpp == Verdict::Fail
                          ? Verdict::Fail
                          : cls.input_tpp;
    rep["verdict"] = verdict_name(overall);
    return emit(rep, g, verdict_exit(overall));
}

int cmd_homlie(const Instance& inst, const GlobalOpts& g, const std::string& map_arg,
               bool literal_middle, long long flag_radius) {
    json rep = report_envelope("homlie", inst.spec);
    ValidationReport v = validate(inst.f);
    if (!v.valid) {
        rep.update(validation_json(v));
        return emit(rep, g, 1);
    }
    std::vector<GroupElement> domain;
    if (inst.spec.finite()) {
        domain = enumerate_group(inst.spec);
    } else {
        long long radius = resolve_radius(inst, flag_radius);
        domain = window_elements(inst.spec, radius);
        rep["window_radius"] = radius;
    }
    LinearMap phi = parse_map_literal(inst.spec, read_inline_or_file(map_arg), domain);
    CheckReport r = homlie_check(inst.f, phi, domain, literal_middle);
    rep.update(check_json(r));
    rep["form"] = literal_middle ? "literal" : "cyclic";
    return emit(rep, g, verdict_exit(r.verdict));
}

int cmd_report(const Instance& inst, const GlobalOpts& g, const std::string& degrees,
               long long flag_radius) {
    json rep = report_envelope("report", inst.spec);
    StopWatch watch(g.timing);
    ValidationReport v = validate(inst.f);
    rep["validation"] = validation_json(v);
    if (!v.valid) {
        rep["verdict"] = "fail";
        return emit(rep, g, 1);
    }
    rep["classification"] = classification_json(classify(inst.f));
    watch.lap("classify");
    auto [dsec, dv] = derivations_section(inst, degrees, flag_radius);
    rep["derivations"] = std::move(dsec);
    watch.lap("derivations");
    auto [hsec, hv] = homlie_family_section(inst, flag_radius);
    rep["homlie"] = std::move(hsec);
    watch.lap("homlie");
    Verdict overall = Verdict::Pass;
    for (Verdict x : {dv, hv}) {
        if (x == Verdict::Fail) overall = Verdict::Fail;
        else if (x == Verdict::Inconclusive && overall == Verdict::Pass)
            overall = Verdict::Inconclusive;
    }
    rep["verdict"] = verdict_name(overall);
    watch.attach(rep);
    return emit(rep, g, verdict_exit(overall));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Witt type Lie algebras: validation, 1/2-derivations, and "
                 "transposed Poisson structures, in exact arithmetic"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);

    GlobalOpts g;
    app.add_option("--format", g.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--threads", g.threads, "Cap parallel fan-out (1 forces serial)");
    app.add_flag("--timing", g.timing, "Attach wall-clock timings to the report");

    std::string spec_path, degrees = "-3..3", product_arg, map_arg;
    long long flag_radius = -1, trials = 50, seed_flag = -1;
    bool literal_middle = false;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("spec", spec_path, "Instance spec file (JSON)")->required();
        cmd->fallthrough();
    };

    CLI::App* c_validate = app.add_subcommand("validate", "Check the Lie condition");
    add_spec(c_validate);
    CLI::App* c_classify = app.add_subcommand("classify", "Case partition of the instance");
    add_spec(c_classify);
    CLI::App* c_deriv = app.add_subcommand("derivations", "Solve the 1/2-derivation space");
    add_spec(c_deriv);
    c_deriv->add_option("--degrees", degrees, "Degree range a..b for windowed solves");
    c_deriv->add_option("--radius", flag_radius, "Window radius (positive rank)");

    CLI::App* c_tpp = app.add_subcommand("tpp", "Transposed Poisson structures");
    c_tpp->require_subcommand(1);
    c_tpp->fallthrough();
    CLI::App* c_verify = c_tpp->add_subcommand("verify", "Check the three axioms");
    add_spec(c_verify);
    c_verify->add_option("--product", product_arg, "Product JSON (inline or @file)")->required();
    c_verify->add_option("--radius", flag_radius, "Window radius (positive rank)");
    CLI::App* c_random = c_tpp->add_subcommand("random", "Seeded random parameter draws");
    add_spec(c_random);
    c_random->add_option("--trials", trials, "Number of draws")->capture_default_str();
    c_random->add_option("--seed", seed_flag, "Sampler seed (overrides the spec file)");
    c_random->add_option("--radius", flag_radius, "Window radius (positive rank)");
    CLI::App* c_tclassify = c_tpp->add_subcommand("classify", "Recover product parameters");
    add_spec(c_tclassify);
    c_tclassify->add_option("--product", product_arg, "Product JSON (inline or @file)")
        ->required();
    c_tclassify->add_option("--radius", flag_radius, "Window radius (positive rank)");

    CLI::App* c_homlie = app.add_subcommand("homlie", "Hom-Lie identity for a map");
    add_spec(c_homlie);
    c_homlie->add_option("--map", map_arg, "Map literal or JSON (inline or @file)")->required();
    c_homlie->add_flag("--literal-middle-term", literal_middle,
                       "Use the transcribed variant [phi(y),[z,y]] as the middle summand");
    c_homlie->add_option("--radius", flag_radius, "Window radius (positive rank)");

    CLI::App* c_report = app.add_subcommand("report", "Aggregate report for an instance");
    add_spec(c_report);
    c_report->add_option("--degrees", degrees, "Degree range a..b for windowed solves");
    c_report->add_option("--radius", flag_radius, "Window radius (positive rank)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        par::set_max_threads(g.threads);
        Instance inst = load_instance(spec_path);
        if (c_validate->parsed()) return cmd_validate(inst, g);
        if (c_classify->parsed()) return cmd_classify(inst, g);
        if (c_deriv->parsed()) return cmd_derivations(inst, g, degrees, flag_radius);
        if (c_verify->parsed()) return cmd_tpp_verify(inst, g, product_arg, flag_radius);
        if (c_random->parsed())
            return cmd_tpp_random(inst, g, trials, seed_flag, flag_radius);
        if (c_tclassify->parsed())
            return cmd_tpp_classify(inst, g, product_arg, flag_radius);
        if (c_homlie->parsed())
            return cmd_homlie(inst, g, map_arg, literal_middle, flag_radius);
        if (c_report->parsed()) return cmd_report(inst, g, degrees, flag_radius);
        std::cerr << "witt: no subcommand\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "witt: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "witt: internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "witt: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "witt: " << e.what() << "\n";
        return 2;
    }
}
