#include "witt/io.hpp"

#include "witt/error.hpp"
#include "witt/vector.hpp"
#include "witt/version.hpp"

#include <fstream>
#include <sstream>

namespace witt {

using nlohmann::json;

namespace {

json parse_json_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error(std::string("malformed JSON in ") + what);
    return j;
}

const json& require_field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw input_error(std::string(what) + ": missing \"" + key + "\"");
    return *it;
}

long long require_integer(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string(what) + ": expected an integer");
    return j.get<long long>();
}

std::string require_string(const json& j, const char* what) {
    if (!j.is_string())
        throw input_error(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

GroupSpec parse_group_fragment(const json& g) {
    if (!g.is_object()) throw input_error("\"group\": expected an object");
    GroupSpec spec;
    spec.rank = require_integer(require_field(g, "rank", "\"group\""), "\"group.rank\"");
    if (auto it = g.find("torsion"); it != g.end()) {
        if (!it->is_array()) throw input_error("\"group.torsion\": expected an array");
        for (const auto& m : *it)
            spec.torsion.push_back(require_integer(m, "\"group.torsion\" entry"));
    }
    validate_spec(spec);
    return spec;
}

WittFunction parse_f_fragment(const GroupSpec& spec, const json& f) {
    if (!f.is_object()) throw input_error("\"f\": expected an object");
    std::string kind = require_string(require_field(f, "kind", "\"f\""), "\"f.kind\"");
    if (kind == "table") {
        const json& values = require_field(f, "values", "\"f\"");
        if (!values.is_object()) throw input_error("\"f.values\": expected an object");
        std::map<GroupElement, Scalar> table;
        for (const auto& [k, v] : values.items())
            table.emplace(parse_element(spec, k),
                          Scalar::parse(require_string(v, "\"f.values\" entry")));
        return make_table_fn(spec, table);
    }
    if (kind == "additive") {
        const json& gv = require_field(f, "gen_values", "\"f\"");
        if (!gv.is_array()) throw input_error("\"f.gen_values\": expected an array");
        std::vector<Scalar> gen_values;
        for (const auto& v : gv)
            gen_values.push_back(Scalar::parse(require_string(v, "\"f.gen_values\" entry")));
        return make_additive_fn(spec, gen_values);
    }
    throw input_error("\"f.kind\": expected \"table\" or \"additive\"");
}

} // namespace

Instance parse_instance_text(const std::string& text) {
    json j = parse_json_text(text, "spec document");
    if (!j.is_object()) throw input_error("spec document: expected an object");
    Instance inst;
    inst.spec = parse_group_fragment(require_field(j, "group", "spec document"));
    inst.f = parse_f_fragment(inst.spec, require_field(j, "f", "spec document"));
    if (auto it = j.find("window"); it != j.end()) {
        if (!it->is_object()) throw input_error("\"window\": expected an object");
        long long r = require_integer(require_field(*it, "radius", "\"window\""),
                                      "\"window.radius\"");
        if (r <= 0) throw input_error("\"window.radius\": expected a positive integer");
        inst.radius = r;
    }
    if (auto it = j.find("seed"); it != j.end()) {
        long long s = require_integer(*it, "\"seed\"");
        if (s < 0) throw input_error("\"seed\": expected a nonnegative integer");
        inst.seed = static_cast<std::uint64_t>(s);
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

Product parse_product_json(const WittFunction& f, const std::string& text) {
    json j = parse_json_text(text, "product document");
    if (!j.is_object()) throw input_error("product document: expected an object");
    std::string variant =
        require_string(require_field(j, "variant", "product document"), "\"variant\"");
    if (variant == "mutation") {
        return mutation_product(
            f.spec, parse_vector(f.spec, require_string(require_field(j, "b", "product"), "\"b\"")));
    }
    if (variant == "case2") {
        CasePartition part = classify(f);
        return case2_product(
            f, part, parse_vector(f.spec, require_string(require_field(j, "b", "product"), "\"b\"")));
    }
    if (variant == "case3") {
        CasePartition part = classify(f);
        AlgebraVector b[3];
        const char* keys[3] = {"b0", "b1", "b2"};
        for (int i = 0; i < 3; ++i)
            b[i] = parse_vector(f.spec,
                                require_string(require_field(j, keys[i], "product"), keys[i]));
        return case3_product(f, part, b[0], b[1], b[2]);
    }
    if (variant == "table") {
        const json& entries = require_field(j, "entries", "product");
        if (!entries.is_array()) throw input_error("\"entries\": expected an array");
        std::map<std::pair<GroupElement, GroupElement>, AlgebraVector> table;
        for (const auto& e : entries) {
            if (!e.is_array() || e.size() != 3)
                throw input_error("\"entries\": expected [elem, elem, vector] triples");
            GroupElement a = parse_element(f.spec, require_string(e[0], "entry element"));
            GroupElement bb = parse_element(f.spec, require_string(e[1], "entry element"));
            table[std::make_pair(a, bb)] =
                parse_vector(f.spec, require_string(e[2], "entry vector"));
        }
        return table_product(f.spec, std::move(table));
    }
    throw input_error("\"variant\": expected mutation, case2, case3, or table");
}

LinearMap parse_map_literal(const GroupSpec& spec, const std::string& text,
                            const std::vector<GroupElement>& domain) {
    if (text == "identity") return shift_map(spec, zero_element(spec), Scalar(1), domain);
    if (text.rfind("shift:", 0) == 0) {
        std::string rest = text.substr(6);
        std::size_t colon = rest.find(':');
        GroupElement deg = parse_element(spec, colon == std::string::npos
                                                   ? rest
                                                   : rest.substr(0, colon));
        Scalar c = colon == std::string::npos ? Scalar(1)
                                              : Scalar::parse(rest.substr(colon + 1));
        return shift_map(spec, deg, c, domain);
    }
    if (!text.empty() && text.front() == '{') {
        json j = parse_json_text(text, "map document");
        const json& parts = require_field(j, "parts", "map document");
        if (!parts.is_array()) throw input_error("\"parts\": expected an array");
        LinearMap m;
        for (const auto& p : parts) {
            GradedMap gm;
            gm.degree =
                parse_element(spec, require_string(require_field(p, "degree", "map part"),
                                                   "\"degree\""));
            const json& coeffs = require_field(p, "coeffs", "map part");
            if (!coeffs.is_object()) throw input_error("\"coeffs\": expected an object");
            for (const auto& [k, v] : coeffs.items())
                gm.coeffs[parse_element(spec, k)] =
                    Scalar::parse(require_string(v, "\"coeffs\" entry"));
            m.parts.push_back(std::move(gm));
        }
        canonicalize_map(m);
        return m;
    }
    throw input_error("map literal: expected \"identity\", \"shift:<elem>[:<scalar>]\", "
                      "or a JSON map document");
}

json witness_json(const Witness& w) {
    json out = json::object();
    json elems = json::array();
    for (const auto& e : w.elems) elems.push_back(elem_to_string(e));
    out["elements"] = std::move(elems);
    if (!w.note.empty()) out["note"] = w.note;
    return out;
}

json check_json(const CheckReport& r) {
    json out = json::object();
    out["verdict"] = verdict_name(r.verdict);
    out["checked"] = r.checked;
    out["skipped"] = r.skipped;
    if (r.witness) out["witness"] = witness_json(*r.witness);
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

json group_json(const GroupSpec& spec) {
    json out = json::object();
    out["rank"] = spec.rank;
    out["torsion"] = spec.torsion;
    return out;
}

json vector_json(const AlgebraVector& v) { return vec_to_string(v); }

json map_json(const LinearMap& m) {
    json parts = json::array();
    for (const auto& p : m.parts) {
        json coeffs = json::object();
        for (const auto& [a, c] : p.coeffs) coeffs[elem_to_string(a)] = c.str();
        json part = json::object();
        part["degree"] = elem_to_string(p.degree);
        part["coeffs"] = std::move(coeffs);
        parts.push_back(std::move(part));
    }
    json out = json::object();
    out["parts"] = std::move(parts);
    return out;
}

json report_envelope(const std::string& mode, const GroupSpec& spec) {
    json out = json::object();
    out["tool"] = kToolName;
    out["version"] = kVersion;
    out["mode"] = mode;
    out["group"] = group_json(spec);
    return out;
}

namespace {

void render_text_node(const json& j, int indent, std::ostringstream& out) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                out << pad << k << ":\n";
                render_text_node(v, indent + 1, out);
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out << pad << "-\n";
                render_text_node(v, indent + 1, out);
            } else {
                out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

std::string render_report(const json& rep, bool json_format) {
    if (json_format) return rep.dump(2) + "\n";
    std::ostringstream out;
    render_text_node(rep, 0, out);
    return out.str();
}

namespace {

void walk_structure(const json& j, const std::string& path, std::vector<std::string>& problems) {
    if (j.is_number_float())
        problems.push_back(path + ": floating-point number; reports carry integers only");
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string sub = path + "/" + k;
            if (k == "verdict") {
                std::string s = v.is_string() ? v.get<std::string>() : "";
                if (s != "pass" && s != "fail" && s != "inconclusive")
                    problems.push_back(sub + ": verdict must be pass, fail, or inconclusive");
            }
            if (k == "witness") {
                if (!v.is_object() || !v.contains("elements") || !v["elements"].is_array())
                    problems.push_back(sub + ": witness must carry an \"elements\" array");
                else
                    for (const auto& e : v["elements"])
                        if (!e.is_string())
                            problems.push_back(sub + ": witness elements must be strings");
            }
            walk_structure(v, sub, problems);
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) walk_structure(v, path + "/" + std::to_string(i++), problems);
    }
}

} // namespace

std::vector<std::string> validate_report_structure(const json& rep) {
    std::vector<std::string> problems;
    if (!rep.is_object()) {
        problems.push_back("report root must be an object");
        return problems;
    }
    if (!rep.contains("tool") || !rep["tool"].is_string() ||
        rep["tool"].get<std::string>() != kToolName)
        problems.push_back("/tool: must be the string \"witt\"");
    if (!rep.contains("version") || !rep["version"].is_string())
        problems.push_back("/version: must be a string");
    if (!rep.contains("mode") || !rep["mode"].is_string() ||
        rep["mode"].get<std::string>().empty())
        problems.push_back("/mode: must be a nonempty string");
    walk_structure(rep, "", problems);
    return problems;
}

} // namespace witt
