#pragma once

#include "witt/algebra.hpp"
#include "witt/group.hpp"
#include "witt/maps.hpp"
#include "witt/tpa.hpp"
#include "witt/wittfn.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace witt {

// A parsed spec file: the group, the Witt function, and optional window
// radius and sampler seed defaults.
struct Instance {
    GroupSpec spec;
    WittFunction f;
    std::optional<long long> radius;
    std::optional<std::uint64_t> seed;
};

// Parse a spec document: {"group":{"rank":R,"torsion":[...]},
// "f":{"kind":"table","values":{...}} or {"kind":"additive","gen_values":[...]},
// "window":{"radius":R} (optional), "seed":S (optional)}.
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

// Product document: {"variant":"mutation","b":"e0:1,e2:1/2"} |
// {"variant":"case2","b":"..."} | {"variant":"case3","b0":"...","b1":"...","b2":"..."} |
// {"variant":"table","entries":[["a","b","vector-literal"],...]}.
// case2/case3 classify f to obtain the partition.
Product parse_product_json(const WittFunction& f, const std::string& text);

// Map literal: "identity" | "shift:<elem>" | "shift:<elem>:<scalar>" |
// JSON {"parts":[{"degree":"<elem>","coeffs":{"<elem>":"<scalar>"}}]}.
// The named forms are materialized with explicit coefficients on `domain`;
// the JSON form is taken as written.
LinearMap parse_map_literal(const GroupSpec& spec, const std::string& text,
                            const std::vector<GroupElement>& domain);

// Report builders. All scalars are emitted as canonical literals and all
// numbers are integers, so serialization is deterministic.
nlohmann::json witness_json(const Witness& w);
nlohmann::json check_json(const CheckReport& r);
nlohmann::json group_json(const GroupSpec& spec);
nlohmann::json vector_json(const AlgebraVector& v);
nlohmann::json map_json(const LinearMap& m);
nlohmann::json report_envelope(const std::string& mode, const GroupSpec& spec);

// Render a report for the chosen format. JSON is dump(2) plus a newline;
// text is an indented key/value flattening carrying the same content.
std::string render_report(const nlohmann::json& rep, bool json_format);

// Structural validation mirroring schemas/report.schema.json: envelope keys,
// verdict vocabulary, witness shape, and the integers-only number rule.
// Returns human-readable problems; empty means valid.
std::vector<std::string> validate_report_structure(const nlohmann::json& rep);

} // namespace witt
