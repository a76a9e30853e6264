#include "witt/group.hpp"

#include "witt/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace witt {

namespace {

long long mod_reduce(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

void check_shape(const GroupSpec& spec, const GroupElement& e) {
    if (e.free_part.size() != static_cast<std::size_t>(spec.rank) ||
        e.tors_part.size() != spec.torsion.size())
        throw input_error("group element has wrong number of coordinates");
}

} // namespace

unsigned long long GroupSpec::torsion_order() const {
    unsigned long long n = 1;
    for (long long m : torsion) {
        if (m <= 0) throw input_error("group spec: torsion entry must be >= 2");
        unsigned long long um = static_cast<unsigned long long>(m);
        if (n > (1ULL << 40) / um) throw input_error("group spec: torsion part too large to enumerate");
        n *= um;
    }
    return n;
}

void validate_spec(const GroupSpec& spec) {
    if (spec.rank < 0) throw input_error("group spec: rank must be >= 0");
    for (long long m : spec.torsion)
        if (m < 2) throw input_error("group spec: torsion entries must be >= 2");
}

bool GroupElement::is_zero() const {
    auto all0 = [](const std::vector<long long>& v) {
        return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
    };
    return all0(free_part) && all0(tors_part);
}

GroupElement zero_element(const GroupSpec& spec) {
    GroupElement e;
    e.free_part.assign(static_cast<std::size_t>(spec.rank), 0);
    e.tors_part.assign(spec.torsion.size(), 0);
    return e;
}

GroupElement elem_add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    check_shape(spec, a);
    check_shape(spec, b);
    GroupElement r = a;
    for (std::size_t i = 0; i < r.free_part.size(); ++i) r.free_part[i] += b.free_part[i];
    for (std::size_t i = 0; i < r.tors_part.size(); ++i)
        r.tors_part[i] = mod_reduce(r.tors_part[i] + b.tors_part[i], spec.torsion[i]);
    return r;
}

GroupElement elem_neg(const GroupSpec& spec, const GroupElement& a) {
    check_shape(spec, a);
    GroupElement r = a;
    for (auto& x : r.free_part) x = -x;
    for (std::size_t i = 0; i < r.tors_part.size(); ++i)
        r.tors_part[i] = mod_reduce(-r.tors_part[i], spec.torsion[i]);
    return r;
}

GroupElement elem_sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    return elem_add(spec, a, elem_neg(spec, b));
}

GroupElement elem_mul(const GroupSpec& spec, const GroupElement& a, long long n) {
    check_shape(spec, a);
    GroupElement r = a;
    for (auto& x : r.free_part) x *= n;
    for (std::size_t i = 0; i < r.tors_part.size(); ++i)
        r.tors_part[i] = mod_reduce(r.tors_part[i] * mod_reduce(n, spec.torsion[i]), spec.torsion[i]);
    return r;
}

std::string elem_to_string(const GroupElement& e) {
    std::string out;
    bool first = true;
    auto emit = [&](long long x) {
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
    };
    for (long long x : e.free_part) emit(x);
    for (long long x : e.tors_part) emit(x);
    if (first) out = ""; // zero-component group: empty literal
    return out;
}

GroupElement parse_element(const GroupSpec& spec, std::string_view s) {
    std::vector<long long> comps;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        std::string_view tok = s.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                            : next - pos);
        if (tok.empty() && spec.components() == 0 && comps.empty() && next == std::string_view::npos)
            break;
        if (tok.empty()) throw input_error("element literal: empty coordinate");
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(std::string(tok), &used);
        } catch (const std::exception&) {
            throw input_error("element literal: bad integer '" + std::string(tok) + "'");
        }
        if (used != tok.size()) throw input_error("element literal: bad integer '" + std::string(tok) + "'");
        comps.push_back(v);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    if (comps.size() != spec.components())
        throw input_error("element literal: expected " + std::to_string(spec.components()) +
                          " coordinates, got " + std::to_string(comps.size()));
    GroupElement e;
    e.free_part.assign(comps.begin(), comps.begin() + spec.rank);
    e.tors_part.assign(comps.begin() + spec.rank, comps.end());
    for (std::size_t i = 0; i < e.tors_part.size(); ++i)
        e.tors_part[i] = mod_reduce(e.tors_part[i], spec.torsion[i]);
    return e;
}

namespace {

// Odometer over per-component value lists, most significant component first,
// yielding ascending lexicographic order.
std::vector<GroupElement> odometer(const GroupSpec& spec,
                                   const std::vector<std::vector<long long>>& values) {
    std::vector<GroupElement> out;
    std::vector<std::size_t> idx(values.size(), 0);
    const std::size_t n = values.size();
    while (true) {
        GroupElement e;
        e.free_part.reserve(static_cast<std::size_t>(spec.rank));
        e.tors_part.reserve(spec.torsion.size());
        for (std::size_t i = 0; i < n; ++i) {
            long long v = values[i][idx[i]];
            if (i < static_cast<std::size_t>(spec.rank)) e.free_part.push_back(v);
            else e.tors_part.push_back(v);
        }
        out.push_back(std::move(e));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] < values[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out; // trivial group: single element
    }
}

} // namespace

std::vector<GroupElement> enumerate_group(const GroupSpec& spec) {
    validate_spec(spec);
    if (!spec.finite()) throw input_error("cannot enumerate an infinite group");
    spec.torsion_order(); // size guard
    std::vector<std::vector<long long>> values;
    for (long long m : spec.torsion) {
        std::vector<long long> v(static_cast<std::size_t>(m));
        for (long long j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = j;
        values.push_back(std::move(v));
    }
    return odometer(spec, values);
}

std::vector<GroupElement> window_elements(const GroupSpec& spec, long long radius) {
    validate_spec(spec);
    if (radius < 0) throw input_error("window radius must be >= 0");
    unsigned long long total = spec.torsion_order();
    for (int i = 0; i < spec.rank; ++i) {
        unsigned long long w = 2ULL * static_cast<unsigned long long>(radius) + 1ULL;
        if (total > (1ULL << 40) / w) throw input_error("window too large to enumerate");
        total *= w;
    }
    std::vector<std::vector<long long>> values;
    for (int i = 0; i < spec.rank; ++i) {
        std::vector<long long> v;
        for (long long x = -radius; x <= radius; ++x) v.push_back(x);
        values.push_back(std::move(v));
    }
    for (long long m : spec.torsion) {
        std::vector<long long> v(static_cast<std::size_t>(m));
        for (long long j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = j;
        values.push_back(std::move(v));
    }
    return odometer(spec, values);
}

long long free_max_norm(const GroupElement& e) {
    long long n = 0;
    for (long long x : e.free_part) n = std::max(n, std::llabs(x));
    return n;
}

bool in_window(const GroupElement& e, long long radius) {
    return free_max_norm(e) <= radius;
}

bool SubgroupTable::contains(const GroupElement& e) const {
    if (materialized) return elements.count(e) > 0;
    return predicate(e);
}

SubgroupTable make_subgroup(const GroupSpec& spec, std::set<GroupElement> elements) {
    SubgroupTable t;
    t.spec = spec;
    t.materialized = true;
    t.elements = std::move(elements);
    return t;
}

SubgroupTable make_subgroup(const GroupSpec& spec, std::function<bool(const GroupElement&)> pred,
                            std::string description) {
    SubgroupTable t;
    t.spec = spec;
    t.materialized = false;
    t.predicate = std::move(pred);
    t.description = std::move(description);
    return t;
}

bool verify_subgroup(const SubgroupTable& sub, std::string* why) {
    if (!sub.materialized) throw internal_error("verify_subgroup requires a materialized subgroup");
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (sub.elements.count(zero_element(sub.spec)) == 0) return fail("missing zero");
    for (const auto& a : sub.elements) {
        if (sub.elements.count(elem_neg(sub.spec, a)) == 0)
            return fail("not closed under negation at " + elem_to_string(a));
        for (const auto& b : sub.elements)
            if (sub.elements.count(elem_add(sub.spec, a, b)) == 0)
                return fail("not closed under addition at " + elem_to_string(a) + " + " +
                            elem_to_string(b));
    }
    return true;
}

std::vector<Coset> coset_decompose(const GroupSpec& spec, const SubgroupTable& sub) {
    if (!spec.finite()) throw input_error("coset decomposition requires a finite group");
    std::vector<GroupElement> all = enumerate_group(spec);
    std::set<GroupElement> assigned;
    std::vector<Coset> out;
    for (const auto& e : all) {
        if (assigned.count(e)) continue;
        Coset c;
        c.representative = e; // lex-least: elements scanned in ascending order
        for (const auto& x : all)
            if (!assigned.count(x) && sub.contains(elem_sub(spec, x, e))) c.elements.push_back(x);
        for (const auto& x : c.elements) assigned.insert(x);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace witt
