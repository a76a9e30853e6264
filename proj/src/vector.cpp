#include "witt/vector.hpp"

#include "witt/error.hpp"

namespace witt {

void add_term(AlgebraVector& v, const GroupElement& a, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

AlgebraVector vec_add(const AlgebraVector& x, const AlgebraVector& y) {
    AlgebraVector r = x;
    for (const auto& [a, c] : y) add_term(r, a, c);
    return r;
}

AlgebraVector vec_sub(const AlgebraVector& x, const AlgebraVector& y) {
    AlgebraVector r = x;
    for (const auto& [a, c] : y) add_term(r, a, -c);
    return r;
}

AlgebraVector vec_scale(const Scalar& c, const AlgebraVector& x) {
    AlgebraVector r;
    if (c.is_zero()) return r;
    for (const auto& [a, v] : x) r.emplace(a, c * v);
    return r;
}

bool vec_is_zero(const AlgebraVector& x) {
    return x.empty();
}

AlgebraVector group_algebra_mul(const GroupSpec& spec, const AlgebraVector& x,
                                const AlgebraVector& y) {
    AlgebraVector r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) add_term(r, elem_add(spec, a, b), ca * cb);
    return r;
}

AlgebraVector vec_shift(const GroupSpec& spec, const AlgebraVector& x, const GroupElement& g) {
    AlgebraVector r;
    for (const auto& [a, c] : x) r.emplace(elem_add(spec, a, g), c);
    return r;
}

std::string vec_to_string(const AlgebraVector& v) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : v) {
        if (!first) out += ',';
        out += 'e';
        out += elem_to_string(a);
        out += ':';
        out += c.str();
        first = false;
    }
    return out;
}

AlgebraVector parse_vector(const GroupSpec& spec, std::string_view s) {
    AlgebraVector v;
    if (s == "0" || s.empty()) return v;
    // Terms are separated by a comma immediately followed by 'e'. Element
    // literals contain commas and digits but never 'e'; scalar literals never
    // contain commas. This makes the split unambiguous.
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.size();
        for (std::size_t k = pos; k + 1 < s.size(); ++k) {
            if (s[k] == ',' && s[k + 1] == 'e') {
                end = k;
                break;
            }
        }
        std::string_view term = s.substr(pos, end - pos);
        if (term.empty() || term[0] != 'e')
            throw input_error("vector literal: term must start with 'e' in '" + std::string(s) + "'");
        std::size_t colon = term.rfind(':');
        if (colon == std::string_view::npos)
            throw input_error("vector literal: missing ':' in term '" + std::string(term) + "'");
        GroupElement a = parse_element(spec, term.substr(1, colon - 1));
        Scalar c = Scalar::parse(term.substr(colon + 1));
        add_term(v, a, c);
        pos = end == s.size() ? end : end + 1;
    }
    return v;
}

} // namespace witt
