#include "witt/wittfn.hpp"

#include "witt/error.hpp"

#include <algorithm>
#include <set>

namespace witt {

WittFunction make_table_fn(GroupSpec spec, std::map<GroupElement, Scalar> table) {
    validate_spec(spec);
    if (!spec.finite()) throw input_error("table-kind f requires a finite group");
    WittFunction f;
    f.spec = std::move(spec);
    f.kind = FnKind::Table;
    f.table = std::move(table);
    std::vector<GroupElement> all = enumerate_group(f.spec);
    if (f.table.size() != all.size())
        throw input_error("table-kind f must assign exactly one value to each group element (" +
                          std::to_string(all.size()) + " expected, " +
                          std::to_string(f.table.size()) + " given)");
    for (const auto& e : all)
        if (f.table.find(e) == f.table.end())
            throw input_error("table-kind f is missing element " + elem_to_string(e));
    return f;
}

WittFunction make_additive_fn(GroupSpec spec, std::vector<Scalar> gen_values) {
    validate_spec(spec);
    if (gen_values.size() != static_cast<std::size_t>(spec.rank))
        throw input_error("additive-kind f needs exactly one generator value per free generator (" +
                          std::to_string(spec.rank) + " expected, " +
                          std::to_string(gen_values.size()) + " given)");
    WittFunction f;
    f.spec = std::move(spec);
    f.kind = FnKind::Additive;
    f.gen_values = std::move(gen_values);
    return f;
}

Scalar evaluate(const WittFunction& f, const GroupElement& a) {
    if (f.kind == FnKind::Table) {
        auto it = f.table.find(a);
        if (it == f.table.end())
            throw input_error("f is not defined at " + elem_to_string(a));
        return it->second;
    }
    // Additive: torsion generators map to 0, so only the free part contributes.
    Scalar v;
    for (std::size_t i = 0; i < f.gen_values.size(); ++i) {
        mpq_class n(static_cast<long>(a.free_part[i]));
        v += f.gen_values[i] * Scalar(mpq_class(n), mpq_class(0));
    }
    return v;
}

ValidationReport validate(const WittFunction& f) {
    ValidationReport rep;
    if (f.kind == FnKind::Additive) {
        // f(a) = sum n_i v_i satisfies f(a+b) = f(a) + f(b) identically, which
        // makes the defining equation vanish; f(0) = 0 by construction.
        rep.valid = true;
        rep.message = "additive function: defining identity holds symbolically";
        return rep;
    }
    const GroupElement zero = zero_element(f.spec);
    if (!(evaluate(f, zero) == Scalar(0))) {
        rep.valid = false;
        rep.f0_nonzero = true;
        rep.witness = std::make_pair(zero, zero);
        rep.message = "f(0) != 0; replace f by f - f(0) (the bracket only sees differences)";
        return rep;
    }
    std::vector<GroupElement> all = enumerate_group(f.spec);
    for (const auto& a : all) {
        Scalar fa = evaluate(f, a);
        for (const auto& b : all) {
            Scalar fb = evaluate(f, b);
            Scalar fab = evaluate(f, elem_add(f.spec, a, b));
            Scalar lhs = (fab - fa - fb) * (fa - fb);
            if (!lhs.is_zero()) {
                rep.valid = false;
                rep.witness = std::make_pair(a, b);
                rep.message = "defining equation fails at (" + elem_to_string(a) + ", " +
                              elem_to_string(b) + ")";
                return rep;
            }
        }
    }
    rep.valid = true;
    rep.message = "defining equation holds on all pairs";
    return rep;
}

SubgroupTable kernel(const WittFunction& f) {
    if (!f.spec.finite()) {
        GroupSpec spec = f.spec;
        WittFunction fc = f;
        return make_subgroup(
            spec, [fc](const GroupElement& e) { return evaluate(fc, e).is_zero(); },
            "kernel of f");
    }
    std::set<GroupElement> ker;
    std::vector<GroupElement> all = enumerate_group(f.spec);
    for (const auto& e : all)
        if (evaluate(f, e).is_zero()) ker.insert(e);
    SubgroupTable sub = make_subgroup(f.spec, std::move(ker));
    sub.description = "kernel of f";
    std::string why;
    if (!verify_subgroup(sub, &why))
        throw internal_error("kernel of a valid f must be a subgroup: " + why);
    // Re-check: a - b in Gamma_0 implies f(a) = f(b).
    for (const auto& a : all)
        for (const auto& b : all)
            if (sub.contains(elem_sub(f.spec, a, b)) && !(evaluate(f, a) == evaluate(f, b)))
                throw internal_error("kernel coset re-check failed at (" + elem_to_string(a) +
                                     ", " + elem_to_string(b) + ")");
    return sub;
}

const char* case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::Abelian: return "Abelian";
        case CaseTag::Two: return "Two";
        case CaseTag::Three: return "Three";
        case CaseTag::Big: return "Big";
    }
    return "?";
}

std::vector<Scalar> image_values(const WittFunction& f) {
    if (!f.spec.finite()) throw input_error("image_values requires a finite group");
    std::set<Scalar> img;
    for (const auto& e : enumerate_group(f.spec)) img.insert(evaluate(f, e));
    return std::vector<Scalar>(img.begin(), img.end());
}

CasePartition classify(const WittFunction& f) {
    ValidationReport v = validate(f);
    if (!v.valid) throw input_error("classify requires a valid f: " + v.message);

    CasePartition part;
    part.gamma0 = kernel(f);

    if (f.kind == FnKind::Additive) {
        bool all_zero = std::all_of(f.gen_values.begin(), f.gen_values.end(),
                                    [](const Scalar& s) { return s.is_zero(); });
        part.tag = all_zero ? CaseTag::Abelian : CaseTag::Big;
        // Nonzero additive f on Z^rank x T attains infinitely many values
        // (any nonzero generator value has all its integer multiples in the
        // image), so |f(Gamma)| >= 4 holds and additivity is structural.
        return part;
    }

    std::vector<Scalar> img = image_values(f);
    std::vector<GroupElement> all = enumerate_group(f.spec);
    if (img.size() == 1) {
        part.tag = CaseTag::Abelian;
        return part;
    }
    if (img.size() == 2) {
        part.tag = CaseTag::Two;
        for (const auto& s : img)
            if (!s.is_zero()) part.c = s;
        // Constancy off Gamma_0 is immediate from |image| = 2, but re-check.
        for (const auto& e : all)
            if (!part.gamma0.contains(e) && !(evaluate(f, e) == part.c))
                throw internal_error("two-value case: f not constant off its kernel");
        return part;
    }
    if (img.size() == 3) {
        part.tag = CaseTag::Three;
        // c := value at the first (lex order) element with f != 0; the
        // remaining nonzero value must be -c.
        for (const auto& e : all) {
            Scalar s = evaluate(f, e);
            if (!s.is_zero()) {
                part.c = s;
                break;
            }
        }
        for (const auto& s : img)
            if (!s.is_zero() && !(s == part.c) && !(s == -part.c))
                throw internal_error("three-value case: image is not {0, c, -c}");
        // tau: Gamma -> Z/3 with f = 0, c, -c on tau = 0, 1, 2.
        for (const auto& e : all) {
            Scalar s = evaluate(f, e);
            part.tau[e] = s.is_zero() ? 0 : (s == part.c ? 1 : 2);
        }
        // Re-check the imported fact that tau is a homomorphism.
        for (const auto& a : all)
            for (const auto& b : all)
                if (part.tau[elem_add(f.spec, a, b)] != (part.tau[a] + part.tau[b]) % 3)
                    throw internal_error("three-value case: tau is not a homomorphism at (" +
                                         elem_to_string(a) + ", " + elem_to_string(b) + ")");
        part.coset_reps.assign(3, zero_element(f.spec));
        for (int i = 0; i < 3; ++i) {
            bool found = false;
            for (const auto& e : all) {
                if (part.tau[e] == i) {
                    part.coset_reps[static_cast<std::size_t>(i)] = e;
                    found = true;
                    break;
                }
            }
            if (!found) throw internal_error("three-value case: tau is not surjective");
        }
        return part;
    }
    // |image| >= 4 on a finite group: the classification says f must be
    // additive, but a nonzero additive function cannot exist on a finite
    // group in characteristic 0. Re-check additivity and report loudly.
    for (const auto& a : all)
        for (const auto& b : all)
            if (!(evaluate(f, elem_add(f.spec, a, b)) == evaluate(f, a) + evaluate(f, b)))
                throw internal_error(
                    "valid f with |image| >= 4 on a finite group falsifies the imported "
                    "additivity fact at (" + elem_to_string(a) + ", " + elem_to_string(b) + ")");
    part.tag = CaseTag::Big;
    return part;
}

} // namespace witt
