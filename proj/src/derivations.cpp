#include "witt/derivations.hpp"

#include "witt/error.hpp"
#include "witt/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace witt {

namespace {

const Scalar& coeff_at(const GradedMap& d, const GroupElement& a) {
    auto it = d.coeffs.find(a);
    if (it == d.coeffs.end())
        throw domain_error("coefficient table for degree " + elem_to_string(d.degree) +
                           " is undefined at " + elem_to_string(a));
    return it->second;
}

AlgebraVector basis_vec(const GroupElement& a) {
    AlgebraVector v;
    v.emplace(a, Scalar(1));
    return v;
}

} // namespace

Scalar homogeneous_residual(const WittFunction& f, const GradedMap& d, const GroupElement& a,
                            const GroupElement& b) {
    const GroupSpec& spec = f.spec;
    GroupElement ab = elem_add(spec, a, b);
    Scalar fa = evaluate(f, a), fb = evaluate(f, b);
    Scalar fag = evaluate(f, elem_add(spec, a, d.degree));
    Scalar fbg = evaluate(f, elem_add(spec, b, d.degree));
    Scalar two(2);
    return two * (fb - fa) * coeff_at(d, ab) - (fb - fag) * coeff_at(d, a) -
           (fbg - fa) * coeff_at(d, b);
}

CheckReport is_delta_derivation(const WittFunction& f, const LinearMap& phi, const Scalar& delta,
                                const std::vector<GroupElement>& domain) {
    const GroupSpec& spec = f.spec;
    const std::size_t n = domain.size();
    auto fn = [&](std::size_t idx) -> par::Outcome {
        const GroupElement& a = domain[idx / n];
        const GroupElement& b = domain[idx % n];
        GroupElement ab = elem_add(spec, a, b);
        auto pa = apply_basis(phi, spec, a);
        auto pb = apply_basis(phi, spec, b);
        auto pab = apply_basis(phi, spec, ab);
        if (!pa || !pb || !pab) return par::Outcome::Skip;
        Scalar c = evaluate(f, b) - evaluate(f, a); // [e_a, e_b] = c e_{a+b}
        AlgebraVector lhs = vec_scale(c, *pab);
        AlgebraVector rhs = vec_scale(
            delta, vec_add(bracket(f, *pa, basis_vec(b)), bracket(f, basis_vec(a), *pb)));
        return lhs == rhs ? par::Outcome::Ok : par::Outcome::Violation;
    };
    par::ScanResult s = par::scan(n * n, fn);
    CheckReport rep;
    rep.checked = s.checked;
    rep.skipped = s.skipped;
    if (s.first_violation) {
        std::size_t idx = *s.first_violation;
        rep.verdict = Verdict::Fail;
        rep.witness = Witness{{domain[idx / n], domain[idx % n]},
                              "phi([x,y]) != delta([phi(x),y] + [x,phi(y)])"};
    } else if (rep.checked == 0 || rep.skipped > 0) {
        rep.verdict = Verdict::Inconclusive;
        rep.detail = rep.checked == 0 ? "no checkable pairs"
                                      : "window shortfall: " + std::to_string(rep.skipped) +
                                            " pairs outside the stored coefficient domain";
    } else {
        rep.verdict = Verdict::Pass;
    }
    return rep;
}

LinearMap SolutionSpace::to_map(const GroupSpec& spec, std::size_t k) const {
    if (k >= basis.size()) throw internal_error("solution space: basis index out of range");
    (void)spec;
    const Row& row = basis[k];
    // Degrees with any nonzero coefficient become parts; every part carries
    // explicit entries (zeros included) for all of its solve-domain elements.
    std::set<GroupElement> live;
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        if (!row[j].is_zero()) live.insert(unknowns[j].first);
    LinearMap m;
    for (const auto& g : live) {
        GradedMap part;
        part.degree = g;
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            if (unknowns[j].first == g) part.coeffs.emplace(unknowns[j].second, row[j]);
        m.parts.push_back(std::move(part));
    }
    return m;
}

SolutionSpace solve_halfder_space(const WittFunction& f) {
    if (!f.spec.finite()) throw input_error("exact solve requires a finite group; use the windowed solver");
    ValidationReport v = validate(f);
    if (!v.valid) throw input_error("solve requires a valid f: " + v.message);

    std::vector<GroupElement> elems = enumerate_group(f.spec);
    const std::size_t n = elems.size();

    SolutionSpace out;
    if (image_values(f).size() == 1) {
        // Abelian bracket: the half-derivation condition is vacuous.
        out.abelian_all_maps = true;
        return out;
    }

    std::map<GroupElement, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos.emplace(elems[i], i);
    out.unknowns.reserve(n * n);
    for (const auto& g : elems)
        for (const auto& a : elems) out.unknowns.emplace_back(g, a);

    Matrix m;
    m.cols = n * n;
    Scalar two(2);
    for (std::size_t gi = 0; gi < n; ++gi) {
        const GroupElement& g = elems[gi];
        for (const auto& a : elems) {
            for (const auto& b : elems) {
                Row row(m.cols, Scalar(0));
                GroupElement ab = elem_add(f.spec, a, b);
                Scalar fa = evaluate(f, a), fb = evaluate(f, b);
                Scalar fag = evaluate(f, elem_add(f.spec, a, g));
                Scalar fbg = evaluate(f, elem_add(f.spec, b, g));
                std::size_t base = gi * n;
                row[base + pos[ab]] += two * (fb - fa);
                row[base + pos[a]] += -(fb - fag);
                row[base + pos[b]] += -(fbg - fa);
                bool nonzero = false;
                for (const Scalar& x : row)
                    if (!x.is_zero()) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) m.add_row(std::move(row));
            }
        }
    }
    out.basis = nullspace(std::move(m));
    return out;
}

std::vector<DegreeSolve> solve_halfder_space_windowed(const WittFunction& f,
                                                      const std::vector<GroupElement>& degrees,
                                                      long long radius) {
    ValidationReport v = validate(f);
    if (!v.valid) throw input_error("solve requires a valid f: " + v.message);
    std::vector<GroupElement> w = window_elements(f.spec, radius);
    std::map<GroupElement, std::size_t> pos;
    for (std::size_t i = 0; i < w.size(); ++i) pos.emplace(w[i], i);

    std::vector<DegreeSolve> out;
    Scalar two(2);
    for (const auto& g : degrees) {
        DegreeSolve ds;
        ds.degree = g;
        for (const auto& a : w) ds.space.unknowns.emplace_back(g, a);

        Matrix m;
        m.cols = w.size();
        for (const auto& a : w) {
            for (const auto& b : w) {
                GroupElement ab = elem_add(f.spec, a, b);
                auto it = pos.find(ab);
                if (it == pos.end()) continue; // a+b escapes the window
                Row row(m.cols, Scalar(0));
                Scalar fa = evaluate(f, a), fb = evaluate(f, b);
                Scalar fag = evaluate(f, elem_add(f.spec, a, g));
                Scalar fbg = evaluate(f, elem_add(f.spec, b, g));
                row[it->second] += two * (fb - fa);
                row[pos[a]] += -(fb - fag);
                row[pos[b]] += -(fbg - fa);
                bool nonzero = false;
                for (const Scalar& x : row)
                    if (!x.is_zero()) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) m.add_row(std::move(row));
            }
        }
        ds.equations = m.rows.size();

        if (radius < 2 * free_max_norm(g)) {
            ds.underconstrained = true;
            ds.flags.push_back("radius " + std::to_string(radius) + " < 2*|degree| = " +
                               std::to_string(2 * free_max_norm(g)) + " (padding heuristic)");
        }
        // Constancy-lemma hypothesis: an index a with f(a) = f(g) and
        // f(a+g) = 2 f(g) is pinned only through an auxiliary b with
        // f(b) outside {0, f(g), 2 f(g)} and a+b still in-window.
        Scalar fg = evaluate(f, g);
        for (const auto& a : w) {
            if (!(evaluate(f, a) == fg)) continue;
            if (!(evaluate(f, elem_add(f.spec, a, g)) == two * fg)) continue;
            bool witnessed = false;
            for (const auto& b : w) {
                Scalar fb = evaluate(f, b);
                if (fb.is_zero() || fb == fg || fb == two * fg) continue;
                if (pos.count(elem_add(f.spec, a, b))) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) {
                ds.hypothesis_witnessable = false;
                ds.underconstrained = true;
                ds.flags.push_back("auxiliary element for index " + elem_to_string(a) +
                                   " not witnessable in-window");
                break;
            }
        }
        if (ds.equations == 0) {
            ds.underconstrained = true;
            ds.flags.push_back("no constraining pairs");
        }

        ds.space.basis = nullspace(std::move(m));
        out.push_back(std::move(ds));
    }
    return out;
}

std::vector<FamilyMember> classified_basis(const WittFunction& f, const CasePartition& part,
                                           const std::vector<GroupElement>& domain,
                                           const std::vector<GroupElement>& degrees) {
    std::vector<FamilyMember> fam;
    switch (part.tag) {
        case CaseTag::Abelian:
            throw input_error("abelian instance: every linear map is a half-derivation, "
                              "no finite classified family");
        case CaseTag::Two: {
            for (const auto& g : enumerate_group(f.spec)) {
                FamilyMember fm;
                fm.degree = g;
                if (part.gamma0.contains(g)) {
                    fm.restricted = false;
                    fm.map = shift_map(f.spec, g, Scalar(1), domain);
                } else {
                    fm.restricted = true;
                    const SubgroupTable& g0 = part.gamma0;
                    fm.map = restricted_shift_map(f.spec, g, Scalar(1), domain,
                                                  [&g0](const GroupElement& a) {
                                                      return g0.contains(a);
                                                  });
                }
                fam.push_back(std::move(fm));
            }
            break;
        }
        case CaseTag::Three: {
            for (const auto& g : enumerate_group(f.spec)) {
                if (!part.gamma0.contains(g)) continue;
                FamilyMember fm;
                fm.degree = g;
                fm.map = shift_map(f.spec, g, Scalar(1), domain);
                fam.push_back(std::move(fm));
            }
            break;
        }
        case CaseTag::Big: {
            for (const auto& g : degrees) {
                FamilyMember fm;
                fm.degree = g;
                fm.map = shift_map(f.spec, g, Scalar(1), domain);
                fam.push_back(std::move(fm));
            }
            break;
        }
    }
    return fam;
}

ComparisonReport compare_spaces(const SolutionSpace& solved,
                                const std::vector<FamilyMember>& family) {
    ComparisonReport rep;
    rep.solved_dim = solved.dim();
    rep.family_dim = family.size();

    std::map<std::pair<GroupElement, GroupElement>, std::size_t> pos;
    for (std::size_t j = 0; j < solved.unknowns.size(); ++j) pos.emplace(solved.unknowns[j], j);

    std::vector<Row> fam_rows;
    for (const auto& fm : family) {
        Row row(solved.unknowns.size(), Scalar(0));
        for (const auto& part : fm.map.parts) {
            for (const auto& [a, c] : part.coeffs) {
                auto it = pos.find(std::make_pair(part.degree, a));
                if (it == pos.end()) {
                    if (!c.is_zero()) {
                        rep.detail = "family map of degree " + elem_to_string(fm.degree) +
                                     " has a nonzero coefficient at " + elem_to_string(a) +
                                     " outside the solved unknown set";
                        rep.equal = false;
                        return rep;
                    }
                    continue;
                }
                row[it->second] = c;
            }
        }
        fam_rows.push_back(std::move(row));
    }

    SpanCompare sc = compare_spans(fam_rows, solved.basis, solved.unknowns.size());
    rep.family_in_solved = sc.a_in_b;
    rep.solved_in_family = sc.b_in_a;
    rep.equal = sc.equal;
    if (!sc.a_in_b && sc.witness_a)
        rep.detail = "family member #" + std::to_string(*sc.witness_a) +
                     " (degree " + elem_to_string(family[*sc.witness_a].degree) +
                     ") is not in the solved space";
    else if (!sc.b_in_a && sc.witness_b)
        rep.detail = "solved basis vector #" + std::to_string(*sc.witness_b) +
                     " is not in the classified family span";
    return rep;
}

} // namespace witt
