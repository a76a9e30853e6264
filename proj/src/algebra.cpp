#include "witt/algebra.hpp"

#include "witt/error.hpp"
#include "witt/parallel.hpp"

#include <set>

namespace witt {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::pair<Scalar, GroupElement> bracket_basis(const WittFunction& f, const GroupElement& a,
                                              const GroupElement& b) {
    Scalar c = evaluate(f, b) - evaluate(f, a);
    return {c, elem_add(f.spec, a, b)};
}

AlgebraVector bracket(const WittFunction& f, const AlgebraVector& x, const AlgebraVector& y) {
    AlgebraVector r;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            auto [c, ab] = bracket_basis(f, a, b);
            add_term(r, ab, ca * cb * c);
        }
    }
    return r;
}

namespace {

AlgebraVector basis_vec(const GroupElement& a) {
    AlgebraVector v;
    v.emplace(a, Scalar(1));
    return v;
}

} // namespace

CheckReport verify_jacobi(const WittFunction& f, const std::vector<GroupElement>& domain) {
    const std::size_t n = domain.size();
    const std::size_t total = n * n * n;
    auto fn = [&](std::size_t idx) -> par::Outcome {
        const GroupElement& a = domain[idx / (n * n)];
        const GroupElement& b = domain[(idx / n) % n];
        const GroupElement& c = domain[idx % n];
        AlgebraVector va = basis_vec(a), vb = basis_vec(b), vc = basis_vec(c);
        AlgebraVector j = bracket(f, bracket(f, va, vb), vc);
        j = vec_add(j, bracket(f, bracket(f, vb, vc), va));
        j = vec_add(j, bracket(f, bracket(f, vc, va), vb));
        return vec_is_zero(j) ? par::Outcome::Ok : par::Outcome::Violation;
    };
    par::ScanResult s = par::scan(total, fn);
    CheckReport rep;
    rep.checked = s.checked;
    rep.skipped = s.skipped;
    if (s.first_violation) {
        std::size_t idx = *s.first_violation;
        rep.verdict = Verdict::Fail;
        rep.witness = Witness{{domain[idx / (n * n)], domain[(idx / n) % n], domain[idx % n]},
                              "Jacobi sum nonzero on basis triple"};
        rep.detail = "Jacobi identity fails";
    } else if (total == 0) {
        rep.verdict = Verdict::Inconclusive;
        rep.detail = "empty domain";
    } else {
        rep.verdict = Verdict::Pass;
        rep.detail = "Jacobi identity holds on all " + std::to_string(total) + " basis triples";
    }
    return rep;
}

CheckReport verify_antisymmetry(const WittFunction& f, const std::vector<GroupElement>& domain) {
    const std::size_t n = domain.size();
    auto fn = [&](std::size_t idx) -> par::Outcome {
        const GroupElement& a = domain[idx / n];
        const GroupElement& b = domain[idx % n];
        AlgebraVector lhs = bracket(f, basis_vec(a), basis_vec(b));
        AlgebraVector rhs = vec_scale(Scalar(-1), bracket(f, basis_vec(b), basis_vec(a)));
        return lhs == rhs ? par::Outcome::Ok : par::Outcome::Violation;
    };
    par::ScanResult s = par::scan(n * n, fn);
    CheckReport rep;
    rep.checked = s.checked;
    rep.skipped = s.skipped;
    if (s.first_violation) {
        std::size_t idx = *s.first_violation;
        rep.verdict = Verdict::Fail;
        rep.witness = Witness{{domain[idx / n], domain[idx % n]}, "[x,y] != -[y,x]"};
    } else {
        rep.verdict = n == 0 ? Verdict::Inconclusive : Verdict::Pass;
    }
    return rep;
}

std::vector<GroupElement> check_domain(const WittFunction& f, long long radius) {
    if (f.spec.finite()) return enumerate_group(f.spec);
    return window_elements(f.spec, radius);
}

std::vector<GroupElement> padded_domain(const GroupSpec& spec,
                                        const std::vector<GroupElement>& domain) {
    std::set<GroupElement> out(domain.begin(), domain.end());
    for (const auto& a : domain)
        for (const auto& b : domain) out.insert(elem_add(spec, a, b));
    return std::vector<GroupElement>(out.begin(), out.end());
}

} // namespace witt
