#include "witt/algebra.hpp"
#include "witt/parallel.hpp"
#include "witt/tpa.hpp"
#include "witt/wittfn.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace witt;

namespace {

// Wall-clock milliseconds for one call of fn.
template <typename F>
double time_ms(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct BenchResult {
    double serial_ms = 0;
    double parallel_ms = 0;
    bool agree = false;
};

template <typename F>
BenchResult run_both(F&& fn) {
    BenchResult r;
    Verdict vs, vp;
    par::set_max_threads(1);
    r.serial_ms = time_ms([&] { vs = fn(); });
    par::set_max_threads(0);
    r.parallel_ms = time_ms([&] { vp = fn(); });
    par::set_max_threads(0);
    r.agree = vs == vp;
    return r;
}

void print_row(const char* name, const BenchResult& r) {
    std::printf("%-34s %10.1f ms %10.1f ms %6.2fx  %s\n", name, r.serial_ms, r.parallel_ms,
                r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
                r.agree ? "verdicts agree" : "VERDICT MISMATCH");
}

} // namespace

int main() {
    int bad = 0;

    std::printf("scan engine: serial reference vs parallel kernel\n");
    std::printf("%-34s %13s %13s %7s\n", "workload", "serial", "parallel", "ratio");

    {
        GroupSpec spec;
        spec.rank = 0;
        spec.torsion = {30};
        std::map<GroupElement, Scalar> table;
        for (const auto& e : enumerate_group(spec))
            table[e] = Scalar(e.tors_part[0] % 3 == 0 ? 0 : 1);
        WittFunction f = make_table_fn(spec, table);
        auto domain = enumerate_group(spec);
        BenchResult r = run_both([&] { return verify_jacobi(f, domain).verdict; });
        print_row("jacobi Z/30 (27000 triples)", r);
        bad += !r.agree;
    }

    {
        GroupSpec z;
        z.rank = 1;
        WittFunction f = make_additive_fn(z, {Scalar(1)});
        auto domain = window_elements(z, 14);
        BenchResult r = run_both([&] { return verify_jacobi(f, domain).verdict; });
        print_row("jacobi Z window 14 (24389)", r);
        bad += !r.agree;
    }

    {
        GroupSpec z;
        z.rank = 1;
        WittFunction f = make_additive_fn(z, {Scalar(1)});
        auto domain = window_elements(z, 8);
        AlgebraVector b;
        add_term(b, GroupElement{{1}, {}}, Scalar(1, 2));
        add_term(b, GroupElement{{-2}, {}}, Scalar(3));
        Product p = mutation_product(z, b);
        BenchResult r = run_both([&] { return check_axioms(f, p, domain).overall(); });
        print_row("tpp axioms Z window 8 (4913x3)", r);
        bad += !r.agree;
    }

    if (bad) {
        std::printf("FAILURE: %d workload(s) disagreed between engines\n", bad);
        return 1;
    }
    std::printf("all workloads agree\n");
    return 0;
}
