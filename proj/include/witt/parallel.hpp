#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace witt::par {

// Per-index result of a verification callback. Callbacks must not throw.
enum class Outcome : unsigned char { Ok, Violation, Skip };

struct ScanResult {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::optional<std::size_t> first_violation; // smallest violating index
};

// Global thread cap: 0 = library default, 1 = force the serial path,
// n > 1 = allow up to n OpenMP threads.
void set_max_threads(int n);
int max_threads();

inline constexpr std::size_t kParallelThreshold = 512;

// Serial reference implementation. Early-exits at the first violation, which
// is by construction the smallest violating index.
template <class Fn>
ScanResult scan_serial(std::size_t n, Fn&& fn) {
    ScanResult r;
    for (std::size_t i = 0; i < n; ++i) {
        switch (fn(i)) {
            case Outcome::Ok: ++r.checked; break;
            case Outcome::Skip: ++r.skipped; break;
            case Outcome::Violation:
                ++r.checked;
                r.first_violation = i;
                return r;
        }
    }
    return r;
}

#ifdef _OPENMP
// OpenMP implementation: full scan, violations merged by min-index reduction,
// so the reported witness is identical to the serial one.
template <class Fn>
ScanResult scan_parallel(std::size_t n, Fn&& fn) {
    const unsigned long long sentinel = ~0ULL;
    unsigned long long viol = sentinel;
    unsigned long long skipped = 0;
    long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(min : viol) reduction(+ : skipped)
    for (long long i = 0; i < nn; ++i) {
        switch (fn(static_cast<std::size_t>(i))) {
            case Outcome::Ok: break;
            case Outcome::Skip: ++skipped; break;
            case Outcome::Violation: {
                unsigned long long ii = static_cast<unsigned long long>(i);
                if (ii < viol) viol = ii;
                break;
            }
        }
    }
    ScanResult r;
    r.skipped = static_cast<std::size_t>(skipped);
    if (viol != sentinel) {
        r.first_violation = static_cast<std::size_t>(viol);
        // On the violation path `checked` counts conservatively: everything
        // up to and including the witness, matching the serial early exit.
        r.checked = static_cast<std::size_t>(viol) + 1 >= r.skipped
                        ? static_cast<std::size_t>(viol) + 1 - r.skipped
                        : 0;
    } else {
        r.checked = n - r.skipped;
    }
    return r;
}
#endif

// Dispatch: serial when the cap or the size says so, OpenMP otherwise.
template <class Fn>
ScanResult scan(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
    if (max_threads() != 1 && n >= kParallelThreshold) {
        if (int cap = max_threads(); cap > 1) omp_set_num_threads(cap);
        return scan_parallel(n, fn);
    }
#endif
    return scan_serial(n, fn);
}

} // namespace witt::par
