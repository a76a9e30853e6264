#include "witt/parallel.hpp"

namespace witt::par {

namespace {
int g_max_threads = 0;
}

void set_max_threads(int n) {
    g_max_threads = n < 0 ? 0 : n;
}

int max_threads() {
    return g_max_threads;
}

} // namespace witt::par
