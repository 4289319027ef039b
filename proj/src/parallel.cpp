#include "hx/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hx {

namespace {
std::atomic<int> g_thread_limit{0};

int env_threads() {
    const char* v = std::getenv("HX_THREADS");
    if (!v)
        return 0;
    try {
        int t = std::stoi(v);
        return t > 0 ? t : 0;
    } catch (...) {
        return 0;
    }
}

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}
} // namespace

void set_thread_limit(int threads) {
    g_thread_limit.store(threads > 0 ? threads : 0);
}

int thread_limit() {
    return g_thread_limit.load();
}

int effective_threads() {
    int t = g_thread_limit.load();
    if (t <= 0)
        t = env_threads();
    if (t <= 0)
        t = hardware_threads();
    return t >= 1 ? t : 1;
}

} // namespace hx
