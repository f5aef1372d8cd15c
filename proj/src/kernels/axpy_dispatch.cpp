#include <atomic>

#include "lac/kernels.hpp"

namespace lac::kern {

namespace {
std::atomic<bool> g_force_scalar{false};
}

bool avx2_available() {
#if defined(LAC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

AxpyFn axpy() {
#if defined(LAC_HAVE_AVX2)
    if (!g_force_scalar.load(std::memory_order_relaxed) && avx2_available()) return axpy_avx2;
#endif
    return axpy_scalar;
}

const char* axpy_name() { return axpy() == axpy_scalar ? "scalar" : "avx2"; }

void set_force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace lac::kern
