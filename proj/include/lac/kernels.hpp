#pragma once
#include <cstddef>
#include <cstdint>

namespace lac::kern {

// Inputs below this bound may be fed to axpy without overflow.
inline constexpr int64_t kSmall = int64_t{1} << 31;

// dst[i] -= f * src[i] for i < n.
// Requires |f| < 2^31, |src[i]| < 2^31, |dst[i]| < 2^62.
// Returns max |dst[i]| after the update.
using AxpyFn = int64_t (*)(int64_t* dst, const int64_t* src, int64_t f, std::size_t n);

int64_t axpy_scalar(int64_t* dst, const int64_t* src, int64_t f, std::size_t n);
#if defined(LAC_HAVE_AVX2)
int64_t axpy_avx2(int64_t* dst, const int64_t* src, int64_t f, std::size_t n);
#endif

bool avx2_available();
// Selected at first use; set_force_scalar overrides (tests, benchmarking).
AxpyFn axpy();
const char* axpy_name();
void set_force_scalar(bool on);

}  // namespace lac::kern
