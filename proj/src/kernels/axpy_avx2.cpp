#include <immintrin.h>

#include "lac/kernels.hpp"

namespace lac::kern {

// _mm256_mul_epi32 takes the signed low halves, which is exact under the
// |f|, |src| < 2^31 precondition.
int64_t axpy_avx2(int64_t* dst, const int64_t* src, int64_t f, std::size_t n) {
    const __m256i vf = _mm256_set1_epi64x(f);
    const __m256i zero = _mm256_setzero_si256();
    __m256i vmax = zero;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        d = _mm256_sub_epi64(d, _mm256_mul_epi32(s, vf));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
        __m256i neg = _mm256_cmpgt_epi64(zero, d);
        __m256i a = _mm256_sub_epi64(_mm256_xor_si256(d, neg), neg);
        vmax = _mm256_blendv_epi8(vmax, a, _mm256_cmpgt_epi64(a, vmax));
    }
    alignas(32) int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vmax);
    int64_t mx = lanes[0];
    for (int k = 1; k < 4; ++k)
        if (lanes[k] > mx) mx = lanes[k];
    int64_t tail = axpy_scalar(dst + i, src + i, f, n - i);
    return tail > mx ? tail : mx;
}

}  // namespace lac::kern
