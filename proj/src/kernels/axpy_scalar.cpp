#include "lac/kernels.hpp"

namespace lac::kern {

int64_t axpy_scalar(int64_t* dst, const int64_t* src, int64_t f, std::size_t n) {
    int64_t mx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int64_t v = dst[i] - f * src[i];
        dst[i] = v;
        int64_t a = v < 0 ? -v : v;
        if (a > mx) mx = a;
    }
    return mx;
}

}  // namespace lac::kern
