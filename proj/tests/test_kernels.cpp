#include <random>
#include <vector>

#include "doctest.h"
#include "lac/kernels.hpp"
#include "lac/linalg.hpp"

using namespace lac;

TEST_CASE("scalar axpy against a direct loop") {
    std::vector<int64_t> d{5, -7, 0, 1 << 20}, s{1, 2, -3, 4};
    const auto m = kern::axpy_scalar(d.data(), s.data(), 3, d.size());
    CHECK(d == std::vector<int64_t>{2, -13, 9, (1 << 20) - 12});
    CHECK(m == (1 << 20) - 12);
}

#if defined(LAC_HAVE_AVX2)
TEST_CASE("avx2 axpy matches scalar on random inputs") {
    if (!kern::avx2_available()) return;
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int64_t> small(-(kern::kSmall - 1), kern::kSmall - 1);
    std::uniform_int_distribution<int64_t> big(-(int64_t{1} << 61), int64_t{1} << 61);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 131u}) {
        for (int t = 0; t < 20; ++t) {
            std::vector<int64_t> src(n), a(n);
            for (auto& x : src) x = small(rng);
            for (auto& x : a) x = big(rng);
            auto b = a;
            const int64_t f = small(rng);
            const auto ma = kern::axpy_scalar(a.data(), src.data(), f, n);
            const auto mb = kern::axpy_avx2(b.data(), src.data(), f, n);
            CHECK(a == b);
            CHECK(ma == mb);
        }
    }
}
#endif

TEST_CASE("echelon results do not depend on the kernel") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int t = 0; t < 10; ++t) {
        IntMatrix M(12, 9);
        for (auto& x : M.a) x = d(rng);
        kern::set_force_scalar(true);
        const auto a = hnf(M, true);
        kern::set_force_scalar(false);
        const auto b = hnf(M, true);
        CHECK(a.H == b.H);
        CHECK(a.U == b.U);
        CHECK(a.pivots == b.pivots);
    }
    CHECK(std::string(kern::axpy_name()).size() > 0);
}
