#include <algorithm>
#include <random>

#include "lac/linalg.hpp"

namespace lac {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

}  // namespace

uint64_t mod_reduce(const Int& x, uint64_t p) {
    static_assert(sizeof(unsigned long) == 8);
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

std::size_t rank_mod(std::vector<std::vector<uint64_t>> M, uint64_t p) {
    if (M.empty()) return 0;
    const std::size_t m = M.size(), n = M[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t piv = m;
        for (std::size_t i = rank; i < m; ++i)
            if (M[i][c]) {
                piv = i;
                break;
            }
        if (piv == m) continue;
        std::swap(M[piv], M[rank]);
        const uint64_t inv = powmod(M[rank][c], p - 2, p);
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (!M[i][c]) continue;
            const uint64_t f = mulmod(M[i][c], inv, p);
            for (std::size_t j = c; j < n; ++j)
                if (M[rank][j]) M[i][j] = (M[i][j] + p - mulmod(f, M[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod(const IntMatrix& M, uint64_t p) {
    std::vector<std::vector<uint64_t>> v(M.rows, std::vector<uint64_t>(M.cols));
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) v[i][j] = mod_reduce(M(i, j), p);
    return rank_mod(std::move(v), p);
}

GenericRank generic_rank(const IntMatrix& base, const std::vector<IntMatrix>& dirs, uint64_t seed,
                         std::size_t trials) {
    GenericRank g;
    g.upper = std::min(base.rows, base.cols);
    g.trials = trials;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(1, kPrime62 - 1);
    std::vector<std::vector<uint64_t>> b(base.rows, std::vector<uint64_t>(base.cols));
    std::vector<std::vector<std::vector<uint64_t>>> d;
    for (std::size_t i = 0; i < base.rows; ++i)
        for (std::size_t j = 0; j < base.cols; ++j) b[i][j] = mod_reduce(base(i, j));
    for (const auto& D : dirs) {
        d.emplace_back(base.rows, std::vector<uint64_t>(base.cols));
        for (std::size_t i = 0; i < base.rows; ++i)
            for (std::size_t j = 0; j < base.cols; ++j) d.back()[i][j] = mod_reduce(D(i, j));
    }
    const std::size_t runs = dirs.empty() ? 1 : trials;
    for (std::size_t t = 0; t < runs; ++t) {
        auto M = b;
        for (const auto& D : d) {
            const uint64_t s = dist(rng);
            for (std::size_t i = 0; i < base.rows; ++i)
                for (std::size_t j = 0; j < base.cols; ++j)
                    if (D[i][j]) M[i][j] = (M[i][j] + mulmod(s, D[i][j], kPrime62)) % kPrime62;
        }
        g.lower = std::max(g.lower, rank_mod(std::move(M)));
        if (g.lower == g.upper) break;
    }
    return g;
}

}  // namespace lac
