#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "lac/kernels.hpp"
#include "lac/linalg.hpp"

namespace lac {

namespace {

struct Overflow {};

constexpr int64_t kBig = int64_t{1} << 62;

int64_t iabs(int64_t v) { return v < 0 ? -v : v; }

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Rows of int64 with a running upper bound on |entry| per row.
struct FastRows {
    std::vector<std::vector<int64_t>> r;
    std::vector<int64_t> bound;
    kern::AxpyFn ax = kern::axpy();

    bool nonzero(std::size_t i, std::size_t c) const { return r[i][c] != 0; }
    int cmp_abs(std::size_t i, std::size_t j, std::size_t c) const {
        int64_t a = iabs(r[i][c]), b = iabs(r[j][c]);
        return a < b ? -1 : a > b ? 1 : 0;
    }
    bool negative(std::size_t i, std::size_t c) const { return r[i][c] < 0; }
    void negate(std::size_t i) {
        for (auto& v : r[i]) v = -v;
    }
    void tighten(std::size_t i) {
        int64_t m = 0;
        for (int64_t v : r[i]) m = std::max(m, iabs(v));
        bound[i] = m;
    }
    // row i -= q * row k, touching columns >= from
    void sub_mul(std::size_t i, std::size_t k, int64_t q, std::size_t from) {
        if (q == 0) return;
        if (bound[k] >= kern::kSmall) tighten(k);
        if (bound[i] >= kBig) tighten(i);
        if (iabs(q) >= kern::kSmall || bound[k] >= kern::kSmall || bound[i] >= kBig) throw Overflow{};
        int64_t m = ax(r[i].data() + from, r[k].data() + from, q, r[i].size() - from);
        bound[i] = std::max(bound[i], m);
    }
    int64_t quot(std::size_t i, std::size_t k, std::size_t c) const { return r[i][c] / r[k][c]; }
    int64_t fquot(std::size_t i, std::size_t k, std::size_t c) const {
        return floor_div(r[i][c], r[k][c]);
    }
    Int get(std::size_t i, std::size_t c) const { return Int(static_cast<long>(r[i][c])); }
};

struct BigRows {
    std::vector<std::vector<Int>> r;

    bool nonzero(std::size_t i, std::size_t c) const { return r[i][c] != 0; }
    int cmp_abs(std::size_t i, std::size_t j, std::size_t c) const { return cmpabs(r[i][c], r[j][c]); }
    bool negative(std::size_t i, std::size_t c) const { return r[i][c] < 0; }
    void negate(std::size_t i) {
        for (auto& v : r[i]) v = -v;
    }
    void sub_mul(std::size_t i, std::size_t k, const Int& q, std::size_t from) {
        if (q == 0) return;
        auto& d = r[i];
        const auto& s = r[k];
        for (std::size_t j = from; j < d.size(); ++j)
            if (s[j] != 0) d[j] -= q * s[j];
    }
    Int quot(std::size_t i, std::size_t k, std::size_t c) const {
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), r[i][c].get_mpz_t(), r[k][c].get_mpz_t());
        return q;
    }
    Int fquot(std::size_t i, std::size_t k, std::size_t c) const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), r[i][c].get_mpz_t(), r[k][c].get_mpz_t());
        return q;
    }
    Int get(std::size_t i, std::size_t c) const { return r[i][c]; }
};

template <class Rows>
std::vector<std::size_t> eliminate(Rows& R, std::size_t m, std::size_t ncols, bool reduce) {
    std::vector<std::size_t> piv;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < m; ++c) {
        bool found = false;
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = rank; i < m; ++i)
                if (R.nonzero(i, c) && (best == m || R.cmp_abs(i, best, c) < 0)) best = i;
            if (best == m) break;
            found = true;
            if (best != rank) {
                std::swap(R.r[best], R.r[rank]);
                if constexpr (requires { R.bound; }) std::swap(R.bound[best], R.bound[rank]);
            }
            bool clean = true;
            for (std::size_t i = rank + 1; i < m; ++i) {
                if (!R.nonzero(i, c)) continue;
                R.sub_mul(i, rank, R.quot(i, rank, c), c);
                if (R.nonzero(i, c)) clean = false;
            }
            if (clean) break;
        }
        if (!found) continue;
        if (R.negative(rank, c)) R.negate(rank);
        if (reduce)
            for (std::size_t i = 0; i < rank; ++i)
                if (R.nonzero(i, c)) R.sub_mul(i, rank, R.fquot(i, rank, c), c);
        piv.push_back(c);
        ++rank;
    }
    return piv;
}

template <class Rows>
Echelon collect(const Rows& R, std::vector<std::size_t> piv, std::size_t m, std::size_t n, bool track) {
    Echelon e;
    e.pivots = std::move(piv);
    e.H = IntMatrix(e.pivots.size(), n);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) e.H(i, j) = R.get(i, j);
    if (track) {
        e.U = IntMatrix(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) e.U(i, j) = R.get(i, n + j);
    }
    return e;
}

bool fits_small(const IntMatrix& M) {
    for (const auto& v : M.a)
        if (!v.fits_slong_p() || abs(v) >= kern::kSmall) return false;
    return true;
}

}  // namespace

Echelon row_echelon(const IntMatrix& M, bool track_u, bool reduce) {
    const std::size_t m = M.rows, n = M.cols, w = n + (track_u ? m : 0);
    if (fits_small(M)) {
        FastRows R;
        R.r.assign(m, std::vector<int64_t>(w, 0));
        R.bound.assign(m, 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) R.r[i][j] = M(i, j).get_si();
            if (track_u) R.r[i][n + i] = 1;
            R.tighten(i);
        }
        try {
            auto piv = eliminate(R, m, n, reduce);
            Echelon e = collect(R, std::move(piv), m, n, track_u);
            e.used_fast_path = true;
            return e;
        } catch (const Overflow&) {
        }
    }
    BigRows R;
    R.r.assign(m, std::vector<Int>(w));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) R.r[i][j] = M(i, j);
        if (track_u) R.r[i][n + i] = 1;
    }
    auto piv = eliminate(R, m, n, reduce);
    return collect(R, std::move(piv), m, n, track_u);
}

std::size_t rank_q(const IntMatrix& M) { return row_echelon(M).pivots.size(); }

}  // namespace lac
