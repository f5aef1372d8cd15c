#include <utility>

#include "lac/linalg.hpp"

namespace lac {

namespace {

struct SmithWork {
    IntMatrix D, U, V;
    bool track;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols; ++j) std::swap(D(a, j), D(b, j));
        if (track)
            for (std::size_t j = 0; j < U.cols; ++j) std::swap(U(a, j), U(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows; ++i) std::swap(D(i, a), D(i, b));
        if (track)
            for (std::size_t i = 0; i < V.rows; ++i) std::swap(V(i, a), V(i, b));
    }
    // row a -= q * row b
    void row_op(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t j = 0; j < D.cols; ++j)
            if (D(b, j) != 0) D(a, j) -= q * D(b, j);
        if (track)
            for (std::size_t j = 0; j < U.cols; ++j)
                if (U(b, j) != 0) U(a, j) -= q * U(b, j);
    }
    // col a -= q * col b
    void col_op(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t i = 0; i < D.rows; ++i)
            if (D(i, b) != 0) D(i, a) -= q * D(i, b);
        if (track)
            for (std::size_t i = 0; i < V.rows; ++i)
                if (V(i, b) != 0) V(i, a) -= q * V(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < D.cols; ++j) D(a, j) = -D(a, j);
        if (track)
            for (std::size_t j = 0; j < U.cols; ++j) U(a, j) = -U(a, j);
    }
};

Int tquot(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Smith smith(const IntMatrix& M, bool track) {
    SmithWork w{M, track ? IntMatrix::identity(M.rows) : IntMatrix(),
                track ? IntMatrix::identity(M.cols) : IntMatrix(), track};
    IntMatrix& D = w.D;
    const std::size_t m = M.rows, n = M.cols;
    std::size_t t = 0;
    for (; t < m && t < n; ++t) {
        // smallest nonzero entry of the trailing block, stopping early at a unit
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m && !(bi < m && abs(D(bi, bj)) == 1); ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D(i, j) != 0 && (bi == m || cmpabs(D(i, j), D(bi, bj)) < 0)) {
                    bi = i, bj = j;
                    if (abs(D(i, j)) == 1) break;
                }
        if (bi == m) break;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i)
                if (D(i, t) != 0) {
                    w.row_op(i, t, tquot(D(i, t), D(t, t)));
                    if (D(i, t) != 0) dirty = true;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (D(t, j) != 0) {
                    w.col_op(j, t, tquot(D(t, j), D(t, t)));
                    if (D(t, j) != 0) dirty = true;
                }
            if (dirty) {
                std::size_t bi2 = t, bj2 = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (D(i, t) != 0 && cmpabs(D(i, t), D(bi2, bj2)) < 0) bi2 = i, bj2 = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(t, j) != 0 && cmpabs(D(t, j), D(bi2, bj2)) < 0) bi2 = t, bj2 = j;
                w.swap_rows(t, bi2);
                w.swap_cols(t, bj2);
                continue;
            }
            if (abs(D(t, t)) == 1) break;
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            w.row_op(t, bad, Int(-1));
        }
        if (D(t, t) < 0) w.negate_row(t);
    }
    Smith s;
    for (std::size_t i = 0; i < t; ++i) s.factors.push_back(D(i, i));
    s.D = std::move(w.D);
    if (track) {
        s.U = std::move(w.U);
        s.V = std::move(w.V);
    }
    return s;
}

Cokernel cokernel(const IntMatrix& R) {
    Echelon e = row_echelon(R);
    Cokernel c;
    c.relation_rank = e.pivots.size();
    c.free_rank = R.cols - c.relation_rank;
    bool unit = true;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (e.H(i, e.pivots[i]) != 1) unit = false;
    if (unit) return c;  // unit pivots extend to a unimodular basis
    Smith s = smith(e.H, false);
    for (const auto& f : s.factors)
        if (f != 1) c.torsion.push_back(f);
    return c;
}

}  // namespace lac
