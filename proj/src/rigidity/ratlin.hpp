#pragma once
#include <optional>
#include <vector>

#include "lac/exact.hpp"

namespace lac::ratlin {

// Dense affine system M x = rhs over Q with the row combinations tracked,
// so every derived equation comes with its multipliers.
struct System {
    std::size_t nv = 0;
    std::vector<std::vector<Rat>> M;
    std::vector<Rat> rhs;
    void add(std::vector<Rat> row, Rat b) {
        M.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }
};

struct Reduced {
    std::vector<std::vector<Rat>> R;     // pivot rows, reduced
    std::vector<Rat> rb;
    std::vector<std::vector<Rat>> comb;  // multipliers over the original rows
    std::vector<std::size_t> pivots;
    std::optional<std::vector<Rat>> inconsistency;  // y with y M = 0, y rhs != 0
};

inline Reduced reduce(const System& s) {
    const std::size_t m = s.M.size();
    std::vector<std::vector<Rat>> R = s.M, C(m, std::vector<Rat>(m));
    std::vector<Rat> b = s.rhs;
    for (std::size_t i = 0; i < m; ++i) C[i][i] = 1;
    Reduced out;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < s.nv && rk < m; ++c) {
        std::size_t p = rk;
        while (p < m && R[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(R[p], R[rk]);
        std::swap(C[p], C[rk]);
        std::swap(b[p], b[rk]);
        const Rat inv = 1 / R[rk][c];
        for (auto& x : R[rk]) x *= inv;
        for (auto& x : C[rk]) x *= inv;
        b[rk] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rk || R[i][c] == 0) continue;
            const Rat f = R[i][c];
            for (std::size_t j = 0; j < s.nv; ++j) R[i][j] -= f * R[rk][j];
            for (std::size_t j = 0; j < m; ++j) C[i][j] -= f * C[rk][j];
            b[i] -= f * b[rk];
        }
        out.pivots.push_back(c);
        ++rk;
    }
    for (std::size_t i = rk; i < m; ++i)
        if (b[i] != 0) {
            out.inconsistency = C[i];
            break;
        }
    R.resize(rk);
    C.resize(rk);
    b.resize(rk);
    out.R = std::move(R);
    out.comb = std::move(C);
    out.rb = std::move(b);
    return out;
}

// Multipliers y with y M = target, and the implied value y rhs, when target is in the row space.
inline std::optional<std::pair<std::vector<Rat>, Rat>> derive(const Reduced& r, const std::vector<Rat>& target,
                                                             std::size_t m) {
    std::vector<Rat> t = target, y(m);
    Rat val = 0;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        const Rat f = t[r.pivots[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < t.size(); ++j) t[j] -= f * r.R[k][j];
        for (std::size_t j = 0; j < m; ++j) y[j] += f * r.comb[k][j];
        val += f * r.rb[k];
    }
    for (const auto& x : t)
        if (x != 0) return std::nullopt;
    return std::make_pair(y, val);
}

// Particular solution with the free variables set to params (one per non-pivot column).
inline std::vector<Rat> point(const Reduced& r, std::size_t nv, const std::vector<Rat>& params) {
    std::vector<Rat> x(nv);
    std::vector<char> piv(nv, 0);
    for (auto c : r.pivots) piv[c] = 1;
    std::size_t q = 0;
    for (std::size_t c = 0; c < nv; ++c)
        if (!piv[c]) x[c] = q < params.size() ? params[q++] : Rat(0);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        Rat v = r.rb[k];
        for (std::size_t c = 0; c < nv; ++c)
            if (!piv[c] && r.R[k][c] != 0) v -= r.R[k][c] * x[c];
        x[r.pivots[k]] = v;
    }
    return x;
}

// Checks y M == target and y rhs == value against the original system.
inline bool verify(const System& s, const std::vector<Rat>& y, const std::vector<Rat>& target, const Rat& value) {
    if (y.size() != s.M.size()) return false;
    std::vector<Rat> acc(s.nv);
    Rat v = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        for (std::size_t j = 0; j < s.nv; ++j) acc[j] += y[i] * s.M[i][j];
        v += y[i] * s.rhs[i];
    }
    return acc == target && v == value;
}

}  // namespace lac::ratlin
