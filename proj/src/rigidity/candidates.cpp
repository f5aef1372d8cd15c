#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lac/linalg.hpp"
#include "lac/rigidity.hpp"
#include "ratlin.hpp"

namespace lac {

namespace {

int triple_index(const std::vector<Point>& T, Point p) {
    std::sort(p.begin(), p.end());
    auto it = std::find(T.begin(), T.end(), p);
    return it == T.end() ? -1 : static_cast<int>(it - T.begin());
}

// Entries of A forced equal by Adm(P) = sigma(P), grouped.
struct Family {
    std::size_t N = 0;
    std::vector<int> group;                 // N*N entries -> group id
    std::size_t groups = 0;
    std::vector<std::vector<Int>> basis;    // integer vectors over the groups
};

Family build_family(const LineCombinatorics& c, const std::vector<int>& sigma) {
    const auto T = c.points_of_size(3);
    if (sigma.size() != T.size()) throw std::invalid_argument("obstruct_psi3: permutation size");
    Family f;
    f.N = c.n;
    const std::size_t N = f.N;
    std::vector<int> parent(N * N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t k = 0; k < T.size(); ++k) {
        const Point& P = T[k];
        const Point& img = T[sigma[k]];
        for (std::size_t i = 0; i < N; ++i) {
            if (std::find(img.begin(), img.end(), static_cast<int>(i)) != img.end()) continue;
            for (int row : P) parent[find(row * N + i)] = find(P[0] * N + i);
        }
    }
    std::vector<int> id(N * N, -1);
    f.group.resize(N * N);
    for (std::size_t v = 0; v < N * N; ++v) {
        const int r = find(static_cast<int>(v));
        if (id[r] < 0) id[r] = static_cast<int>(f.groups++);
        f.group[v] = id[r];
    }
    // equal row sums: sum_i a(j, i) - sum_i a(0, i) = 0
    ratlin::System sys;
    sys.nv = f.groups;
    for (std::size_t j = 1; j < N; ++j) {
        std::vector<Rat> row(f.groups);
        for (std::size_t i = 0; i < N; ++i) {
            row[f.group[j * N + i]] += 1;
            row[f.group[i]] -= 1;
        }
        sys.add(row, 0);
    }
    const auto red = ratlin::reduce(sys);
    std::vector<char> piv(f.groups, 0);
    for (auto p : red.pivots) piv[p] = 1;
    for (std::size_t fr = 0; fr < f.groups; ++fr) {
        if (piv[fr]) continue;
        std::vector<Rat> v(f.groups);
        v[fr] = 1;
        for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.R[k][fr];
        Int den = 1;
        for (const auto& x : v) den = lcm(den, Int(x.get_den()));
        std::vector<Int> w(f.groups);
        for (std::size_t g = 0; g < f.groups; ++g) w[g] = Rat(v[g] * Rat(den)).get_num();
        f.basis.push_back(std::move(w));
    }
    return f;
}

// Spanning vectors (in Q^N) of column i over the family.
std::vector<std::vector<Int>> column_span(const Family& f, std::size_t i) {
    std::vector<std::vector<Int>> out;
    for (const auto& b : f.basis) {
        std::vector<Int> v(f.N);
        bool nz = false;
        for (std::size_t j = 0; j < f.N; ++j) nz = (v[j] = b[f.group[j * f.N + i]]) != 0 || nz;
        if (nz) out.push_back(std::move(v));
    }
    if (out.empty()) return out;
    IntMatrix M(0, f.N);
    for (const auto& v : out) M.append_row(v);
    const auto e = row_echelon(M);
    out.clear();
    for (std::size_t k = 0; k < e.H.rows; ++k) out.push_back(e.H.row(k));
    return out;
}

std::size_t span_dim(const std::vector<std::vector<std::vector<Int>>>& spans, const std::vector<char>& use,
                     std::size_t N) {
    IntMatrix M(0, N);
    M.append_row(std::vector<Int>(N, Int(1)));
    for (std::size_t i = 0; i < spans.size(); ++i)
        if (use[i])
            for (const auto& v : spans[i]) M.append_row(v);
    return rank_q(M);
}

}  // namespace

std::vector<std::vector<int>> aut_on_triples(const LineCombinatorics& c) {
    const auto T = c.points_of_size(3);
    std::vector<std::vector<int>> out;
    for (const auto& g : automorphism_group(c)) {
        std::vector<int> s(T.size());
        for (std::size_t k = 0; k < T.size(); ++k) {
            Point img;
            for (int l : T[k]) img.push_back(g[l]);
            s[k] = triple_index(T, img);
        }
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Psi3Candidate> psi3_candidates(const LineCombinatorics& c) {
    const auto T = c.points_of_size(3);
    const std::size_t m = T.size();
    if (m <= 1) throw std::invalid_argument("psi3_candidates: needs at least two triple points");
    std::vector<char> tri(m * m * m, 0);
    std::vector<int> count(m, 0);
    for (const auto& t : triangles(c)) {
        const auto [a, b, d] = t.points;
        for (auto [x, y, z] : {std::array{a, b, d}, std::array{a, d, b}, std::array{b, a, d},
                               std::array{b, d, a}, std::array{d, a, b}, std::array{d, b, a}})
            tri[(x * m + y) * m + z] = 1;
        ++count[a], ++count[b], ++count[d];
    }
    const auto aut = aut_on_triples(c);
    std::vector<Psi3Candidate> out;
    std::vector<int> img;
    std::vector<char> used(m, 0);
    auto rec = [&](auto&& self) -> void {
        const std::size_t k = img.size();
        if (k == m) {
            out.push_back({img, std::binary_search(aut.begin(), aut.end(), img)});
            return;
        }
        for (std::size_t v = 0; v < m; ++v) {
            if (used[v] || count[v] != count[k]) continue;
            bool ok = true;
            for (std::size_t a = 0; a < k && ok; ++a)
                for (std::size_t b = a + 1; b < k && ok; ++b)
                    ok = tri[(a * m + b) * m + k] == tri[(img[a] * m + img[b]) * m + v];
            if (!ok) continue;
            used[v] = 1;
            img.push_back(static_cast<int>(v));
            self(self);
            img.pop_back();
            used[v] = 0;
        }
    };
    rec(rec);
    return out;
}

Obstruction obstruct_psi3(const LineCombinatorics& c, const std::vector<int>& sigma, uint64_t seed) {
    const Family f = build_family(c, sigma);
    const std::size_t N = f.N;
    Obstruction ob;
    ob.family_dim = f.basis.size();
    ob.target = N;
    // lower bound: rank of [A | 1] at random members
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Int> y(f.groups);
        for (const auto& b : f.basis) {
            const long t = dist(rng);
            for (std::size_t g = 0; g < f.groups; ++g) y[g] += t * b[g];
        }
        IntMatrix M(N, N + 1);
        for (std::size_t j = 0; j < N; ++j) {
            for (std::size_t i = 0; i < N; ++i) M(j, i) = y[f.group[j * N + i]];
            M(j, N) = 1;
        }
        ob.lower = std::max(ob.lower, rank_mod(M));
    }
    // upper bound: |F| + dim(span of the remaining columns and 1), F chosen greedily
    std::vector<std::vector<std::vector<Int>>> spans(N);
    for (std::size_t i = 0; i < N; ++i) spans[i] = column_span(f, i);
    std::vector<char> use(N, 1);
    std::size_t span = span_dim(spans, use, N), freec = 0;
    for (bool improved = true; improved;) {
        improved = false;
        std::size_t best_i = N, best_span = span;
        for (std::size_t i = 0; i < N; ++i) {
            if (!use[i]) continue;
            use[i] = 0;
            const std::size_t s = span_dim(spans, use, N);
            use[i] = 1;
            if (s + 1 < best_span) best_span = s, best_i = i;
        }
        if (best_i < N) {
            use[best_i] = 0;
            span = best_span;
            ++freec;
            improved = true;
        }
    }
    for (std::size_t i = 0; i < N; ++i)
        if (!use[i]) ob.bound_free.push_back(static_cast<int>(i));
    ob.bound_span = span;
    ob.upper = std::min(N, freec + span);
    if (ob.lower > ob.upper) throw std::logic_error("obstruct_psi3: rank bounds disagree");
    ob.obstructed = ob.upper < ob.target;
    return ob;
}

}  // namespace lac
