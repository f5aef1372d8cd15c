#include <algorithm>
#include <stdexcept>

#include "lac/alexander.hpp"

namespace lac {

Gr1Index::Gr1Index(int r_) : r(r_) {
    for (int k = 1; k <= r; ++k)
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j)
                if (k >= i) {
                    pos[{k, i, j}] = keys.size();
                    keys.push_back({k, i, j});
                }
}

std::size_t pair_count(int r) { return static_cast<std::size_t>(r) * (r - 1) / 2; }

std::size_t pair_pos(int r, int i, int j) {
    if (!(1 <= i && i < j && j <= r)) throw std::invalid_argument("pair_pos: bad pair");
    std::size_t off = 0;
    for (int a = 1; a < i; ++a) off += r - a;
    return off + (j - i - 1);
}

std::vector<int> generator_lines(const LineCombinatorics& c, int decone) {
    std::vector<int> out;
    for (int l = 0; l < c.n; ++l)
        if (l != decone) out.push_back(l);
    return out;
}

std::vector<Point> finite_points(const LineCombinatorics& c, int decone) {
    std::vector<int> gen(c.n, 0);
    int g = 0;
    for (int l = 0; l < c.n; ++l)
        if (l != decone) gen[l] = ++g;
    std::vector<Point> out;
    for (const auto& p : c.points) {
        if (std::find(p.begin(), p.end(), decone) != p.end()) continue;
        Point q;
        for (int l : p) q.push_back(gen[l]);
        std::sort(q.begin(), q.end());
        out.push_back(q);
    }
    return out;
}

namespace {

// degree-0 combinatorial relations, as sparse rows over pairs
std::vector<std::vector<std::pair<PairKey, long>>> gr0_rows(const LineCombinatorics& c, int decone) {
    std::vector<std::vector<std::pair<PairKey, long>>> rows;
    for (const auto& p : finite_points(c, decone)) {
        if (p.size() == 2) {
            rows.push_back({{{p[0], p[1]}, 1}});
        } else if (p.size() == 3) {
            const int i = p[0], j = p[1], k = p[2];
            rows.push_back({{{i, j}, 1}, {{i, k}, 1}});
            rows.push_back({{{i, k}, 1}, {{j, k}, 1}});
        } else {
            throw std::invalid_argument("point of multiplicity > 3");
        }
    }
    return rows;
}

std::string pair_label(int i, int j) { return "x" + std::to_string(i) + "," + std::to_string(j); }

}  // namespace

ModulePresentation gr0_presentation(const LineCombinatorics& c, int decone) {
    const int r = c.n - 1;
    ModulePresentation mp;
    mp.ambient = pair_count(r);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) mp.gen_labels.push_back(pair_label(i, j));
    const auto rows = gr0_rows(c, decone);
    mp.relations = IntMatrix(rows.size(), mp.ambient);
    for (std::size_t q = 0; q < rows.size(); ++q) {
        for (const auto& [k, v] : rows[q]) mp.relations(q, pair_pos(r, k.first, k.second)) += v;
        mp.rel_labels.push_back("point relation " + std::to_string(q));
    }
    mp.coker = cokernel(mp.relations);
    return mp;
}

ModulePresentation gr1_presentation(const LineCombinatorics& c, int decone) {
    const int r = c.n - 1;
    const std::size_t C = pair_count(r);
    ModulePresentation mp;
    mp.ambient = static_cast<std::size_t>(r) * C;
    for (int k = 1; k <= r; ++k)
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j)
                mp.gen_labels.push_back("(t" + std::to_string(k) + "-1)" + pair_label(i, j));
    auto col = [&](int k, int i, int j) { return (k - 1) * C + pair_pos(r, i, j); };
    std::vector<std::vector<Int>> rows;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            for (int k = j + 1; k <= r; ++k) {
                std::vector<Int> row(mp.ambient);
                row[col(i, j, k)] += 1;
                row[col(j, i, k)] -= 1;
                row[col(k, i, j)] += 1;
                rows.push_back(std::move(row));
                mp.rel_labels.push_back("J(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(k) + ")");
            }
    const auto g0 = gr0_rows(c, decone);
    for (std::size_t q = 0; q < g0.size(); ++q)
        for (int k = 1; k <= r; ++k) {
            std::vector<Int> row(mp.ambient);
            for (const auto& [p, v] : g0[q]) row[col(k, p.first, p.second)] += v;
            rows.push_back(std::move(row));
            mp.rel_labels.push_back("(t" + std::to_string(k) + "-1) point relation " + std::to_string(q));
        }
    mp.relations = IntMatrix(0, mp.ambient);
    for (const auto& row : rows) mp.relations.append_row(row);
    mp.coker = cokernel(mp.relations);
    return mp;
}

Gr1Quotient gr1_quotient(const LineCombinatorics& c, int decone) {
    const int r = c.n - 1;
    Gr1Quotient q;
    q.index = Gr1Index(r);
    const std::size_t N = q.index.size();
    IntMatrix R(0, N);
    for (const auto& row : gr0_rows(c, decone))
        for (int k = 1; k <= r; ++k) {
            TruncatedClass t;
            for (const auto& [p, v] : row) t.add1(k, p.first, p.second, v);
            std::vector<Int> v(N);
            for (const auto& [key, x] : t.deg1) v[q.index.pos.at(key)] = x;
            R.append_row(v);
        }
    if (!cokernel(R).torsion.empty()) throw std::logic_error("gr1 quotient has torsion");
    // U R^T = [H; 0]: the rows of U past the rank vanish exactly on the relation lattice
    Echelon e = row_echelon(R.transpose(), true, false);
    const std::size_t rk = e.pivots.size();
    q.Q = IntMatrix(N - rk, N);
    for (std::size_t i = rk; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) q.Q(i - rk, j) = e.U(i, j);
    return q;
}

std::vector<Int> Gr1Quotient::coords(const std::vector<long>& normal) const {
    std::vector<Int> out(Q.rows);
    for (std::size_t i = 0; i < Q.rows; ++i)
        for (std::size_t j = 0; j < Q.cols; ++j)
            if (normal[j] != 0 && Q(i, j) != 0) out[i] += Q(i, j) * normal[j];
    return out;
}

std::vector<Int> Gr1Quotient::coords(const TruncatedClass& x) const {
    std::vector<long> v(index.size(), 0);
    for (const auto& [key, c] : x.deg1) {
        auto it = index.pos.find(key);
        if (it == index.pos.end()) throw std::invalid_argument("gr1 coords: generator out of range");
        v[it->second] = c;
    }
    return coords(v);
}

CanonicalForm canonical_form(const TruncatedClass& x, const Gr1Quotient& q) { return {x.deg0, q.coords(x)}; }

M2Rank m2_rank(const LineCombinatorics& c, const std::vector<Word>& relations, int r, int decone) {
    if (r != c.n - 1) throw std::invalid_argument("m2_rank: generator count does not match combinatorics");
    const std::size_t C = pair_count(r);
    const Gr1Index idx(r);
    const std::size_t N = C + idx.size();
    IntMatrix R(0, N);
    auto put = [&](const TruncatedClass& t) {
        std::vector<Int> v(N);
        for (const auto& [k, x] : t.deg0) v[pair_pos(r, k.first, k.second)] = x;
        for (const auto& [k, x] : t.deg1) v[C + idx.pos.at(k)] = x;
        R.append_row(v);
    };
    for (const auto& w : relations) {
        const TruncatedClass t = reduce_word(w, r);
        put(t);
        for (int k = 1; k <= r; ++k) {
            TruncatedClass u;
            for (const auto& [p, x] : t.deg0) u.add1(k, p.first, p.second, x);
            put(u);
        }
    }
    const Cokernel ck = cokernel(R);
    M2Rank m;
    m.total = ck.free_rank;
    m.torsion = ck.torsion;
    m.gr0 = gr0_presentation(c, decone).coker.free_rank;
    m.gr1 = gr1_presentation(c, decone).coker.free_rank;
    return m;
}

}  // namespace lac
