#include <algorithm>
#include <numeric>

#include "lac/combinatorics.hpp"

namespace lac {

namespace {

int shared_line(const Point& p, const Point& q) {
    int found = -1, count = 0;
    for (int a : p)
        if (std::find(q.begin(), q.end(), a) != q.end()) found = a, ++count;
    return count == 1 ? found : -1;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<Triangle> triangles(const LineCombinatorics& c) {
    const auto t = c.points_of_size(3);
    const int m = static_cast<int>(t.size());
    std::vector<Triangle> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int a = shared_line(t[i], t[j]);
            if (a < 0) continue;
            for (int k = j + 1; k < m; ++k) {
                int b = shared_line(t[i], t[k]), d = shared_line(t[j], t[k]);
                if (b < 0 || d < 0 || a == b || a == d || b == d) continue;
                out.push_back({{i, j, k}, {a, b, d}});
            }
        }
    return out;
}

int triangle_count_of(const LineCombinatorics& c, const Point& p) {
    const auto t = c.points_of_size(3);
    Point q = p;
    std::sort(q.begin(), q.end());
    auto it = std::find(t.begin(), t.end(), q);
    if (it == t.end()) return 0;
    const int idx = static_cast<int>(it - t.begin());
    int n = 0;
    for (const auto& tr : triangles(c))
        if (tr.points[0] == idx || tr.points[1] == idx || tr.points[2] == idx) ++n;
    return 2 * n;
}

Connectivity connectivity_checks(const LineCombinatorics& c) {
    const auto t = c.points_of_size(3);
    Connectivity r;
    {
        Dsu d(c.n);
        for (const auto& p : t) d.unite(p[0], p[1]), d.unite(p[0], p[2]);
        r.triple_chain_connected = true;
        for (int i = 1; i < c.n; ++i)
            if (d.find(i) != d.find(0)) r.triple_chain_connected = false;
    }
    r.off_column_coverage = c.n >= 2;
    for (int j = 0; j < c.n && r.off_column_coverage; ++j) {
        Dsu d(c.n);
        std::vector<char> cov(c.n, 0);
        for (const auto& p : t) {
            if (std::find(p.begin(), p.end(), j) != p.end()) continue;
            for (int l : p) cov[l] = 1;
            d.unite(p[0], p[1]), d.unite(p[0], p[2]);
        }
        int root = -1;
        for (int i = 0; i < c.n; ++i) {
            if (i == j) continue;
            if (!cov[i]) {
                r.off_column_coverage = false;
                break;
            }
            if (root < 0) root = d.find(i);
            if (d.find(i) != root) {
                r.off_column_coverage = false;
                break;
            }
        }
    }
    return r;
}

}  // namespace lac
