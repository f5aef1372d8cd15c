#include <algorithm>
#include <functional>
#include <stdexcept>

#include "lac/combinatorics.hpp"

namespace lac {

namespace {

// sorted multiset of sizes of the points through each line
std::vector<std::vector<int>> line_signatures(const LineCombinatorics& c) {
    std::vector<std::vector<int>> sig(c.n);
    for (const auto& p : c.points)
        for (int l : p) sig[l].push_back(static_cast<int>(p.size()));
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
}

struct Matcher {
    const LineCombinatorics &a, &b;
    std::vector<int> ta, tb;
    std::vector<std::vector<int>> sa, sb;
    std::vector<int> order;  // lines of a in assignment order
    Perm map;
    std::vector<char> used;

    Matcher(const LineCombinatorics& x, const LineCombinatorics& y)
        : a(x), b(y), ta(x.pair_table()), tb(y.pair_table()), sa(line_signatures(x)),
          sb(line_signatures(y)), map(x.n, -1), used(y.n, 0) {
        // rare signatures first, then lines adjacent through triple points
        order.resize(a.n);
        for (int i = 0; i < a.n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
            return std::count(sa[u].begin(), sa[u].end(), 3) > std::count(sa[v].begin(), sa[v].end(), 3);
        });
    }

    std::size_t psize(const LineCombinatorics& c, const std::vector<int>& t, int i, int j) const {
        int k = t[i * c.n + j];
        return k < 0 ? 0 : c.points[k].size();
    }

    bool consistent(int v, int w, std::size_t depth) const {
        if (sa[v] != sb[w]) return false;
        for (std::size_t d = 0; d < depth; ++d) {
            int u = order[d], su = map[u];
            if (psize(a, ta, u, v) != psize(b, tb, su, w)) return false;
            for (std::size_t e = d + 1; e < depth; ++e) {
                int u2 = order[e], su2 = map[u2];
                bool ca = ta[u * a.n + v] == ta[u2 * a.n + v];
                bool cb = tb[su * b.n + w] == tb[su2 * b.n + w];
                if (ca != cb) return false;
            }
        }
        return true;
    }

    // visit returns false to stop the search
    void run(const std::function<bool(const Perm&)>& visit) {
        std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
            if (depth == order.size()) return visit(map);
            int v = order[depth];
            for (int w = 0; w < b.n; ++w) {
                if (used[w] || !consistent(v, w, depth)) continue;
                map[v] = w;
                used[w] = 1;
                bool go = rec(depth + 1);
                used[w] = 0;
                map[v] = -1;
                if (!go) return false;
            }
            return true;
        };
        rec(0);
    }
};

}  // namespace

std::vector<Perm> automorphism_group(const LineCombinatorics& c) {
    if (c.n > 16) throw std::invalid_argument("automorphism_group: more than 16 lines");
    std::vector<Perm> out;
    Matcher m(c, c);
    m.run([&](const Perm& p) {
        out.push_back(p);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Perm> find_isomorphism(const LineCombinatorics& a, const LineCombinatorics& b) {
    if (a.n != b.n || a.points.size() != b.points.size()) return std::nullopt;
    if (iso_invariant(a) != iso_invariant(b)) return std::nullopt;
    std::optional<Perm> found;
    Matcher m(a, b);
    m.run([&](const Perm& p) {
        found = p;
        return false;
    });
    return found;
}

std::string iso_invariant(const LineCombinatorics& c) {
    auto sig = line_signatures(c);
    std::sort(sig.begin(), sig.end());
    std::string s = std::to_string(c.n) + ":";
    for (const auto& v : sig) {
        for (int x : v) s += std::to_string(x);
        s += ";";
    }
    std::vector<std::size_t> sizes;
    for (const auto& p : c.points) sizes.push_back(p.size());
    std::sort(sizes.begin(), sizes.end());
    for (auto x : sizes) s += std::to_string(x);
    return s;
}

}  // namespace lac
