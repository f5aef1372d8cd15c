#pragma once
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lac/rigidity.hpp"
#include "ratlin.hpp"

namespace lac::adm {

// Projective direction, scaled so the first nonzero entry is 1.
struct Dir {
    Rat x, y;
    static Dir of(Rat a, Rat b) {
        if (a != 0) return {1, b / a};
        return {0, 1};
    }
    bool operator==(const Dir&) const = default;
};

// Parallel classes of lines plus the mode of every triple point.
struct State {
    const LineCombinatorics* c = nullptr;
    std::vector<Point> T;
    std::vector<int> parent;
    std::vector<std::optional<Dir>> dir;  // by root
    std::vector<char> mode;               // 0, 'P' or 'D'
    bool normalized = false;
    std::array<int, 3> base{-1, -1, -1};

    explicit State(const LineCombinatorics& cc) : c(&cc), T(cc.points_of_size(3)) {
        parent.resize(cc.n);
        std::iota(parent.begin(), parent.end(), 0);
        dir.resize(cc.n);
        mode.assign(T.size(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false on two different known directions
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return true;
        if (dir[a] && dir[b] && !(*dir[a] == *dir[b])) return false;
        if (!dir[a]) dir[a] = dir[b];
        parent[b] = a;
        return true;
    }
    bool set_dir(int line, const Dir& d) {
        const int r = find(line);
        if (dir[r]) return *dir[r] == d;
        dir[r] = d;
        for (int l = 0; l < c->n; ++l) {
            const int q = find(l);
            if (q != find(line) && dir[q] && *dir[q] == d && !unite(line, l)) return false;
        }
        return true;
    }
    std::size_t largest_class() {
        std::vector<std::size_t> cnt(c->n, 0);
        std::size_t best = 0;
        for (int l = 0; l < c->n; ++l) best = std::max(best, ++cnt[find(l)]);
        return best;
    }
};

// The linear system for a fully decided state; variables a_0..a_{n-1}, b_0..b_{n-1}.
inline ratlin::System build_system(State& s, std::vector<std::string>* labels = nullptr) {
    const int n = s.c->n;
    ratlin::System sys;
    sys.nv = 2 * n;
    auto row = [&]() { return std::vector<Rat>(2 * n); };
    auto add = [&](std::vector<Rat> r, Rat b, std::string label) {
        sys.add(std::move(r), std::move(b));
        if (labels) labels->push_back(std::move(label));
    };
    const int p = s.base[0], q = s.base[1];
    for (int k = 0; k < 4; ++k) {
        auto r = row();
        r[(k & 1) * n + (k < 2 ? p : q)] = 1;
        const bool one = (k == 0) || (k == 3);
        add(r, one ? 1 : 0, "normalize line " + std::to_string(k < 2 ? p : q));
    }
    for (int l = 0; l < n; ++l) {
        const auto& d = s.dir[s.find(l)];
        if (!d) continue;
        auto r = row();
        r[l] = d->y;
        r[n + l] = -d->x;
        add(r, 0, "direction of line " + std::to_string(l));
    }
    for (std::size_t t = 0; t < s.T.size(); ++t) {
        if (s.mode[t] != 'D') continue;
        for (int half = 0; half < 2; ++half) {
            auto r = row();
            for (int l : s.T[t]) r[half * n + l] = 1;
            add(r, 0, std::string("sum zero ") + (half ? "b" : "a") + " on triple " + std::to_string(t));
        }
    }
    for (int half = 0; half < 2; ++half) {
        auto r = row();
        for (int l = 0; l < n; ++l) r[half * n + l] = 1;
        add(r, 0, std::string("total ") + (half ? "b" : "a"));
    }
    return sys;
}

}  // namespace lac::adm
