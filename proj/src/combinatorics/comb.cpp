#include <algorithm>
#include <set>
#include <stdexcept>

#include "lac/combinatorics.hpp"

namespace lac {

LineCombinatorics LineCombinatorics::make(int n, std::vector<Point> pts, bool complete_doubles) {
    LineCombinatorics c;
    c.n = n;
    for (auto& p : pts) std::sort(p.begin(), p.end());
    if (complete_doubles) {
        std::vector<char> cov(static_cast<std::size_t>(n) * n, 0);
        for (const auto& p : pts)
            for (int a : p)
                for (int b : p)
                    if (a >= 0 && b >= 0 && a < n && b < n) cov[a * n + b] = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!cov[i * n + j]) pts.push_back({i, j});
    }
    std::sort(pts.begin(), pts.end());
    c.points = std::move(pts);
    return c;
}

std::vector<Point> LineCombinatorics::points_of_size(std::size_t k) const {
    std::vector<Point> out;
    for (const auto& p : points)
        if (p.size() == k) out.push_back(p);
    return out;
}

std::vector<int> LineCombinatorics::pair_table() const {
    std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t k = 0; k < points.size(); ++k)
        for (int a : points[k])
            for (int b : points[k])
                if (a != b) t[a * n + b] = static_cast<int>(k);
    return t;
}

int LineCombinatorics::point_of(int i, int j) const {
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& p = points[k];
        if (std::binary_search(p.begin(), p.end(), i) && std::binary_search(p.begin(), p.end(), j))
            return static_cast<int>(k);
    }
    return -1;
}

std::size_t LineCombinatorics::max_multiplicity() const {
    std::size_t m = 0;
    for (const auto& p : points) m = std::max(m, p.size());
    return m;
}

std::vector<std::string> validate(const LineCombinatorics& c) {
    std::vector<std::string> v;
    const int n = c.n;
    std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
    for (const auto& p : c.points) {
        std::string name = "{";
        for (std::size_t k = 0; k < p.size(); ++k) name += (k ? "," : "") + std::to_string(p[k]);
        name += "}";
        if (p.size() < 2) v.push_back("point " + name + " has fewer than 2 lines");
        bool ok = true;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] < 0 || p[k] >= n) ok = false;
            if (k && p[k] == p[k - 1]) ok = false;
        }
        if (!ok) {
            v.push_back("point " + name + " has bad or repeated line ids");
            continue;
        }
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) ++count[p[a] * n + p[b]];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int k = count[i * n + j];
            std::string pr = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (k == 0) v.push_back("pair " + pr + " in no point");
            if (k > 1) v.push_back("pair " + pr + " in " + std::to_string(k) + " points");
        }
    return v;
}

long multiplicity(const LineCombinatorics& c) {
    if (!validate(c).empty()) throw std::invalid_argument("multiplicity: invalid combinatorics");
    long s = 1 - c.n;
    for (const auto& p : c.points) s += static_cast<long>(p.size()) - 1;
    return s;
}

namespace {
const std::vector<Point> kMacLaneTriples = {{0, 1, 2}, {3, 6, 7}, {0, 5, 6}, {1, 4, 7},
                                            {1, 3, 5}, {2, 4, 6}, {2, 5, 7}, {0, 3, 4}};
}

std::vector<std::string> builtin_names() {
    return {"m3", "maclane", "ceva", "rybnikov", "example7", "generic3"};
}

LineCombinatorics builtin(const std::string& name) {
    if (name == "m3") return LineCombinatorics::make(3, {{0, 1, 2}});
    if (name == "generic3") return LineCombinatorics::make(3, {});
    if (name == "maclane") return LineCombinatorics::make(8, kMacLaneTriples);
    if (name == "ceva")
        return LineCombinatorics::make(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}});
    if (name == "example7") return LineCombinatorics::make(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    if (name == "rybnikov") {
        std::vector<Point> t = kMacLaneTriples;
        // second MacLane copy: lines 3..7 become 8..12
        for (const auto& p : kMacLaneTriples) {
            if (p == Point{0, 1, 2}) continue;
            Point q;
            for (int l : p) q.push_back(l >= 3 ? l + 5 : l);
            t.push_back(q);
        }
        return LineCombinatorics::make(13, t);
    }
    throw std::invalid_argument("unknown builtin combinatorics: " + name);
}

LineCombinatorics apply_perm(const LineCombinatorics& c, const Perm& p) {
    std::vector<Point> pts;
    for (const auto& q : c.points) {
        Point r;
        for (int l : q) r.push_back(p.at(l));
        pts.push_back(r);
    }
    return LineCombinatorics::make(c.n, pts, false);
}

SubCombinatorics subcombinatorics(const LineCombinatorics& c, std::vector<int> lines) {
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    std::vector<int> inv(c.n, -1);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        if (lines[k] < 0 || lines[k] >= c.n) throw std::invalid_argument("subcombinatorics: bad line");
        inv[lines[k]] = static_cast<int>(k);
    }
    std::vector<Point> pts;
    for (const auto& p : c.points) {
        Point q;
        for (int l : p)
            if (inv[l] >= 0) q.push_back(inv[l]);
        if (q.size() >= 2) pts.push_back(q);
    }
    return {LineCombinatorics::make(static_cast<int>(lines.size()), pts, false), lines};
}

nlohmann::json to_json(const LineCombinatorics& c) {
    return {{"lines", c.n}, {"points", c.points}};
}

LineCombinatorics comb_from_json(const nlohmann::json& j) {
    return LineCombinatorics::make(j.at("lines").get<int>(), j.at("points").get<std::vector<Point>>(), false);
}

}  // namespace lac
