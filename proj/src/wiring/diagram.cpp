#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lac/wiring.hpp"

namespace lac {

namespace {

struct Sweeper {
    const AffineModel& am;
    const std::size_t r;
    Rat tilt;
    std::mt19937_64 rng{0x6c61632dULL};
    std::vector<int> perm;  // strand index (0-based) at each position

    Sweeper(const AffineModel& m, const Rat& t) : am(m), r(m.r()), tilt(t) {}

    Rat f(const Cyclo& y) const { return y.re() + tilt * y.im3(); }

    std::vector<Rat> re_values(const Cyclo& X) const {
        std::vector<Rat> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = f(am.value(i, X));
        return v;
    }
    bool distinct_re(const Cyclo& X) const {
        auto v = re_values(X);
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    }
    std::vector<int> sorted_at(const Cyclo& X) const {
        auto v = re_values(X);
        std::vector<int> p(r);
        std::iota(p.begin(), p.end(), 0);
        std::sort(p.begin(), p.end(), [&](int a, int b) { return v[a] < v[b]; });
        return p;
    }
    Cyclo jitter(const Cyclo& P, const Rat& e, unsigned j) {
        if (j == 0) return P;
        std::uniform_int_distribution<int> d(-50, 50);
        Rat u(d(rng), 1000), v(d(rng), 1000);
        u.canonicalize();
        v.canonicalize();
        return P + Cyclo(u * e, v * e);
    }

    // Letters for the straight segment P -> Q, or nullopt when some crossing is degenerate.
    std::optional<std::vector<int>> segment(const Cyclo& P, const Cyclo& Q, std::vector<int>& p) const {
        std::vector<Rat> al(r), be(r);
        for (std::size_t i = 0; i < r; ++i) {
            al[i] = f(am.value(i, P));
            be[i] = f(am.value(i, Q)) - al[i];
        }
        struct Cross {
            Rat t;
            int i, j;
        };
        std::vector<Cross> cr;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) {
                if (be[i] == be[j]) continue;
                Rat t = (al[j] - al[i]) / (be[i] - be[j]);
                if (t == 0 || t == 1) return std::nullopt;
                if (t < 0 || t > 1) continue;
                cr.push_back({t, static_cast<int>(i), static_cast<int>(j)});
            }
        std::sort(cr.begin(), cr.end(), [](const Cross& a, const Cross& b) { return a.t < b.t; });
        std::vector<int> letters;
        for (std::size_t k = 0; k < cr.size();) {
            std::size_t e = k;
            while (e < cr.size() && cr[e].t == cr[k].t) ++e;
            std::vector<char> used(r, 0);
            for (std::size_t q = k; q < e; ++q) {
                if (used[cr[q].i] || used[cr[q].j]) return std::nullopt;
                used[cr[q].i] = used[cr[q].j] = 1;
            }
            const Cyclo X = P + (Q - P) * Cyclo(cr[k].t);
            for (std::size_t q = k; q < e; ++q) {
                auto pi = std::find(p.begin(), p.end(), cr[q].i) - p.begin();
                auto pj = std::find(p.begin(), p.end(), cr[q].j) - p.begin();
                if (std::abs(pi - pj) != 1) return std::nullopt;
                const auto lo = std::min(pi, pj);
                const int A = p[lo], B = p[lo + 1];
                const Rat ia = am.value(A, X).im3(), ib = am.value(B, X).im3();
                if (ia == ib) return std::nullopt;
                letters.push_back(ia < ib ? static_cast<int>(lo) + 1 : -(static_cast<int>(lo) + 1));
                std::swap(p[lo], p[lo + 1]);
            }
            k = e;
        }
        return letters;
    }
};

Rat vertex_eps(const Cyclo& X, const std::vector<Vertex>& vs) {
    Rat d(1);
    for (const auto& v : vs)
        if (!(v.x == X)) d = std::min(d, (X - v.x).norm());
    Rat e(1);
    while (e * e * 16 >= d) e /= 2;
    return e;
}

}  // namespace

namespace {

struct Exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WiringDiagram sweep(const AffineModel& am, const std::vector<Vertex>& vs, const Rat& tilt, unsigned budget) {
    Sweeper S(am, tilt);
    WiringDiagram d;
    d.r = static_cast<int>(am.r());
    d.ids = am.ids;
    d.tilt = tilt;

    Rat minre = vs.empty() ? Rat(0) : vs.front().x.re();
    for (const auto& v : vs) minre = std::min(minre, v.x.re());
    const Cyclo base(minre - 1);
    Cyclo cur = base;
    for (unsigned j = 1; !S.distinct_re(cur); ++j) {
        if (j > budget) throw Exhausted("wiring: perturbation budget exhausted at base point");
        Rat s(static_cast<long>(j), 97);
        s.canonicalize();
        cur = base + Cyclo(Rat(0), s);
    }
    S.perm = S.sorted_at(cur);
    for (int s : S.perm) d.initial.push_back(s + 1);

    // Move cur to a jittered copy of target, appending letters to word.
    auto travel = [&](const Cyclo& target, const Rat& e, std::vector<int>& word) {
        for (unsigned j = 0; j <= budget; ++j) {
            Cyclo T = S.jitter(target, e, j);
            if (!S.distinct_re(T)) continue;
            std::vector<int> p = S.perm;
            auto L = S.segment(cur, T, p);
            if (!L) continue;
            S.perm = std::move(p);
            word.insert(word.end(), L->begin(), L->end());
            cur = T;
            return;
        }
        throw Exhausted("wiring: perturbation budget exhausted");
    };
    // Approach a vertex from the left, shrinking e until its strands are adjacent.
    auto approach = [&](const Vertex& v, Rat& e, std::vector<int>& word) -> std::size_t {
        for (int shrink = 0; shrink < 24; ++shrink, e /= 2)
            for (unsigned j = 0; j <= budget / 8; ++j) {
                Cyclo T = S.jitter(v.x - Cyclo(e), e, j);
                if (!S.distinct_re(T)) continue;
                std::vector<int> p = S.perm;
                auto L = S.segment(cur, T, p);
                if (!L) continue;
                std::vector<std::size_t> pos;
                for (int g : v.strands) pos.push_back(std::find(p.begin(), p.end(), g - 1) - p.begin());
                std::sort(pos.begin(), pos.end());
                if (pos.back() - pos.front() != pos.size() - 1) break;  // not a jitter issue
                S.perm = std::move(p);
                word.insert(word.end(), L->begin(), L->end());
                cur = T;
                return pos.front();
            }
        throw Exhausted("wiring: vertex block never consecutive");
    };

    d.braids.emplace_back();
    for (const auto& v : vs) {
        Rat e = vertex_eps(v.x, vs);
        const std::size_t start = approach(v, e, d.braids.back());
        d.vertices.push_back({start, v.strands, v.x});
        d.braids.emplace_back();
        // pass below the vertex
        travel(v.x + Cyclo(e, -2 * e), e, d.braids.back());
        travel(v.x + Cyclo(e), e, d.braids.back());
    }
    for (int s : S.sorted_at(cur)) d.terminal.push_back(s + 1);
    if (replay(d) != d.terminal) throw std::logic_error("wiring: replay disagrees with terminal order");
    return d;
}

}  // namespace

WiringDiagram wiring_diagram(const AffineModel& am, unsigned budget) {
    const auto vs = affine_vertices(am);
    // tilt 0 first; the others handle fibres where an unrelated strand shares a real part
    const std::vector<Rat> tilts{Rat(0), Rat(1, 7), Rat(-1, 5), Rat(2, 11), Rat(-3, 13), Rat(5, 17)};
    std::string last;
    for (const auto& t : tilts) try {
            return sweep(am, vs, t, budget);
        } catch (const Exhausted& ex) {
            last = ex.what();
        }
    throw std::runtime_error(last);
}

WiringDiagram conjugate_diagram(const WiringDiagram& d) {
    WiringDiagram c = d;
    for (auto& w : c.braids)
        for (auto& l : w) l = -l;
    for (auto& v : c.vertices) v.x = v.x.conj();
    c.tilt = -d.tilt;
    return c;
}

std::vector<int> replay(const WiringDiagram& d) {
    if (d.braids.size() != d.vertices.size() + 1) throw std::invalid_argument("diagram: braid/vertex count");
    std::vector<int> p = d.initial;
    auto apply = [&](const std::vector<int>& w) {
        for (int l : w) {
            const int k = std::abs(l);
            if (k < 1 || k >= static_cast<int>(p.size())) throw std::invalid_argument("diagram: bad letter");
            std::swap(p[k - 1], p[k]);
        }
    };
    for (std::size_t k = 0; k < d.vertices.size(); ++k) {
        apply(d.braids[k]);
        const auto& v = d.vertices[k];
        if (v.start + v.strands.size() > p.size()) throw std::invalid_argument("diagram: block out of range");
        Point blk(p.begin() + v.start, p.begin() + v.start + v.strands.size());
        std::sort(blk.begin(), blk.end());
        if (blk != v.strands) throw std::invalid_argument("diagram: vertex block not consecutive");
    }
    apply(d.braids.back());
    return p;
}

nlohmann::json to_json(const WiringDiagram& d) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : d.vertices) vs.push_back({{"start", v.start}, {"strands", v.strands}, {"x", to_json(v.x)}});
    return {{"r", d.r},           {"initial", d.initial},   {"braids", d.braids},
            {"vertices", vs},     {"terminal", d.terminal}, {"ids", d.ids},
            {"tilt", d.tilt.get_str()}};
}

WiringDiagram diagram_from_json(const nlohmann::json& j) {
    WiringDiagram d;
    d.r = j.at("r").get<int>();
    d.initial = j.at("initial").get<std::vector<int>>();
    d.braids = j.at("braids").get<std::vector<std::vector<int>>>();
    for (const auto& v : j.at("vertices"))
        d.vertices.push_back({v.at("start").get<std::size_t>(), v.at("strands").get<Point>(),
                              v.contains("x") ? cyclo_from_json(v.at("x")) : Cyclo(0)});
    d.terminal = j.value("terminal", std::vector<int>{});
    d.ids = j.value("ids", std::vector<int>{});
    if (j.contains("tilt")) d.tilt = parse_rat(j.at("tilt").get<std::string>());
    return d;
}

}  // namespace lac
