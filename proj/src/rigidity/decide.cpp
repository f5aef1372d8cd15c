#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "decide_state.hpp"

namespace lac {

using adm::Dir;
using adm::State;

namespace {

nlohmann::json rats(const std::vector<Rat>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : v) j.push_back(x.get_str());
    return j;
}

std::vector<Rat> unit(std::size_t n, std::size_t k) {
    std::vector<Rat> e(n);
    e[k] = 1;
    return e;
}

// Applies one mode choice; returns a contradiction tag or "".
std::string apply_choice(State& s, int t, char m) {
    const Point& P = s.T[t];
    s.mode[t] = m;
    if (m == 'P') {
        if (!s.unite(P[0], P[1]) || !s.unite(P[0], P[2])) return "clash";
    } else {
        if (s.find(P[0]) == s.find(P[1]) || s.find(P[0]) == s.find(P[2]) || s.find(P[1]) == s.find(P[2]))
            return "split";
        if (!s.normalized) {
            s.normalized = true;
            s.base = {P[0], P[1], P[2]};
            s.set_dir(P[0], Dir::of(1, 0));
            s.set_dir(P[1], Dir::of(0, 1));
            s.set_dir(P[2], Dir::of(1, 1));
        }
    }
    return "";
}

// Contradictions visible without linear algebra.
std::string structural(State& s) {
    if (s.largest_class() + 1 >= static_cast<std::size_t>(s.c->n)) return "collapse";
    for (std::size_t t = 0; t < s.T.size(); ++t) {
        if (s.mode[t] != 'D') continue;
        const Point& P = s.T[t];
        if (s.find(P[0]) == s.find(P[1]) || s.find(P[0]) == s.find(P[2]) || s.find(P[1]) == s.find(P[2]))
            return "split";
    }
    return "";
}

// Forced mode for an undecided triple, or 0.
char forced_mode(State& s, int t) {
    const Point& P = s.T[t];
    const int a = s.find(P[0]), b = s.find(P[1]), c = s.find(P[2]);
    if (a == b || a == c || b == c) return 'P';
    int known = (s.dir[a] ? 1 : 0) + (s.dir[b] ? 1 : 0) + (s.dir[c] ? 1 : 0);
    return known >= 2 ? 'D' : 0;
}

// Lines meeting in a double point are parallel.
State initial_state(const LineCombinatorics& c) {
    State s(c);
    for (const auto& P : c.points_of_size(2)) s.unite(P[0], P[1]);
    return s;
}

struct Search {
    const LineCombinatorics& c;
    std::vector<AdmLeaf> leaves;
    std::optional<std::vector<Vec2>> cert;
    bool any_unresolved = false;

    // Generic point of the solution set, scaled to integers.
    std::optional<std::vector<Vec2>> certificate(const ratlin::Reduced& red, std::size_t nv) {
        const int n = c.n;
        const std::size_t nfree = nv - red.pivots.size();
        std::mt19937_64 rng(0x61646d31ULL);
        std::uniform_int_distribution<int> dist(-9, 9);
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<Rat> params(nfree);
            for (auto& x : params) x = attempt == 0 ? Rat(0) : Rat(dist(rng));
            const auto x = ratlin::point(red, nv, params);
            Int den = 1;
            for (const auto& v : x) den = lcm(den, Int(v.get_den()));
            std::vector<Vec2> out(n);
            Int g = 0;
            for (int l = 0; l < n; ++l) {
                for (int h = 0; h < 2; ++h) {
                    Rat v = x[h * n + l] * Rat(den);
                    out[l][h] = v.get_num();
                    g = gcd(g, out[l][h]);
                }
            }
            if (g > 1)
                for (auto& v : out) v[0] /= g, v[1] /= g;
            if (check_certificate(c, out)) return out;
        }
        return std::nullopt;
    }

    // Linear stage of a fully decided state.
    void leaf(State& s, AdmLeaf L) {
        nlohmann::json learned = nlohmann::json::array();
        for (;;) {
            std::vector<std::string> labels;
            const auto sys = adm::build_system(s, &labels);
            const auto red = ratlin::reduce(sys);
            const std::size_t m = sys.M.size();
            if (red.inconsistency) {
                L.outcome = "inconsistent";
                L.data = {{"multipliers", rats(*red.inconsistency)}, {"rows", labels}, {"learned", learned}};
                return leaves.push_back(std::move(L));
            }
            const int n = c.n;
            std::vector<std::optional<std::pair<std::vector<Rat>, Rat>>> fa(n), fb(n);
            for (int l = 0; l < n; ++l) {
                fa[l] = ratlin::derive(red, unit(sys.nv, l), m);
                fb[l] = ratlin::derive(red, unit(sys.nv, n + l), m);
                if (fa[l] && fb[l] && fa[l]->second == 0 && fb[l]->second == 0) {
                    L.outcome = "zero_line";
                    L.data = {{"line", l},
                              {"multipliers_a", rats(fa[l]->first)},
                              {"multipliers_b", rats(fb[l]->first)},
                              {"rows", labels},
                              {"learned", learned}};
                    return leaves.push_back(std::move(L));
                }
            }
            std::vector<int> stuck;
            for (int l = 0; l < n; ++l)
                if (!s.dir[s.find(l)]) stuck.push_back(l);
            if (stuck.empty()) {
                if (auto v = certificate(red, sys.nv)) {
                    L.outcome = "admissible";
                    L.data = {{"learned", learned}};
                    if (!cert) cert = v;
                } else {
                    L.outcome = "unresolved";
                    any_unresolved = true;
                }
                return leaves.push_back(std::move(L));
            }
            // a stuck line with a determined nonzero vector fixes the direction of its class
            bool progress = false;
            for (int l : stuck)
                if (fa[l] && fb[l]) {
                    const Dir d = Dir::of(fa[l]->second, fb[l]->second);
                    learned.push_back({{"line", l}, {"x", d.x.get_str()}, {"y", d.y.get_str()}});
                    const std::string why = s.set_dir(l, d) ? structural(s) : "clash";
                    if (!why.empty()) {
                        L.outcome = why;
                        L.data = {{"learned", learned}};
                        return leaves.push_back(std::move(L));
                    }
                    progress = true;
                    break;
                }
            if (progress) continue;
            label_search(s, std::move(L), stuck, learned);
            return;
        }
    }

    // Tries every known direction on each stuck class; only ever produces certificates.
    void label_search(State& s, AdmLeaf L, const std::vector<int>& stuck, const nlohmann::json& learned) {
        std::vector<int> roots;
        for (int l : stuck)
            if (std::find(roots.begin(), roots.end(), s.find(l)) == roots.end()) roots.push_back(s.find(l));
        std::vector<Dir> known;
        for (int l = 0; l < c.n; ++l) {
            const auto& d = s.dir[s.find(l)];
            if (d && std::find(known.begin(), known.end(), *d) == known.end()) known.push_back(*d);
        }
        std::size_t total = 1;
        for (std::size_t k = 0; k < roots.size() && total <= 4096; ++k) total *= known.size();
        for (std::size_t code = 0; total <= 4096 && code < total; ++code) {
            State t = s;
            std::size_t x = code;
            bool ok = true;
            for (int r : roots) {
                ok = ok && t.set_dir(r, known[x % known.size()]);
                x /= known.size();
            }
            if (!ok || !structural(t).empty()) continue;
            const auto sys = adm::build_system(t);
            const auto red = ratlin::reduce(sys);
            if (red.inconsistency) continue;
            if (auto v = certificate(red, sys.nv)) {
                L.outcome = "admissible";
                L.data = {{"learned", learned}, {"labelled_classes", roots.size()}};
                if (!cert) cert = v;
                return leaves.push_back(std::move(L));
            }
        }
        L.outcome = "unresolved";
        L.data = {{"learned", learned}, {"stuck_classes", roots.size()}};
        any_unresolved = true;
        leaves.push_back(std::move(L));
    }

    void run(State s, AdmLeaf path) {
        // propagate forced modes to a fixpoint
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t t = 0; t < s.T.size(); ++t) {
                if (s.mode[t]) continue;
                const char m = forced_mode(s, static_cast<int>(t));
                if (!m) continue;
                path.choices.push_back({static_cast<int>(t), m});
                path.forced.push_back(true);
                std::string why = apply_choice(s, static_cast<int>(t), m);
                if (why.empty()) why = structural(s);
                if (!why.empty()) {
                    path.outcome = why;
                    return leaves.push_back(std::move(path));
                }
                changed = true;
            }
        }
        int next = -1;
        for (std::size_t t = 0; t < s.T.size() && next < 0; ++t)
            if (!s.mode[t]) next = static_cast<int>(t);
        if (next < 0) {
            if (!s.normalized) {
                path.outcome = "no_rank_two";
                return leaves.push_back(std::move(path));
            }
            return leaf(s, std::move(path));
        }
        for (char m : {'P', 'D'}) {
            State t = s;
            AdmLeaf p = path;
            p.choices.push_back({next, m});
            p.forced.push_back(false);
            std::string why = apply_choice(t, next, m);
            if (why.empty()) why = structural(t);
            if (!why.empty()) {
                p.outcome = why;
                leaves.push_back(std::move(p));
                continue;
            }
            run(std::move(t), std::move(p));
        }
    }
};

// Doubles plus the unconditional rule: two parallel members make a triple parallel.
State closure(const LineCombinatorics& c) {
    State s = initial_state(c);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& P : s.T) {
            const int a = s.find(P[0]), b = s.find(P[1]), d = s.find(P[2]);
            if ((a == b) + (a == d) + (b == d) == 1) {
                s.unite(P[0], P[1]);
                s.unite(P[0], P[2]);
                changed = true;
            }
        }
    }
    return s;
}

}  // namespace

bool parallel_closure_collapses(const LineCombinatorics& c) {
    State s = closure(c);
    return s.largest_class() + 1 >= static_cast<std::size_t>(c.n);
}

std::optional<std::array<std::vector<int>, 3>> general_position_split(const LineCombinatorics& c) {
    const int n = c.n;
    auto dbl = [&](int a, int b) {
        const int p = c.point_of(a, b);
        return p >= 0 && c.points[p].size() == 2;
    };
    for (const auto& D : c.points_of_size(2)) {
        std::vector<int> L1{D[0]}, L2{D[1]};
        for (int x = 0; x < n; ++x) {
            if (x == D[0] || x == D[1]) continue;
            if (std::all_of(L2.begin(), L2.end(), [&](int y) { return dbl(x, y); }))
                L1.push_back(x);
            else if (std::all_of(L1.begin(), L1.end(), [&](int y) { return dbl(x, y); }))
                L2.push_back(x);
        }
        std::vector<int> L0;
        std::vector<char> side(n, 0);
        for (int x : L1) side[x] = 1;
        for (int x : L2) side[x] = 2;
        for (int x = 0; x < n; ++x)
            if (!side[x]) L0.push_back(x);
        // lines of L0 without a point meeting L0 only in themselves
        int loose = 0;
        for (int l : L0) {
            bool hit = false;
            for (const auto& P : c.points) {
                if (std::find(P.begin(), P.end(), l) == P.end()) continue;
                hit = hit || std::count_if(P.begin(), P.end(), [&](int x) { return side[x] == 0; }) == 1;
            }
            if (!hit) ++loose;
        }
        if (loose <= 1) return std::array<std::vector<int>, 3>{L0, L1, L2};
    }
    return std::nullopt;
}

AdmissibilityVerdict decide_3_admissible(const LineCombinatorics& c) {
    if (c.n > 13) throw std::invalid_argument("decide_3_admissible: more than 13 lines");
    if (c.max_multiplicity() > 3) throw std::invalid_argument("decide_3_admissible: point of multiplicity > 3");
    AdmissibilityVerdict v;
    State s0 = closure(c);
    if (s0.largest_class() + 1 >= static_cast<std::size_t>(c.n)) {
        v.status = AdmStatus::not_admissible;
        v.rule = general_position_split(c) ? "general_position" : "closure";
        AdmLeaf L;
        L.outcome = "collapse";
        v.leaves.push_back(L);
        return v;
    }
    Search S{c, {}, std::nullopt, false};
    S.run(initial_state(c), {});
    v.rule = "branch";
    v.leaves = std::move(S.leaves);
    if (S.cert) {
        v.status = AdmStatus::admissible;
        v.vectors = *S.cert;
    } else {
        v.status = S.any_unresolved ? AdmStatus::unknown : AdmStatus::not_admissible;
    }
    return v;
}

bool replay_trace(const LineCombinatorics& c, const AdmissibilityVerdict& v) {
    if (v.status == AdmStatus::admissible) return check_certificate(c, v.vectors);
    if (v.status != AdmStatus::not_admissible) return false;
    if (v.rule != "branch") {
        State s = closure(c);
        return s.largest_class() + 1 >= static_cast<std::size_t>(c.n);
    }
    // coverage: every branched choice has its sibling
    for (const auto& L : v.leaves)
        for (std::size_t k = 0; k < L.choices.size(); ++k) {
            if (L.forced[k]) continue;
            const char other = L.choices[k].second == 'P' ? 'D' : 'P';
            bool found = false;
            for (const auto& M : v.leaves) {
                if (M.choices.size() <= k || M.choices[k] != std::make_pair(L.choices[k].first, other)) continue;
                if (std::equal(L.choices.begin(), L.choices.begin() + k, M.choices.begin())) found = true;
            }
            if (!found) return false;
        }
    for (const auto& L : v.leaves) {
        State s = initial_state(c);
        std::string why;
        for (std::size_t k = 0; k < L.choices.size(); ++k) {
            const auto [t, m] = L.choices[k];
            if (!why.empty() || s.mode[t]) return false;
            if (L.forced[k] && forced_mode(s, t) != m) return false;
            why = apply_choice(s, t, m);
            if (why.empty()) why = structural(s);
        }
        if (!L.data.contains("learned")) {
            if (L.outcome == "no_rank_two") {
                if (!why.empty() || s.normalized || std::count(s.mode.begin(), s.mode.end(), 0)) return false;
            } else if (why != L.outcome) {
                return false;
            }
            continue;
        }
        if (!why.empty() || std::count(s.mode.begin(), s.mode.end(), 0)) return false;
        for (const auto& d : L.data.at("learned"))
            if (why.empty()) {
                const Dir dd{parse_rat(d.at("x").get<std::string>()), parse_rat(d.at("y").get<std::string>())};
                why = s.set_dir(d.at("line").get<int>(), dd) ? structural(s) : "clash";
            }
        if (L.outcome == "clash" || L.outcome == "collapse" || L.outcome == "split") {
            if (why != L.outcome) return false;
            continue;
        }
        if (!why.empty()) return false;
        const auto sys = adm::build_system(s);
        auto vec = [](const nlohmann::json& j) {
            std::vector<Rat> out;
            for (const auto& x : j) out.push_back(parse_rat(x.get<std::string>()));
            return out;
        };
        const std::size_t n = c.n;
        if (L.outcome == "inconsistent") {
            const auto y = vec(L.data.at("multipliers"));
            Rat val = 0;
            for (std::size_t i = 0; i < y.size() && i < sys.rhs.size(); ++i) val += y[i] * sys.rhs[i];
            if (val == 0 || !ratlin::verify(sys, y, std::vector<Rat>(sys.nv), val)) return false;
        } else if (L.outcome == "zero_line") {
            const std::size_t l = L.data.at("line").get<std::size_t>();
            if (!ratlin::verify(sys, vec(L.data.at("multipliers_a")), unit(sys.nv, l), 0)) return false;
            if (!ratlin::verify(sys, vec(L.data.at("multipliers_b")), unit(sys.nv, n + l), 0)) return false;
        } else {
            return false;
        }
    }
    return true;
}

}  // namespace lac
