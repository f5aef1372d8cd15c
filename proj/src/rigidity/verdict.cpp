#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "lac/linalg.hpp"
#include "lac/rigidity.hpp"

namespace lac {

std::string to_string(RigidStatus s) {
    switch (s) {
        case RigidStatus::rigid: return "rigid";
        case RigidStatus::not_rigid: return "not_rigid";
        default: return "inconclusive";
    }
}

namespace {

bool contains(const Point& p, int x) { return std::find(p.begin(), p.end(), x) != p.end(); }

// Backtracking over canonical matrices (zero last row) with entries in {-1, 0, 1}.
// Entries forced equal by sigma share a variable; checks fire as soon as their entries are set.
struct WitnessSearch {
    const LineCombinatorics& c;
    std::vector<Point> T;
    std::vector<int> sigma;
    std::size_t N;
    std::vector<int> var;              // entry -> variable, -1 for the fixed zero
    std::vector<int> order;            // variables in assignment order
    std::vector<std::vector<int>> due; // checks completed by step k
    std::vector<std::function<bool()>> checks;
    std::vector<int> val;
    long nodes = 0, budget;

    WitnessSearch(const LineCombinatorics& cc, const std::vector<int>& s, long b)
        : c(cc), T(cc.points_of_size(3)), sigma(s), N(cc.n), budget(b) {}

    int at(std::size_t j, std::size_t i) const {
        const int v = var[j * N + i];
        return v < 0 ? 0 : val[v];
    }

    void setup() {
        std::vector<int> parent(N * N + 1);
        std::iota(parent.begin(), parent.end(), 0);
        const int zero = static_cast<int>(N * N);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a), b = find(b);
            if (a == zero) std::swap(a, b);
            parent[a] = b;
        };
        for (std::size_t i = 0; i < N; ++i) unite(static_cast<int>((N - 1) * N + i), zero);
        for (std::size_t k = 0; k < T.size(); ++k)
            for (std::size_t i = 0; i < N; ++i)
                if (!contains(T[sigma[k]], static_cast<int>(i)))
                    for (int row : T[k]) unite(static_cast<int>(row * N + i), static_cast<int>(T[k][0] * N + i));
        // column-major order, so determinant checks on a few columns fire early
        std::vector<int> id(N * N + 1, -1);
        var.assign(N * N, -1);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                const int r = find(static_cast<int>(j * N + i));
                if (r == find(zero)) continue;
                if (id[r] < 0) {
                    id[r] = static_cast<int>(order.size());
                    order.push_back(id[r]);
                }
                var[j * N + i] = id[r];
            }
        val.assign(order.size(), 0);
        due.assign(order.size() + 1, {});
        auto ready = [&](const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
            int s = 0;
            for (auto [j, i] : cells) s = std::max(s, var[j * N + i] + 1);
            return s;
        };
        auto add = [&](std::vector<std::pair<std::size_t, std::size_t>> cells, std::function<bool()> f) {
            due[ready(cells)].push_back(static_cast<int>(checks.size()));
            checks.push_back(std::move(f));
        };
        auto det = [](long x1, long y1, long x2, long y2, long x3, long y3) {
            return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1);
        };
        const auto doubles = c.points_of_size(2);
        for (std::size_t k = 0; k < T.size(); ++k) {
            const Point P = T[k];
            for (const auto& Q : doubles) {
                std::vector<std::pair<std::size_t, std::size_t>> cells;
                for (int r : P) cells.push_back({r, Q[0]}), cells.push_back({r, Q[1]});
                add(cells, [this, P, Q, det] {
                    return det(at(P[0], Q[0]), at(P[0], Q[1]), at(P[1], Q[0]), at(P[1], Q[1]), at(P[2], Q[0]),
                               at(P[2], Q[1])) == 0;
                });
            }
            for (const auto& Q : T) {
                std::vector<std::pair<std::size_t, std::size_t>> cells;
                for (int r : P)
                    for (int q : Q) cells.push_back({r, q});
                for (int b : Q)
                    add(cells, [this, P, Q, b, det] {
                        auto s = [&](int r) { return long(at(r, Q[0]) + at(r, Q[1]) + at(r, Q[2])); };
                        return det(at(P[0], b), s(P[0]), at(P[1], b), s(P[1]), at(P[2], b), s(P[2])) == 0;
                    });
            }
            for (int i : T[sigma[k]]) {
                std::vector<std::pair<std::size_t, std::size_t>> cells;
                for (int r : P) cells.push_back({r, i});
                add(cells, [this, P, i] { return at(P[0], i) != at(P[1], i) || at(P[0], i) != at(P[2], i); });
            }
        }
        for (std::size_t j = 0; j + 1 < N; ++j) {
            std::vector<std::pair<std::size_t, std::size_t>> cells;
            for (std::size_t i = 0; i < N; ++i) cells.push_back({j, i});
            add(cells, [this, j] {
                long s = 0;
                for (std::size_t i = 0; i < N; ++i) s += at(j, i);
                return s == 0;
            });
        }
    }

    bool pass(std::size_t step) {
        for (int k : due[step])
            if (!checks[k]()) return false;
        return true;
    }

    std::optional<HomologyMatrix> run() {
        setup();
        if (!pass(0)) return std::nullopt;
        std::optional<HomologyMatrix> found;
        auto rec = [&](auto&& self, std::size_t k) -> bool {
            if (++nodes > budget) return true;
            if (k == order.size()) {
                HomologyMatrix A(N, N);
                for (std::size_t j = 0; j < N; ++j)
                    for (std::size_t i = 0; i < N; ++i) A(j, i) = at(j, i);
                if (!invertible_on_h(A)) return false;
                found = A;
                return true;
            }
            for (int x : {0, 1, -1}) {
                val[k] = x;
                if (pass(k + 1) && self(self, k + 1)) return true;
            }
            val[k] = 0;
            return false;
        };
        rec(rec, 0);
        return found;
    }
};

}  // namespace

std::optional<HomologyMatrix> find_witness(const LineCombinatorics& c, const std::vector<int>& sigma, long budget) {
    WitnessSearch s(c, sigma, budget);
    auto A = s.run();
    if (A && !check_admissibility(*A, c)) throw std::logic_error("find_witness: search produced a non-admissible matrix");
    return A;
}

namespace {

// With A diagonal, the triple-triple condition for Q = P forces the three diagonal
// entries of P to agree. The shape is the same for every P, so it is checked once on sample values.
bool diagonal_forced() {
    auto holds = [&](long x, long y, long z) {
        const long d[3] = {x, y, z};
        for (int b = 0; b < 3; ++b) {
            // rows of P, columns a and s = d_a e_a + d_b e_b + d_c e_c restricted to P
            long col[3] = {0, 0, 0}, sum[3] = {d[0], d[1], d[2]};
            col[b] = d[b];
            const long det = (col[1] - col[0]) * (sum[2] - sum[0]) - (col[2] - col[0]) * (sum[1] - sum[0]);
            if (det != 0) return false;
        }
        return true;
    };
    return holds(1, 1, 1) && holds(-1, -1, -1) && !holds(1, 2, 2) && !holds(2, 1, 2) && !holds(2, 2, 1) &&
           !holds(1, 2, 3) && !holds(1, -1, 1);
}

}  // namespace

RigidityReport rigidity_verdict(const LineCombinatorics& c, uint64_t seed, unsigned jobs) {
    RigidityReport r;
    if (c.max_multiplicity() > 3) {
        r.failing_step = "multiplicity above three";
        return r;
    }
    r.pointwise = pointwise_3_admissible(c, jobs);
    if (!r.pointwise.pass) {
        r.failing_step = "pointwise 3-admissibility";
        return r;
    }
    const auto T = c.points_of_size(3);
    if (T.size() <= 1) {
        r.failing_step = "fewer than two triple points";
        return r;
    }
    for (const auto& cand : psi3_candidates(c)) {
        CandidateDisposition d;
        d.sigma = cand.sigma;
        if (cand.from_aut) {
            d.disposition = "aut";
        } else {
            d.obstruction = obstruct_psi3(c, cand.sigma, seed);
            if (d.obstruction.obstructed) {
                d.disposition = "obstructed";
            } else if (auto w = find_witness(c, cand.sigma)) {
                d.disposition = "witness";
                if (!r.witness) r.witness = *w;
            } else {
                d.disposition = "unresolved";
                ++r.unresolved;
            }
        }
        r.candidates.push_back(std::move(d));
    }
    const auto conn = connectivity_checks(c);
    r.triple_chain_connected = conn.triple_chain_connected;
    r.off_column_coverage = conn.off_column_coverage;
    r.diagonal_derivation = diagonal_forced();
    if (r.witness) {
        r.verdict = RigidStatus::not_rigid;
    } else if (r.unresolved > 0) {
        r.failing_step = "unresolved triple permutation";
    } else if (!r.off_column_coverage) {
        r.failing_step = "off-column coverage";
    } else if (!r.diagonal_derivation) {
        r.failing_step = "diagonal derivation";
    } else if (!r.triple_chain_connected) {
        r.failing_step = "triple chain connectivity";
    } else {
        r.verdict = RigidStatus::rigid;
    }
    return r;
}

nlohmann::json to_json(const AdmissibilityVerdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    j["rule"] = v.rule;
    if (!v.vectors.empty()) {
        auto& a = j["vectors"] = nlohmann::json::array();
        for (const auto& x : v.vectors) a.push_back({x[0].get_str(), x[1].get_str()});
    }
    auto& leaves = j["leaves"] = nlohmann::json::array();
    for (const auto& l : v.leaves) {
        nlohmann::json e;
        auto& ch = e["choices"] = nlohmann::json::array();
        for (std::size_t k = 0; k < l.choices.size(); ++k)
            ch.push_back({{"triple", l.choices[k].first},
                          {"mode", std::string(1, l.choices[k].second)},
                          {"forced", static_cast<bool>(l.forced[k])}});
        e["outcome"] = l.outcome;
        if (!l.data.is_null()) e["data"] = l.data;
        leaves.push_back(std::move(e));
    }
    return j;
}

nlohmann::json to_json(const PointwiseReport& r) {
    auto subset = [](const SubsetVerdict& s) {
        return nlohmann::json{{"lines", s.lines}, {"status", to_string(s.status)}, {"rule", s.rule},
                              {"iso_class", s.iso_class}, {"is_m3", s.is_m3}};
    };
    nlohmann::json j{{"pass", r.pass},
                     {"subsets", r.subsets},
                     {"killed_by_closure", r.killed_by_closure},
                     {"iso_classes", r.iso_classes},
                     {"unknown", r.unknown}};
    j["admissible"] = nlohmann::json::array();
    for (const auto& s : r.admissible) j["admissible"].push_back(subset(s));
    j["offending"] = nlohmann::json::array();
    for (const auto& s : r.offending) j["offending"].push_back(subset(s));
    return j;
}

nlohmann::json to_json(const RigidityReport& r) {
    nlohmann::json j{{"verdict", to_string(r.verdict)},
                     {"failing_step", r.failing_step},
                     {"pointwise", to_json(r.pointwise)},
                     {"triple_chain_connected", r.triple_chain_connected},
                     {"off_column_coverage", r.off_column_coverage},
                     {"diagonal_derivation", r.diagonal_derivation},
                     {"unresolved", r.unresolved}};
    auto& cs = j["candidates"] = nlohmann::json::array();
    for (const auto& d : r.candidates) {
        nlohmann::json e{{"sigma", d.sigma}, {"disposition", d.disposition}};
        if (d.disposition != "aut")
            e["obstruction"] = {{"obstructed", d.obstruction.obstructed},
                                {"family_dim", d.obstruction.family_dim},
                                {"lower", d.obstruction.lower},
                                {"upper", d.obstruction.upper},
                                {"target", d.obstruction.target},
                                {"bound_free", d.obstruction.bound_free},
                                {"bound_span", d.obstruction.bound_span}};
        cs.push_back(std::move(e));
    }
    if (r.witness) j["witness"] = matrix_to_json(*r.witness);
    return j;
}

}  // namespace lac
