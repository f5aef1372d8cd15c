#include <algorithm>
#include <stdexcept>
#include <thread>

#include "lac/homtriv.hpp"

namespace lac {

namespace {

struct RelationBlock {
    std::vector<std::vector<Int>> rows;  // gr1_rank rows over the variables
    std::vector<Int> rhs;
};

RelationBlock build_block(const Word& wa, const Word& wb, int r, const std::vector<TripleKey>& vars,
                          const Gr1Quotient& q) {
    const TruncatedClass ca = reduce_word(wa, r), cb = reduce_word(wb, r);
    if (ca.deg0 != cb.deg0) throw MatchError("build_system: degree-0 parts differ");
    TruncatedClass diff;
    diff.deg1 = ca.deg1;
    diff += -TruncatedClass{{}, cb.deg1};
    const std::vector<Int> d = q.coords(diff);
    RelationBlock blk;
    blk.rhs.resize(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) blk.rhs[i] = -d[i];
    blk.rows.assign(d.size(), std::vector<Int>(vars.size()));
    for (std::size_t n = 0; n < vars.size(); ++n) {
        const auto [k, a, b] = vars[n];
        // c_{uv} [(t_u - 1) alpha_v - (t_v - 1) alpha_u], coefficient of p^k_{ab}
        TruncatedClass col;
        for (const auto& [uv, c] : ca.deg0) {
            if (uv.second == k) col.add1(uv.first, a, b, c);
            if (uv.first == k) col.add1(uv.second, a, b, -c);
        }
        if (col.deg1.empty()) continue;
        const std::vector<Int> v = q.coords(col);
        for (std::size_t i = 0; i < v.size(); ++i) blk.rows[i][n] = v[i];
    }
    return blk;
}

}  // namespace

ObstructionSystem build_system(const ZariskiPresentation& pa, const ZariskiPresentation& pb,
                               const LineCombinatorics& c, int decone, unsigned jobs) {
    if (pa.r != pb.r || pa.relations.size() != pb.relations.size())
        throw MatchError("build_system: presentations are not matched");
    if (pa.r != c.n - 1) throw std::invalid_argument("build_system: generator count does not match");
    ObstructionSystem sys;
    sys.r = pa.r;
    for (int k = 1; k <= sys.r; ++k)
        for (int u = 1; u <= sys.r; ++u)
            for (int v = u + 1; v <= sys.r; ++v) sys.variables.push_back({k, u, v});
    const Gr1Quotient q = gr1_quotient(c, decone);
    sys.gr1_rank = q.Q.rows;

    const std::size_t m = pa.relations.size();
    std::vector<RelationBlock> blocks(m);
    std::vector<std::exception_ptr> errs(m);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(m ? m : 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < m; i += jobs) try {
                    blocks[i] = build_block(pa.relations[i], pb.relations[i], sys.r, sys.variables, q);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    sys.A = IntMatrix(0, sys.variables.size());
    std::vector<char> used(sys.variables.size(), 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t g = 0; g < blocks[i].rows.size(); ++g) {
            const auto& row = blocks[i].rows[g];
            const bool zero = std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; });
            if (zero && blocks[i].rhs[g] == 0) {
                ++sys.zero_rows_dropped;
                continue;
            }
            for (std::size_t n = 0; n < row.size(); ++n)
                if (row[n] != 0) used[n] = 1;
            sys.A.append_row(row);
            sys.b.push_back(blocks[i].rhs[g]);
            sys.row_tags.push_back({i, g});
        }
    for (std::size_t n = 0; n < used.size(); ++n)
        if (used[n]) sys.appearing.push_back(n);
    return sys;
}

HomtrivVerdict solve(const ObstructionSystem& sys) {
    // restrict to the occurring variables; the others are free
    IntMatrix A(sys.A.rows, sys.appearing.size());
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) A(i, j) = sys.A(i, sys.appearing[j]);
    const HermiteSolution h = hermite_solve(A, sys.b, false);
    HomtrivVerdict v;
    v.rational_feasible = h.rational_feasible;
    v.integer_feasible = h.integer_feasible;
    v.rank = h.rank;
    v.coordinates = h.coords;
    if (!h.rational_feasible) return v;
    v.dimension = sys.variables.size() - h.rank;
    v.dimension_appearing = sys.appearing.size() - h.rank;
    v.obstructing_primes = h.obstructing_primes;
    if (h.integer_feasible) {
        v.witness.assign(sys.variables.size(), Int(0));
        for (std::size_t j = 0; j < sys.appearing.size(); ++j) v.witness[sys.appearing[j]] = h.x[j];
        if (!verify_witness(sys, v.witness)) throw std::logic_error("homtriv: witness failed verification");
    }
    return v;
}

bool verify_witness(const ObstructionSystem& sys, const std::vector<Int>& p) {
    if (p.size() != sys.variables.size()) return false;
    return sys.A.apply(p) == sys.b;
}

nlohmann::json to_json(const HomtrivVerdict& v) {
    nlohmann::json primes = nlohmann::json::array();
    for (const auto& p : v.obstructing_primes) primes.push_back(p.get_str());
    nlohmann::json j{{"rational_feasible", v.rational_feasible},
                     {"integer_feasible", v.integer_feasible},
                     {"rank", v.rank},
                     {"obstructing_primes", primes}};
    if (v.rational_feasible) {
        j["dimension"] = v.dimension;
        j["dimension_appearing"] = v.dimension_appearing;
    }
    if (v.integer_feasible) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& x : v.witness) w.push_back(x.get_str());
        j["witness"] = w;
    }
    return j;
}

}  // namespace lac
