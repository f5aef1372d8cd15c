#pragma once
// Seeded property checks shared by the acceptance run.
#include <algorithm>
#include <numeric>
#include <random>

#include "lac/alexander.hpp"
#include "lac/linalg.hpp"
#include "lac/presentation.hpp"

namespace props {

using namespace lac;

inline Word commutator_word(std::mt19937_64& rng, int r, std::size_t max_len) {
    std::uniform_int_distribution<int> gen(1, r), sign(0, 1);
    const std::size_t half = 1 + rng() % (max_len / 2);
    Word a;
    for (std::size_t i = 0; i < half; ++i) a.push_back(sign(rng) ? gen(rng) : -gen(rng));
    Word b = inverse(a);
    std::shuffle(b.begin(), b.end(), rng);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// count words, r <= 7, length <= 40
inline bool order_independence(uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
        const int r = 2 + static_cast<int>(rng() % 6);
        const Word w = commutator_word(rng, r, 40);
        std::vector<int> order(r);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        if (!(reduce_word(w, r, order) == reduce_word(w, r))) return false;
    }
    return true;
}

inline bool jacobi_words_vanish(int r) {
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            for (int k = 1; k <= r; ++k) {
                Word w = commutator(commutator({i}, {j}), {k});
                w = concat(w, commutator(commutator({j}, {k}), {i}));
                w = concat(w, commutator(commutator({k}, {i}), {j}));
                if (!reduce_word(w, r).is_zero()) return false;
            }
    return true;
}

inline bool shear_independence() {
    const auto c = builtin("maclane");
    const auto a = maclane_arrangement(false);
    std::vector<M2Rank> ranks;
    std::vector<std::map<RelationTag, std::map<PairKey, long>>> deg0;
    for (Rat s : {Rat(1, 3), Rat(-3, 7)}) {
        const auto p = from_wiring(wiring_diagram(decone_and_shear(a, s)));
        ranks.push_back(m2_rank(c, p.relations, c.n - 1));
        auto& m = deg0.emplace_back();
        for (std::size_t i = 0; i < p.relations.size(); ++i) m[p.tags[i]] = reduce_word(p.relations[i], p.r).deg0;
    }
    return deg0[0] == deg0[1] && ranks[0].gr0 == ranks[1].gr0 && ranks[0].gr1 == ranks[1].gr1 &&
           ranks[0].torsion == ranks[1].torsion;
}

inline bool conjugation_involution() {
    const auto d = wiring_diagram(decone_generic(maclane_arrangement(false)));
    const auto r = wiring_diagram(decone_generic(realize_rybnikov("++").arr));
    return to_json(conjugate_diagram(conjugate_diagram(d))) == to_json(d) &&
           to_json(conjugate_diagram(conjugate_diagram(r))) == to_json(r);
}

inline bool snf_hnf_reconstruction(uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int t = 0; t < count; ++t) {
        IntMatrix M(1 + rng() % 7, 1 + rng() % 7);
        for (auto& x : M.a) x = d(rng);
        const auto s = smith(M, true);
        if (!(s.U * M * s.V == s.D)) return false;
        for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
            if (s.factors[i + 1] % s.factors[i] != 0) return false;
        const auto e = hnf(M, true);
        const IntMatrix UM = e.U * M;
        for (std::size_t i = 0; i < M.rows; ++i)
            for (std::size_t j = 0; j < M.cols; ++j)
                if (UM(i, j) != (i < e.H.rows ? e.H(i, j) : Int(0))) return false;
        if (e.H.rows != s.factors.size()) return false;
    }
    return true;
}

}  // namespace props
