#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lac/alexander.hpp"
#include "lac/presentation.hpp"

using namespace lac;

namespace {

// Z[u_1..u_r] modulo monomials of degree 3, u_k = t_k - 1.
using Mono = std::vector<int>;
using Poly = std::map<Mono, long>;

Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (ma.size() + mb.size() > 2) continue;
            Mono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            out[m] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly add(Poly a, const Poly& b, long s = 1) {
    for (const auto& [m, c] : b) a[m] += s * c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}

// t_k^e for e = +-1
Poly t(int k, int e) {
    if (e > 0) return {{{}, 1}, {{k}, 1}};
    return {{{}, 1}, {{k}, -1}, {{k, k}, 1}};
}

// Fox derivatives of w, abelianised and truncated.
std::vector<Poly> fox(const Word& w, int r) {
    std::vector<Poly> d(r + 1);
    Poly prefix{{{}, 1}};
    for (int y : w) {
        const int g = std::abs(y);
        if (y > 0) {
            d[g] = add(d[g], prefix);
            prefix = mul(prefix, t(g, 1));
        } else {
            prefix = mul(prefix, t(g, -1));
            d[g] = add(d[g], prefix, -1);
        }
    }
    return d;
}

std::vector<Poly> image(const TruncatedClass& x, int r) {
    std::vector<Poly> out(r + 1);
    auto put = [&](int i, int j, const Poly& coef) {
        const auto f = fox(commutator({i}, {j}), r);
        for (int g = 1; g <= r; ++g) out[g] = add(out[g], mul(coef, f[g]));
    };
    for (const auto& [k, c] : x.deg0) put(k.first, k.second, {{{}, c}});
    for (const auto& [k, c] : x.deg1) put(k[1], k[2], {{{k[0]}, c}});
    return out;
}

Word random_commutator_word(std::mt19937_64& rng, int r, std::size_t half) {
    std::uniform_int_distribution<int> gen(1, r), sign(0, 1);
    Word a;
    for (std::size_t i = 0; i < half; ++i) a.push_back(sign(rng) ? gen(rng) : -gen(rng));
    Word b = inverse(a);
    std::shuffle(b.begin(), b.end(), rng);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("reduce_word agrees with the Fox calculus oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 6);
        const Word w = random_commutator_word(rng, r, 1 + rng() % 20);
        CAPTURE(w);
        CHECK(image(reduce_word(w, r), r) == fox(w, r));
    }
}

TEST_CASE("reduce_word is independent of the collection order") {
    std::mt19937_64 rng(1000);
    for (int trial = 0; trial < 1000; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 6);
        const Word w = random_commutator_word(rng, r, 1 + rng() % 20);
        std::vector<int> order(r);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(reduce_word(w, r, order) == reduce_word(w, r));
    }
}

TEST_CASE("Jacobi words reduce to zero") {
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) {
                Word w = commutator(commutator({i}, {j}), {k});
                w = concat(w, commutator(commutator({j}, {k}), {i}));
                w = concat(w, commutator(commutator({k}, {i}), {j}));
                CHECK(reduce_word(w, 4).is_zero());
            }
    // [x_4, c] is (t_4 - 1) c, which vanishes only once c does
    const Word c = commutator({1, 2}, {3});
    const auto x = reduce_word(commutator({4}, c), 4);
    CHECK(x.deg0.empty());
    CHECK_FALSE(x.is_zero());
}

TEST_CASE("words outside the commutator subgroup are rejected") {
    CHECK_THROWS_AS(reduce_word({1, 2}, 3), NotInCommutator);
}

TEST_CASE("gr0 rank follows the point formula") {
    for (const auto& name : {"maclane", "rybnikov", "ceva", "example7"}) {
        const auto c = builtin(name);
        std::size_t want = 0;
        for (const auto& p : c.points) want += p.size() - 2;
        CAPTURE(name);
        CHECK(gr0_presentation(c).coker.free_rank == want);
        CHECK(gr0_presentation(c).coker.torsion.empty());
    }
}

TEST_CASE("gr1 ranks") {
    CHECK(gr1_presentation(builtin("maclane")).coker.free_rank == 21);
    CHECK(gr1_presentation(builtin("rybnikov")).coker.free_rank == 40);
    CHECK(gr1_quotient(builtin("maclane")).Q.rows == 21);
}

TEST_CASE("MacLane truncated invariant") {
    const auto c = builtin("maclane");
    const auto p = from_wiring(wiring_diagram(decone_generic(maclane_arrangement(false))));
    const auto m = m2_rank(c, p.relations, 7);
    CHECK(m.gr0 == 8);
    CHECK(m.gr1 == 21);
    CHECK(m.total == 29);
    CHECK(m.torsion.empty());
}
