#include <map>

#include "doctest.h"
#include "lac/alexander.hpp"
#include "lac/presentation.hpp"

using namespace lac;

TEST_CASE("free group helpers") {
    CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
    CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
    CHECK(commutator({1}, {2}) == Word{1, 2, -1, -2});
    CHECK(commutator({1}, {1}).empty());
    CHECK(exponent_sums({1, 2, -1, 2, 2}, 3) == std::vector<long>{0, 3, 0});
}

TEST_CASE("vertex relations reduce to the combinatorial relation in degree zero") {
    const auto c = builtin("maclane");
    const auto d = wiring_diagram(decone_generic(maclane_arrangement(false)));
    const auto p = from_wiring(d);
    CHECK(verify_zariski(p, c).ok());
    REQUIRE(p.relations.size() == p.tags.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& tag = p.tags[i];
        const auto x = reduce_word(p.relations[i], p.r);
        std::map<PairKey, long> want;
        for (int j : tag.vertex)
            if (j != tag.strand) want[{std::min(j, tag.strand), std::max(j, tag.strand)}] += j < tag.strand ? 1 : -1;
        CAPTURE(i);
        CHECK(x.deg0 == want);
    }
}

TEST_CASE("presentations do not depend on the generic shear") {
    const auto c = builtin("maclane");
    const auto a = maclane_arrangement(false);
    std::vector<ZariskiPresentation> ps;
    for (Rat s : {Rat(1, 3), Rat(-3, 7)}) ps.push_back(from_wiring(wiring_diagram(decone_and_shear(a, s))));
    REQUIRE(ps[0].ids == ps[1].ids);
    auto deg0_by_vertex = [](const ZariskiPresentation& p) {
        std::map<RelationTag, std::map<PairKey, long>> out;
        for (std::size_t i = 0; i < p.relations.size(); ++i) out[p.tags[i]] = reduce_word(p.relations[i], p.r).deg0;
        return out;
    };
    CHECK(deg0_by_vertex(ps[0]) == deg0_by_vertex(ps[1]));
    const auto m0 = m2_rank(c, ps[0].relations, 7), m1 = m2_rank(c, ps[1].relations, 7);
    CHECK(m0.gr0 == m1.gr0);
    CHECK(m0.gr1 == m1.gr1);
    CHECK(m0.total == m1.total);
    CHECK(m0.torsion == m1.torsion);
}

TEST_CASE("matched pairs line up relation tags") {
    const auto d = wiring_diagram(decone_generic(maclane_arrangement(false)));
    const auto [a, b] = matched_pair(d, conjugate_diagram(d));
    CHECK(a.tags == b.tags);
    CHECK(a.relations.size() == 13);
    const auto j = to_json(a);
    const auto back = presentation_from_json(j);
    CHECK(back.relations == a.relations);
    CHECK(back.diagram_hash == a.diagram_hash);
    CHECK(a.diagram_hash == diagram_hash(d));
}
