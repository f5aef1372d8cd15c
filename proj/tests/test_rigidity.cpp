#include "doctest.h"
#include "lac/rigidity.hpp"

using namespace lac;

namespace {

std::vector<Vec2> vecs(const std::vector<std::pair<long, long>>& v) {
    std::vector<Vec2> out;
    for (auto [a, b] : v) out.push_back({Int(a), Int(b)});
    return out;
}

}  // namespace

TEST_CASE("matrices modulo the all-ones vector") {
    const auto A = example7_witness();
    const auto C = canonical(A);
    for (std::size_t i = 0; i < C.cols; ++i) CHECK(C(C.rows - 1, i) == 0);
    CHECK(equal_mod_ones(A, C));
    CHECK(reduced_matrix(A) == reduced_matrix(C));
    CHECK(invertible_on_h(IntMatrix::identity(5)));
    CHECK_FALSE(invertible_on_h(IntMatrix(4, 4)));
}

TEST_CASE("the 7-line witness is admissible and swaps two triple points") {
    const auto c = builtin("example7");
    const auto A = example7_witness();
    CHECK(check_admissibility(A, c));
    CHECK(invertible_on_h(A));
    const auto T = c.points_of_size(3);
    CHECK(adm_lines(A, T[0]) == std::vector<int>(T[0].begin(), T[0].end()));
    CHECK(adm_lines(A, T[1]) == std::vector<int>(T[2].begin(), T[2].end()));
    CHECK(adm_lines(A, T[2]) == std::vector<int>(T[1].begin(), T[1].end()));
    CHECK(adm_subcombinatorics(A, T[1], c).c.n == 3);
    // breaking one entry breaks admissibility
    auto B = A;
    B(3, 4) = 2;
    CHECK_FALSE(check_admissibility(B, c));
    CHECK(check_admissibility(IntMatrix::identity(7), c));
    CHECK_THROWS(check_admissibility(IntMatrix::identity(6), c));
}

TEST_CASE("3-admissibility certificates") {
    CHECK(check_certificate(builtin("m3"), vecs({{1, 0}, {0, 1}, {-1, -1}})));
    CHECK_FALSE(check_certificate(builtin("m3"), vecs({{1, 0}, {1, 0}, {-2, 0}})));
    const auto ceva = vecs({{1, 0}, {1, 0}, {0, 1}, {0, 1}, {-1, -1}, {-1, -1}});
    CHECK(check_certificate(builtin("ceva"), ceva));
    const auto v = decide_3_admissible(builtin("ceva"));
    CHECK(v.status == AdmStatus::admissible);
    CHECK(v.vectors == ceva);
    CHECK(decide_3_admissible(builtin("m3")).status == AdmStatus::admissible);
}

TEST_CASE("MacLane is not 3-admissible, with a replayable trace") {
    const auto c = builtin("maclane");
    const auto v = decide_3_admissible(c);
    CHECK(v.status == AdmStatus::not_admissible);
    CHECK(v.rule == "branch");
    REQUIRE(v.leaves.size() == 2);
    CHECK(v.leaves[0].outcome == "collapse");
    CHECK(v.leaves[1].outcome == "inconsistent");
    CHECK(replay_trace(c, v));
    auto broken = v;
    broken.leaves.pop_back();
    CHECK_FALSE(replay_trace(c, broken));
    auto wrong = v;
    wrong.leaves[0].outcome = "inconsistent";
    CHECK_FALSE(replay_trace(c, wrong));
}

TEST_CASE("general position rule") {
    for (const auto& name : {"example7", "rybnikov"}) {
        const auto v = decide_3_admissible(builtin(name));
        CHECK(v.status == AdmStatus::not_admissible);
        CHECK(v.rule == "general_position");
        CHECK(general_position_split(builtin(name)).has_value());
    }
    CHECK_FALSE(general_position_split(builtin("m3")).has_value());
}

TEST_CASE("pointwise 3-admissibility") {
    const auto m = pointwise_3_admissible(builtin("maclane"), 2);
    CHECK(m.pass);
    CHECK(m.unknown == 0);
    const auto c = pointwise_3_admissible(builtin("ceva"));
    CHECK_FALSE(c.pass);
    CHECK(c.offending.size() == 1);
    const auto r1 = pointwise_3_admissible(builtin("rybnikov"), 1);
    const auto r4 = pointwise_3_admissible(builtin("rybnikov"), 4);
    CHECK(r1.pass);
    CHECK(r1.unknown == 0);
    CHECK(to_json(r1) == to_json(r4));
    for (const auto& s : r1.admissible) CHECK(s.is_m3);
}

TEST_CASE("triple point candidates and obstructions") {
    const auto c = builtin("rybnikov");
    const auto cands = psi3_candidates(c);
    CHECK(cands.size() == 72);
    std::size_t aut = 0;
    for (const auto& k : cands) aut += k.from_aut;
    CHECK(aut == aut_on_triples(c).size());
    for (const auto& k : cands) {
        if (k.from_aut) continue;
        const auto ob = obstruct_psi3(c, k.sigma, 1);
        CHECK(ob.obstructed);
        CHECK(ob.upper < ob.target);
        CHECK(ob.lower <= ob.upper);
    }
    CHECK_THROWS(psi3_candidates(builtin("generic3")));
}

TEST_CASE("rigidity verdicts") {
    const auto r = rigidity_verdict(builtin("rybnikov"), 1, 2);
    CHECK(r.verdict == RigidStatus::rigid);
    CHECK(r.unresolved == 0);
    CHECK_FALSE(r.witness.has_value());
    const auto e = rigidity_verdict(builtin("example7"));
    CHECK(e.verdict == RigidStatus::not_rigid);
    REQUIRE(e.witness.has_value());
    CHECK(check_admissibility(*e.witness, builtin("example7")));
    CHECK(invertible_on_h(*e.witness));
    CHECK(rigidity_verdict(builtin("generic3")).verdict == RigidStatus::inconclusive);
    CHECK(to_json(r).dump() == to_json(rigidity_verdict(builtin("rybnikov"), 1, 1)).dump());
}
