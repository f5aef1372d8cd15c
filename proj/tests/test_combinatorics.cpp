#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lac/combinatorics.hpp"

using namespace lac;

TEST_CASE("builtins satisfy the incidence axioms") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        CHECK(validate(builtin(name)).empty());
    }
}

TEST_CASE("validate rejects two points sharing two lines") {
    LineCombinatorics c;
    c.n = 4;
    c.points = {{0, 1, 2}, {0, 1, 3}, {2, 3}};
    CHECK_FALSE(validate(c).empty());
    c.points = {{0, 1}, {0, 2}};
    CHECK_FALSE(validate(c).empty());
}

TEST_CASE("MacLane counts") {
    const auto c = builtin("maclane");
    CHECK(c.n == 8);
    CHECK(c.points.size() == 12);
    CHECK(c.points_of_size(3).size() == 8);
    CHECK(multiplicity(c) == 13);
    CHECK(automorphism_group(c).size() == 48);
}

TEST_CASE("Rybnikov counts") {
    const auto c = builtin("rybnikov");
    CHECK(c.n == 13);
    CHECK(c.points_of_size(3).size() == 15);
    CHECK(c.max_multiplicity() == 3);
    CHECK(multiplicity(c) == 51);
}

TEST_CASE("isomorphism search recovers a random relabelling") {
    std::mt19937_64 rng(9);
    for (const auto& name : {"maclane", "rybnikov", "ceva", "example7"}) {
        const auto c = builtin(name);
        Perm p(c.n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        const auto d = apply_perm(c, p);
        const auto q = find_isomorphism(c, d);
        REQUIRE(q.has_value());
        CHECK(apply_perm(c, *q) == d);
        CHECK(iso_invariant(c) == iso_invariant(d));
    }
    CHECK_FALSE(find_isomorphism(builtin("maclane"), builtin("ceva")).has_value());
}

TEST_CASE("automorphisms preserve the combinatorics") {
    const auto c = builtin("rybnikov");
    const auto g = automorphism_group(c);
    CHECK(g.size() > 1);
    for (const auto& p : g) CHECK(apply_perm(c, p) == c);
}

TEST_CASE("triangle census singles out the first triple point of Rybnikov") {
    const auto c = builtin("rybnikov");
    const Point p0{0, 1, 2};
    CHECK(triangle_count_of(c, p0) == 36);
    for (const auto& p : c.points_of_size(3))
        if (p != p0) CHECK(triangle_count_of(c, p) != 36);
    // every triangle uses three distinct lines
    for (const auto& t : triangles(c)) {
        CHECK(t.lines[0] != t.lines[1]);
        CHECK(t.lines[1] != t.lines[2]);
        CHECK(t.lines[0] != t.lines[2]);
    }
}

TEST_CASE("subcombinatorics keeps the induced points") {
    const auto c = builtin("maclane");
    const auto s = subcombinatorics(c, {0, 1, 2, 3});
    CHECK(s.c.n == 4);
    CHECK(s.index_map == std::vector<int>{0, 1, 2, 3});
    CHECK(validate(s.c).empty());
    std::size_t pairs = 0;
    for (const auto& p : s.c.points) pairs += p.size() * (p.size() - 1) / 2;
    CHECK(pairs == 6);
}

TEST_CASE("connectivity checks") {
    const auto r = connectivity_checks(builtin("rybnikov"));
    CHECK(r.triple_chain_connected);
    CHECK(r.off_column_coverage);
    const auto e = connectivity_checks(builtin("example7"));
    CHECK(e.triple_chain_connected);
    CHECK_FALSE(e.off_column_coverage);
}

TEST_CASE("json round trip") {
    for (const auto& name : builtin_names()) CHECK(comb_from_json(to_json(builtin(name))) == builtin(name));
}
