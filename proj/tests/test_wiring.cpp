#include "doctest.h"
#include "lac/wiring.hpp"

using namespace lac;

TEST_CASE("MacLane realisations have the MacLane combinatorics") {
    for (bool conj : {false, true}) {
        const auto a = maclane_arrangement(conj);
        CHECK(find_isomorphism(combinatorics_of(a), builtin("maclane")).has_value());
    }
    const auto a = maclane_arrangement(false);
    CHECK(conjugate(conjugate(a)).lines == a.lines);
    CHECK(conjugate(a).lines == maclane_arrangement(true).lines);
}

TEST_CASE("conjugating a diagram is an involution") {
    const auto d = wiring_diagram(decone_generic(maclane_arrangement(false)));
    CHECK(to_json(conjugate_diagram(conjugate_diagram(d))) == to_json(d));
    CHECK(to_json(conjugate_diagram(d)) != to_json(d));
}

TEST_CASE("diagram replay reaches the terminal order") {
    const auto d = wiring_diagram(decone_generic(maclane_arrangement(false)));
    CHECK(replay(d) == d.terminal);
    CHECK(d.braids.size() == d.vertices.size() + 1);
    CHECK(d.vertices.size() == 8);
    const auto j = to_json(d);
    CHECK(to_json(diagram_from_json(j)) == j);
}

TEST_CASE("vertical lines after shearing are rejected") {
    CHECK_THROWS_AS(decone_and_shear(maclane_arrangement(false), Rat(0)), NonGeneric);
    CHECK(affine_vertices(decone_and_shear(maclane_arrangement(false), Rat(2, 5))).size() == 8);
}

TEST_CASE("Rybnikov realisation") {
    const auto r = realize_rybnikov("++");
    CHECK(r.rho[0] == 2);
    CHECK(r.rho[1] == 2);
    CHECK(r.rho[2] == 1);
    const auto c = combinatorics_of(r.arr);
    CHECK(find_isomorphism(c, builtin("rybnikov")).has_value());
    CHECK(combinatorics_of(realize_rybnikov("-+").arr) == c);
    const auto am = decone_generic(r.arr);
    CHECK(affine_vertices(am).size() == 41);
    const auto d = wiring_diagram(am);
    CHECK(replay(d) == d.terminal);
    CHECK_THROWS(realize_rybnikov("x"));
}

TEST_CASE("cyclotomic json round trip") {
    const Cyclo z(Rat(-7, 3), Rat(1, 2));
    CHECK(cyclo_from_json(to_json(z)) == z);
    const auto a = maclane_arrangement(true);
    CHECK(arrangement_from_json(to_json(a)).lines == a.lines);
}
