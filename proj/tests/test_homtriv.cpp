#include "doctest.h"
#include "lac/homtriv.hpp"

using namespace lac;

namespace {

struct MacLaneSystems {
    ZariskiPresentation pa, pb;
    MacLaneSystems() {
        const auto d = wiring_diagram(decone_generic(maclane_arrangement(false)));
        std::tie(pa, pb) = matched_pair(d, conjugate_diagram(d));
    }
};

}  // namespace

TEST_CASE("MacLane pair has no homologically trivial isomorphism") {
    const MacLaneSystems m;
    const auto c = builtin("maclane");
    const auto sys = build_system(m.pa, m.pb, c);
    CHECK(sys.gr1_rank == 21);
    const auto v = solve(sys);
    CHECK(v.rational_feasible);
    CHECK_FALSE(v.integer_feasible);
    CHECK(v.dimension == 98);
    CHECK(v.dimension_appearing == 77);
    CHECK(v.obstructing_primes == std::set<Int>{3});
    const auto j = to_json(v);
    CHECK(j.at("integer_feasible") == false);
}

TEST_CASE("self comparison admits the zero witness") {
    const MacLaneSystems m;
    const auto sys = build_system(m.pa, m.pa, builtin("maclane"));
    const auto v = solve(sys);
    CHECK(v.integer_feasible);
    CHECK(verify_witness(sys, v.witness));
    CHECK(verify_witness(sys, std::vector<Int>(sys.variables.size(), Int(0))));
    std::vector<Int> bad(sys.variables.size(), Int(0));
    bool rejected = false;
    for (std::size_t k : sys.appearing) {
        bad.assign(bad.size(), Int(0));
        bad[k] = 1;
        rejected = rejected || !verify_witness(sys, bad);
    }
    CHECK(rejected);
}

TEST_CASE("jobs do not change the system") {
    const MacLaneSystems m;
    const auto c = builtin("maclane");
    const auto a = build_system(m.pa, m.pb, c, 0, 1), b = build_system(m.pa, m.pb, c, 0, 4);
    CHECK(a.A == b.A);
    CHECK(a.b == b.b);
}
