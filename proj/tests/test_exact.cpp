#include <random>

#include "doctest.h"
#include "lac/linalg.hpp"

using namespace lac;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix M(r, c);
    for (auto& x : M.a) x = d(rng);
    return M;
}

bool unimodular(const IntMatrix& U) {
    if (U.rows != U.cols) return false;
    const auto s = smith(U, false);
    if (s.factors.size() != U.rows) return false;
    for (const auto& f : s.factors)
        if (f != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("cyclotomic field arithmetic") {
    const Cyclo w = Cyclo::omega();
    CHECK((w * w + w + Cyclo(1)).is_zero());
    CHECK(w.conj() == w * w);
    const Cyclo z(Rat(3, 2), Rat(-5, 7));
    CHECK(z.conj().conj() == z);
    CHECK(z * z.inv() == Cyclo(1));
    CHECK((z * z.conj()).is_real());
    CHECK((z * z.conj()).a == z.norm());
}

TEST_CASE("smith form reconstructs U M V = D with divisibility") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix M = random_matrix(rng, r, c, -6, 6);
        if (t % 5 == 0) M = random_matrix(rng, r, 1, -3, 3) * random_matrix(rng, 1, c, -3, 3);
        const auto s = smith(M, true);
        CHECK(s.U * M * s.V == s.D);
        CHECK(unimodular(s.U));
        CHECK(unimodular(s.V));
        for (std::size_t i = 0; i < s.factors.size(); ++i) {
            CHECK(s.factors[i] > 0);
            CHECK(s.D(i, i) == s.factors[i]);
            if (i + 1 < s.factors.size()) CHECK(s.factors[i + 1] % s.factors[i] == 0);
        }
        CHECK(s.factors.size() == rank_q(M));
    }
}

TEST_CASE("hermite form reconstructs U M = [H; 0]") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 5;
        const IntMatrix M = random_matrix(rng, r, c, -9, 9);
        const auto e = hnf(M, true);
        CHECK(unimodular(e.U));
        const IntMatrix UM = e.U * M;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) CHECK(UM(i, j) == (i < e.H.rows ? e.H(i, j) : Int(0)));
        for (std::size_t k = 0; k < e.pivots.size(); ++k) {
            const Int& p = e.H(k, e.pivots[k]);
            CHECK(p > 0);
            for (std::size_t i = 0; i < k; ++i) {
                CHECK(e.H(i, e.pivots[k]) >= 0);
                CHECK(e.H(i, e.pivots[k]) < p);
            }
            if (k > 0) CHECK(e.pivots[k] > e.pivots[k - 1]);
        }
    }
}

TEST_CASE("cokernel of a known presentation") {
    const auto ck = cokernel(IntMatrix::from({{2, 0, 0}, {0, 4, 0}}));
    CHECK(ck.free_rank == 1);
    CHECK(ck.torsion == std::vector<Int>{2, 4});
    CHECK(ck.relation_rank == 2);
    CHECK(cokernel(IntMatrix::from({{1, 1}, {1, -1}})).torsion == std::vector<Int>{2});
}

TEST_CASE("integer solving and local obstructions") {
    const auto a = hermite_solve(IntMatrix::from({{2, 4}}), {Int(3)});
    CHECK(a.rational_feasible);
    CHECK_FALSE(a.integer_feasible);
    CHECK(a.obstructing_primes == std::set<Int>{2});

    const IntMatrix A = IntMatrix::from({{1, 2, 3}, {0, 3, 6}});
    const std::vector<Int> b{Int(4), Int(3)};
    const auto s = hermite_solve(A, b);
    REQUIRE(s.integer_feasible);
    CHECK(A.apply(s.x) == b);
    CHECK(s.kernel.rows == 1);
    CHECK(A.apply(s.kernel.row(0)) == std::vector<Int>{0, 0});
    CHECK(rational_solution_dim(A, b) == std::optional<std::size_t>{1});

    const auto bad = hermite_solve(IntMatrix::from({{1, 1}, {1, 1}}), {Int(0), Int(1)});
    CHECK_FALSE(bad.rational_feasible);
    CHECK_FALSE(local_feasibility(IntMatrix::from({{1, 1}, {1, 1}}), {Int(0), Int(1)}).has_value());
    CHECK(local_feasibility(IntMatrix::from({{6}}), {Int(2)}) == std::optional<std::set<Int>>{std::set<Int>{3}});
}

TEST_CASE("modular rank agrees with exact rank") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        IntMatrix M = random_matrix(rng, 6, 5, -4, 4);
        if (t % 3 == 0) M = random_matrix(rng, 6, 2, -4, 4) * random_matrix(rng, 2, 5, -4, 4);
        CHECK(rank_mod(M) == rank_q(M));
    }
    CHECK(prime_factors(Int(360)) == std::set<Int>{2, 3, 5});
}
