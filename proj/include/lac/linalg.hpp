#pragma once
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "json.hpp"
#include "lac/exact.hpp"

namespace lac {

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

// Row echelon form over Z by row operations: U*M = [H; 0].
// Pivots are positive; with reduce=true entries above a pivot lie in [0, pivot) (HNF).
struct Echelon {
    IntMatrix H;                      // the rank nonzero rows
    std::vector<std::size_t> pivots;  // pivot column of each row of H
    IntMatrix U;                      // unimodular, rows(M) x rows(M); empty unless tracked
    bool used_fast_path = false;
};
Echelon row_echelon(const IntMatrix& M, bool track_u = false, bool reduce = false);
inline Echelon hnf(const IntMatrix& M, bool track_u = false) { return row_echelon(M, track_u, true); }

// U*M*V = D with D diagonal, d1 | d2 | ... .
struct Smith {
    std::vector<Int> factors;  // nonzero invariant factors
    IntMatrix U, V;            // empty unless tracked
    IntMatrix D;
};
Smith smith(const IntMatrix& M, bool track = true);

// Z^n modulo the row lattice of R.
struct Cokernel {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1
    std::size_t relation_rank = 0;
};
Cokernel cokernel(const IntMatrix& R);

struct HermiteSolution {
    bool rational_feasible = false;
    bool integer_feasible = false;
    std::size_t rank = 0;
    std::vector<Int> x;             // when integer feasible: A x = b
    IntMatrix kernel;               // rows: Z-basis of {x : A x = 0}
    std::vector<Rat> coords;        // b in the echelon basis of the column lattice
    std::set<Int> obstructing_primes;
};
HermiteSolution hermite_solve(const IntMatrix& A, const std::vector<Int>& b, bool want_kernel = true);
std::optional<std::size_t> rational_solution_dim(const IntMatrix& A, const std::vector<Int>& b);
// nullopt when the system is rationally infeasible.
std::optional<std::set<Int>> local_feasibility(const IntMatrix& A, const std::vector<Int>& b);

std::set<Int> prime_factors(Int n);

// Arithmetic modulo a fixed 62-bit prime.
inline constexpr uint64_t kPrime62 = 4611686018427387847ULL;  // 2^62 - 57
uint64_t mod_reduce(const Int& x, uint64_t p = kPrime62);
std::size_t rank_mod(std::vector<std::vector<uint64_t>> M, uint64_t p = kPrime62);
std::size_t rank_mod(const IntMatrix& M, uint64_t p = kPrime62);

// base + sum_k s_k * dirs[k], specialised at random s.
struct GenericRank {
    std::size_t lower = 0;  // best rank found over the trials
    std::size_t upper = 0;  // min(rows, cols)
    std::size_t trials = 0;
};
GenericRank generic_rank(const IntMatrix& base, const std::vector<IntMatrix>& dirs, uint64_t seed,
                         std::size_t trials = 8);
// Exact rank over Q.
std::size_t rank_q(const IntMatrix& M);

}  // namespace lac
