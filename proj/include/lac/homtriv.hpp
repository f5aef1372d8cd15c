#pragma once
#include <set>
#include <vector>

#include "json.hpp"
#include "lac/alexander.hpp"
#include "lac/presentation.hpp"

namespace lac {

// Unknowns p^k_{u,v} with alpha_k = sum p^k_{u,v} x_{u,v} (mod m).
// Each relation i asks E_i(p) to vanish in gr^1; E_i is written in integral
// gr^1 coordinates, so the whole system is A p = b over Z.
struct ObstructionSystem {
    int r = 0;
    std::vector<TripleKey> variables;  // (k, u, v)
    IntMatrix A;
    std::vector<Int> b;
    std::vector<std::pair<std::size_t, std::size_t>> row_tags;  // (relation, gr^1 coordinate)
    std::size_t gr1_rank = 0;
    std::size_t zero_rows_dropped = 0;
    std::vector<std::size_t> appearing;  // variables with a nonzero column
};

ObstructionSystem build_system(const ZariskiPresentation& pa, const ZariskiPresentation& pb,
                               const LineCombinatorics& c, int decone = 0, unsigned jobs = 1);

struct HomtrivVerdict {
    bool rational_feasible = false;
    bool integer_feasible = false;
    std::size_t rank = 0;
    std::size_t dimension = 0;            // over all variables: n - rank
    std::size_t dimension_appearing = 0;  // over the variables that occur
    std::vector<Int> witness;             // full length when integer feasible
    std::set<Int> obstructing_primes;
    std::vector<Rat> coordinates;         // of b in the echelon basis
};
HomtrivVerdict solve(const ObstructionSystem& sys);
bool verify_witness(const ObstructionSystem& sys, const std::vector<Int>& p);

nlohmann::json to_json(const HomtrivVerdict& v);

}  // namespace lac
