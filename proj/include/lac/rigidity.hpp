#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lac/combinatorics.hpp"
#include "lac/exact.hpp"

namespace lac {

// A(j, i) = a_i^j, so column i holds psi(x_i). Columns only matter modulo the all-ones vector.
using HomologyMatrix = IntMatrix;

// Representative with a zero last row.
HomologyMatrix canonical(const HomologyMatrix& A);
bool equal_mod_ones(const HomologyMatrix& A, const HomologyMatrix& B);
// The r x r matrix of the induced map on H = Z^{r+1}/1 in the basis x_0..x_{r-1}.
IntMatrix reduced_matrix(const HomologyMatrix& A);
bool invertible_on_h(const HomologyMatrix& A);

// Every determinant condition over (triple, double) and (triple, triple) pairs.
// Throws std::invalid_argument for points of multiplicity > 3.
bool check_admissibility(const HomologyMatrix& A, const LineCombinatorics& c);
// Lines i whose column restricted to the rows of P is not constant.
std::vector<int> adm_lines(const HomologyMatrix& A, const Point& P);
SubCombinatorics adm_subcombinatorics(const HomologyMatrix& A, const Point& P, const LineCombinatorics& c);

using Vec2 = std::array<Int, 2>;
// Checks the three conditions of 3-admissibility directly on integer vectors.
bool check_certificate(const LineCombinatorics& c, const std::vector<Vec2>& v);

enum class AdmStatus { admissible, not_admissible, unknown };
std::string to_string(AdmStatus s);

// A leaf of the branch tree. choices lists (triple index, mode) in decision order;
// mode 'P' is all parallel, 'D' is sum zero with three directions.
struct AdmLeaf {
    std::vector<std::pair<int, char>> choices;
    std::vector<bool> forced;  // per choice: implied by the state instead of branched on
    std::string outcome;       // collapse | clash | split | inconsistent | zero_line | admissible | unresolved
    nlohmann::json data;
};

struct AdmissibilityVerdict {
    AdmStatus status = AdmStatus::unknown;
    std::vector<Vec2> vectors;  // certificate when admissible
    std::string rule;           // closure | general_position | branch
    std::vector<AdmLeaf> leaves;
};

// Caps the number of lines at 13.
AdmissibilityVerdict decide_3_admissible(const LineCombinatorics& c);
// Re-derives every leaf from its choices and checks the tree covers all cases.
bool replay_trace(const LineCombinatorics& c, const AdmissibilityVerdict& v);
// Parallel closure from double points alone leaves at most one line outside one class.
bool parallel_closure_collapses(const LineCombinatorics& c);
// Split L0, L1, L2 with L1 and L2 meeting only in double points; empty when none is found.
std::optional<std::array<std::vector<int>, 3>> general_position_split(const LineCombinatorics& c);

struct SubsetVerdict {
    std::vector<int> lines;
    AdmStatus status = AdmStatus::unknown;
    std::string rule;
    std::size_t iso_class = 0;
    bool is_m3 = false;
};
struct PointwiseReport {
    bool pass = false;
    std::size_t subsets = 0;
    std::size_t killed_by_closure = 0;
    std::size_t iso_classes = 0;
    std::size_t unknown = 0;
    std::vector<SubsetVerdict> admissible;   // every admissible subset
    std::vector<SubsetVerdict> offending;    // admissible and not m3, or unknown
};
PointwiseReport pointwise_3_admissible(const LineCombinatorics& c, unsigned jobs = 1);

// Permutations of the triple points preserving the triangle hypergraph.
struct Psi3Candidate {
    std::vector<int> sigma;   // triple point k maps to sigma[k]
    bool from_aut = false;
};
std::vector<Psi3Candidate> psi3_candidates(const LineCombinatorics& c);
// Action of the automorphism group on the triple points, sorted and deduplicated.
std::vector<std::vector<int>> aut_on_triples(const LineCombinatorics& c);

struct Obstruction {
    bool obstructed = false;
    std::size_t family_dim = 0;
    std::size_t lower = 0;        // randomized rank of [A | 1]
    std::size_t upper = 0;        // certified rank bound
    std::size_t target = 0;       // rank needed for invertibility
    std::vector<int> bound_free;  // columns counted one each in the bound
    std::size_t bound_span = 0;   // dimension of the span of the other columns
};
Obstruction obstruct_psi3(const LineCombinatorics& c, const std::vector<int>& sigma, uint64_t seed);

enum class RigidStatus { rigid, not_rigid, inconclusive };
std::string to_string(RigidStatus s);

struct CandidateDisposition {
    std::vector<int> sigma;
    std::string disposition;  // aut | obstructed | witness | unresolved
    Obstruction obstruction;
};
struct RigidityReport {
    RigidStatus verdict = RigidStatus::inconclusive;
    std::string failing_step;
    PointwiseReport pointwise;
    std::vector<CandidateDisposition> candidates;
    bool triple_chain_connected = false;
    bool off_column_coverage = false;
    bool diagonal_derivation = false;
    std::optional<HomologyMatrix> witness;
    std::size_t unresolved = 0;
};
RigidityReport rigidity_verdict(const LineCombinatorics& c, uint64_t seed = 1, unsigned jobs = 1);
// Small-entry search for an admissible invertible matrix inducing sigma.
std::optional<HomologyMatrix> find_witness(const LineCombinatorics& c, const std::vector<int>& sigma,
                                           long budget = 20000000);
// Matrix listed with the 7-line example.
HomologyMatrix example7_witness();

nlohmann::json to_json(const AdmissibilityVerdict& v);
nlohmann::json to_json(const PointwiseReport& r);
nlohmann::json to_json(const RigidityReport& r);

}  // namespace lac
