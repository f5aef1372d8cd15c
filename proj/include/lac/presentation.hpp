#pragma once
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lac/combinatorics.hpp"
#include "lac/wiring.hpp"

namespace lac {

// signed generator indices, 1-based
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// a b a^-1 b^-1, reduced
Word commutator(const Word& a, const Word& b);
std::vector<long> exponent_sums(const Word& w, int r);

struct RelationTag {
    Point vertex;    // strands through the vertex
    int strand = 0;  // strand of the conjugated meridian a_k
    bool operator==(const RelationTag&) const = default;
    auto operator<=>(const RelationTag&) const = default;
};

struct ZariskiPresentation {
    int r = 0;
    std::vector<Word> relations;
    std::vector<RelationTag> tags;
    std::vector<int> ids;  // original line id of each generator
    std::string diagram_hash;
};

// At each vertex with meridians a_1..a_m (left to right) and P = a_m ... a_1,
// emits [P, a_k] for every strand of the block except the largest.
ZariskiPresentation from_wiring(const WiringDiagram& d);

struct MatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Pairs relations by (vertex, strand) and checks equal degree-0 classes.
std::pair<ZariskiPresentation, ZariskiPresentation> matched_pair(const WiringDiagram& a, const WiringDiagram& b);
std::pair<ZariskiPresentation, ZariskiPresentation> matched_pair(ZariskiPresentation a, ZariskiPresentation b);

struct ZariskiReport {
    bool exponent_sums_zero = true;
    bool count_matches = true;
    bool abelianization_free = true;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
ZariskiReport verify_zariski(const ZariskiPresentation& p, const LineCombinatorics& c);

std::string diagram_hash(const WiringDiagram& d);
nlohmann::json to_json(const ZariskiPresentation& p);
ZariskiPresentation presentation_from_json(const nlohmann::json& j);

}  // namespace lac
