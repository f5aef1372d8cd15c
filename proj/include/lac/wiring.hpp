#pragma once
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lac/combinatorics.hpp"
#include "lac/exact.hpp"

namespace lac {

// a x + b y + c z = 0, first nonzero coefficient scaled to 1
struct ProjLine {
    std::array<Cyclo, 3> v;
    ProjLine() = default;
    ProjLine(Cyclo a, Cyclo b, Cyclo c);
    bool operator==(const ProjLine& o) const { return v == o.v; }
    ProjLine conj() const;
};

struct Arrangement {
    std::vector<ProjLine> lines;
    int decone = 0;
};

// Ordered MacLane realisation; conj selects the w-bar member.
Arrangement maclane_arrangement(bool conj = false);
Arrangement conjugate(const Arrangement& a);
// Exact intersection census. Throws if two lines coincide.
LineCombinatorics combinatorics_of(const Arrangement& a);

struct NonGeneric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Y = m X + c. Strand g (1-based) is affine line g-1.
struct AffineModel {
    std::vector<Cyclo> m, c;
    std::vector<int> ids;  // original line id of each strand
    Rat shear;
    std::size_t r() const { return m.size(); }
    Cyclo value(std::size_t i, const Cyclo& X) const { return m[i] * X + c[i]; }
};

struct Vertex {
    Cyclo x;
    Point strands;  // sorted strand ids, 1-based
};

// Throws NonGeneric when a line becomes vertical or two vertices share X.
AffineModel decone_and_shear(const Arrangement& a, const Rat& shear);
std::vector<Vertex> affine_vertices(const AffineModel& am);
// first generic shear of the fixed sequence 1/3, 2/5, 3/7, ...
AffineModel decone_generic(const Arrangement& a, int skip = 0);

struct VertexEvent {
    std::size_t start = 0;  // 0-based position of the block
    Point strands;          // sorted strand ids
    Cyclo x;
};

struct WiringDiagram {
    int r = 0;
    std::vector<int> initial;               // strand id at each position
    std::vector<std::vector<int>> braids;   // vertices.size() + 1 words; +-p is sigma_p^{+-1}
    std::vector<VertexEvent> vertices;
    std::vector<int> terminal;              // strand order at the end of the path
    std::vector<int> ids;                   // original line id of each strand
    Rat tilt = 0;                           // fibres are ordered by re + tilt * im/sqrt3
};

WiringDiagram wiring_diagram(const AffineModel& am, unsigned budget = 400);
WiringDiagram conjugate_diagram(const WiringDiagram& d);
// Replays the events, checking every vertex block; returns the final order.
std::vector<int> replay(const WiringDiagram& d);

// Types "++", "+-", "-+", "--".
struct RybnikovRealization {
    Arrangement arr;
    std::array<Rat, 3> rho;  // bottom row (a, b, c) of the point map
};
RybnikovRealization realize_rybnikov(const std::string& type, unsigned budget = 2000);

nlohmann::json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const nlohmann::json& j);
nlohmann::json to_json(const WiringDiagram& d);
WiringDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace lac
