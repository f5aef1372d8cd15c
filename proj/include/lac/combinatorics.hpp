#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lac {

using Point = std::vector<int>;
using Perm = std::vector<int>;

struct LineCombinatorics {
    int n = 0;
    std::vector<Point> points;  // sorted members, list sorted lexicographically

    // Sorts members and points. Adds the missing double points when complete_doubles is set.
    static LineCombinatorics make(int n, std::vector<Point> pts, bool complete_doubles = true);
    std::vector<Point> points_of_size(std::size_t k) const;
    // index of the point containing lines i != j, or -1
    int point_of(int i, int j) const;
    std::vector<int> pair_table() const;  // n*n, -1 on the diagonal or when uncovered
    bool operator==(const LineCombinatorics&) const = default;
    std::size_t max_multiplicity() const;
};

std::vector<std::string> validate(const LineCombinatorics& c);
long multiplicity(const LineCombinatorics& c);
// m3, maclane, ceva, rybnikov, example7, generic3
LineCombinatorics builtin(const std::string& name);
std::vector<std::string> builtin_names();

// permutation p maps line i to p[i]
LineCombinatorics apply_perm(const LineCombinatorics& c, const Perm& p);
std::vector<Perm> automorphism_group(const LineCombinatorics& c);
// p with apply_perm(a, p) == b
std::optional<Perm> find_isomorphism(const LineCombinatorics& a, const LineCombinatorics& b);
// cheap isomorphism invariant, used as a cache bucket key
std::string iso_invariant(const LineCombinatorics& c);

struct SubCombinatorics {
    LineCombinatorics c;
    std::vector<int> index_map;  // new line k is old line index_map[k]
};
SubCombinatorics subcombinatorics(const LineCombinatorics& c, std::vector<int> lines);

struct Triangle {
    std::array<int, 3> points;  // indices into the triple-point list (points_of_size(3))
    std::array<int, 3> lines;   // P∩Q, P∩R, Q∩R
};
std::vector<Triangle> triangles(const LineCombinatorics& c);
// Ordered pairs (Q, R) completing p to a triangle, i.e. twice the unordered count.
int triangle_count_of(const LineCombinatorics& c, const Point& p);

struct Connectivity {
    bool triple_chain_connected = false;
    bool off_column_coverage = false;
};
Connectivity connectivity_checks(const LineCombinatorics& c);

nlohmann::json to_json(const LineCombinatorics& c);
LineCombinatorics comb_from_json(const nlohmann::json& j);

}  // namespace lac
