#pragma once
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lac/combinatorics.hpp"
#include "lac/linalg.hpp"

namespace lac {

using Word = std::vector<int>;

// c0 + sum_k lin[k] (t_k - 1) in Lambda / m^2
struct Lambda2 {
    long c0 = 0;
    std::map<int, long> lin;
    static Lambda2 t_power(int k, long e);  // t_k^e
    Lambda2 operator*(const Lambda2& o) const;
    Lambda2 operator+(const Lambda2& o) const;
    bool is_unit() const { return c0 == 1 || c0 == -1; }
    bool operator==(const Lambda2& o) const;
};

using PairKey = std::pair<int, int>;        // (i, j), i < j: x_{i,j}
using TripleKey = std::array<int, 3>;       // (k, i, j): (t_k - 1) x_{i,j}

// An element of the free-group Alexander invariant modulo m^2.
// deg1 is kept in the Jacobi normal basis: k >= i.
struct TruncatedClass {
    std::map<PairKey, long> deg0;
    std::map<TripleKey, long> deg1;

    TruncatedClass& operator+=(const TruncatedClass& o);
    TruncatedClass operator-(const TruncatedClass& o) const;
    TruncatedClass operator-() const;
    bool operator==(const TruncatedClass& o) const = default;
    bool is_zero() const { return deg0.empty() && deg1.empty(); }
    void add0(int i, int j, long c);
    // adds c (t_k - 1) x_{i,j} for any i != j, rewriting into the normal basis
    void add1(int k, int i, int j, long c);
};

struct NotInCommutator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Collection to canonical order. order lists the generators 1..r (default increasing).
TruncatedClass reduce_word(const Word& w, int r, const std::vector<int>& order = {});

// Coordinates of the normal basis.
struct Gr1Index {
    int r = 0;
    std::vector<TripleKey> keys;
    std::map<TripleKey, std::size_t> pos;
    explicit Gr1Index(int r_ = 0);
    std::size_t size() const { return keys.size(); }
};
std::size_t pair_count(int r);
std::size_t pair_pos(int r, int i, int j);  // i < j, 1-based

struct ModulePresentation {
    std::size_t ambient = 0;
    IntMatrix relations;  // rows
    std::vector<std::string> gen_labels, rel_labels;
    Cokernel coker;
};

// Generators are the lines other than decone, renumbered 1..r.
ModulePresentation gr0_presentation(const LineCombinatorics& c, int decone = 0);
ModulePresentation gr1_presentation(const LineCombinatorics& c, int decone = 0);

// Integral quotient map from the normal basis of (t-1)-terms onto gr^1 (free).
struct Gr1Quotient {
    Gr1Index index;
    IntMatrix Q;  // rank(gr1) x index.size()
    std::vector<Int> coords(const TruncatedClass& x) const;
    std::vector<Int> coords(const std::vector<long>& normal) const;
};
Gr1Quotient gr1_quotient(const LineCombinatorics& c, int decone = 0);

struct M2Rank {
    std::size_t gr0 = 0, gr1 = 0, total = 0;
    std::vector<Int> torsion;
};
M2Rank m2_rank(const LineCombinatorics& c, const std::vector<Word>& relations, int r, int decone = 0);

// Degree-0 part unchanged; degree-1 part replaced by gr^1 coordinates.
struct CanonicalForm {
    std::map<PairKey, long> deg0;
    std::vector<Int> gr1;
    bool operator==(const CanonicalForm&) const = default;
};
CanonicalForm canonical_form(const TruncatedClass& x, const Gr1Quotient& q);

// lines not equal to decone, in order; generator g is lines[g-1]
std::vector<int> generator_lines(const LineCombinatorics& c, int decone);
// finite points written in generator indices
std::vector<Point> finite_points(const LineCombinatorics& c, int decone);

nlohmann::json to_json(const TruncatedClass& x);

}  // namespace lac
