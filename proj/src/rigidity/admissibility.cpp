#include <stdexcept>

#include "lac/rigidity.hpp"

namespace lac {

namespace {

// | x1 y1 1 ; x2 y2 1 ; x3 y3 1 |
Int det_ones(const Int& x1, const Int& y1, const Int& x2, const Int& y2, const Int& x3, const Int& y3) {
    return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1);
}

Int det_bareiss(IntMatrix M) {
    const std::size_t n = M.rows;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && M(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return n == 0 ? Int(1) : Int(sign * prev);
}

}  // namespace

HomologyMatrix canonical(const HomologyMatrix& A) {
    HomologyMatrix B = A;
    if (A.rows == 0) return B;
    const std::size_t last = A.rows - 1;
    for (std::size_t i = 0; i < A.cols; ++i)
        for (std::size_t j = 0; j < A.rows; ++j) B(j, i) = A(j, i) - A(last, i);
    return B;
}

bool equal_mod_ones(const HomologyMatrix& A, const HomologyMatrix& B) {
    return A.rows == B.rows && A.cols == B.cols && canonical(A).a == canonical(B).a;
}

IntMatrix reduced_matrix(const HomologyMatrix& A) {
    if (A.rows != A.cols || A.rows == 0) throw std::invalid_argument("homology matrix must be square");
    const std::size_t r = A.rows - 1;
    IntMatrix B(r, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) B(j, i) = A(j, i) - A(r, i);
    return B;
}

bool invertible_on_h(const HomologyMatrix& A) {
    const Int d = det_bareiss(reduced_matrix(A));
    return d == 1 || d == -1;
}

bool check_admissibility(const HomologyMatrix& A, const LineCombinatorics& c) {
    if (c.max_multiplicity() > 3) throw std::invalid_argument("check_admissibility: point of multiplicity > 3");
    if (A.rows != static_cast<std::size_t>(c.n) || A.cols != A.rows)
        throw std::invalid_argument("check_admissibility: matrix size does not match");
    const auto triples = c.points_of_size(3);
    const auto doubles = c.points_of_size(2);
    for (const auto& P : triples) {
        const int i = P[0], j = P[1], k = P[2];
        for (const auto& Q : doubles) {
            const int u = Q[0], v = Q[1];
            if (det_ones(A(i, u), A(i, v), A(j, u), A(j, v), A(k, u), A(k, v)) != 0) return false;
        }
        for (const auto& Q : triples) {
            auto s = [&](int row) -> Int { return A(row, Q[0]) + A(row, Q[1]) + A(row, Q[2]); };
            for (int b : Q)
                if (det_ones(A(i, b), s(i), A(j, b), s(j), A(k, b), s(k)) != 0) return false;
        }
    }
    return true;
}

std::vector<int> adm_lines(const HomologyMatrix& A, const Point& P) {
    std::vector<int> out;
    for (std::size_t i = 0; i < A.cols; ++i) {
        bool constant = true;
        for (int row : P) constant = constant && A(row, i) == A(P[0], i);
        if (!constant) out.push_back(static_cast<int>(i));
    }
    return out;
}

SubCombinatorics adm_subcombinatorics(const HomologyMatrix& A, const Point& P, const LineCombinatorics& c) {
    if (!check_admissibility(A, c)) throw std::invalid_argument("adm_subcombinatorics: matrix is not admissible");
    return subcombinatorics(c, adm_lines(A, P));
}

bool check_certificate(const LineCombinatorics& c, const std::vector<Vec2>& v) {
    if (v.size() != static_cast<std::size_t>(c.n)) return false;
    auto det = [](const Vec2& a, const Vec2& b) -> Int { return a[0] * b[1] - a[1] * b[0]; };
    Vec2 total{0, 0};
    for (const auto& x : v) {
        if (x[0] == 0 && x[1] == 0) return false;
        total[0] += x[0];
        total[1] += x[1];
    }
    if (total[0] != 0 || total[1] != 0) return false;
    bool rank_two = false;
    for (const auto& P : c.points) {
        Vec2 s{0, 0};
        for (int i : P) s[0] += v[i][0], s[1] += v[i][1];
        for (int i : P)
            if (det(v[i], s) != 0) return false;
        if (P.size() == 3)
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = a + 1; b < 3; ++b) rank_two = rank_two || det(v[P[a]], v[P[b]]) != 0;
    }
    return rank_two;
}

std::string to_string(AdmStatus s) {
    switch (s) {
        case AdmStatus::admissible: return "admissible";
        case AdmStatus::not_admissible: return "not_admissible";
        default: return "unknown";
    }
}

HomologyMatrix example7_witness() {
    return IntMatrix::from({{1, 0, 0, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0, 0},
                            {0, 0, 1, 0, 1, 0, -1},
                            {0, 0, 1, 0, 0, 1, -1},
                            {0, 0, 0, 1, 0, 1, -1},
                            {0, 0, 0, 0, 1, 1, -1}});
}

}  // namespace lac
