#include <stdexcept>

#include "lac/linalg.hpp"

namespace lac {

std::set<Int> prime_factors(Int n) {
    std::set<Int> out;
    n = abs(n);
    if (n <= 1) return out;
    for (unsigned long p = 2; p < 1000000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.insert(Int(p));
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw std::runtime_error("prime_factors: cofactor too large to split");
        out.insert(n);
    }
    return out;
}

// Work on the column lattice of A: rows of U*A^T = [H; 0] give a basis H of it.
HermiteSolution hermite_solve(const IntMatrix& A, const std::vector<Int>& b, bool want_kernel) {
    if (b.size() != A.rows) throw std::invalid_argument("hermite_solve: rhs length");
    const std::size_t n = A.cols;
    Echelon e = row_echelon(A.transpose(), true, false);
    HermiteSolution s;
    s.rank = e.pivots.size();

    std::vector<Rat> res(b.begin(), b.end());
    s.coords.resize(s.rank);
    for (std::size_t i = 0; i < s.rank; ++i) {
        const std::size_t c = e.pivots[i];
        Rat z = res[c] / Rat(e.H(i, c));
        z.canonicalize();
        s.coords[i] = z;
        if (z == 0) continue;
        for (std::size_t j = c; j < A.rows; ++j)
            if (e.H(i, j) != 0) res[j] -= z * e.H(i, j);
    }
    s.rational_feasible = true;
    for (const auto& r : res)
        if (r != 0) s.rational_feasible = false;
    if (!s.rational_feasible) return s;

    Int den = 1;
    for (const auto& z : s.coords) den = lcm(den, Int(z.get_den()));
    s.obstructing_primes = prime_factors(den);
    s.integer_feasible = den == 1;

    if (s.integer_feasible) {
        s.x.assign(n, Int(0));
        for (std::size_t i = 0; i < s.rank; ++i) {
            Int z = s.coords[i].get_num();
            if (z == 0) continue;
            for (std::size_t j = 0; j < n; ++j) s.x[j] += z * e.U(i, j);
        }
        if (A.apply(s.x) != b) throw std::logic_error("hermite_solve: residual check failed");
    }
    if (want_kernel) {
        s.kernel = IntMatrix(n - s.rank, n);
        for (std::size_t i = s.rank; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s.kernel(i - s.rank, j) = e.U(i, j);
    }
    return s;
}

std::optional<std::size_t> rational_solution_dim(const IntMatrix& A, const std::vector<Int>& b) {
    HermiteSolution s = hermite_solve(A, b, false);
    if (!s.rational_feasible) return std::nullopt;
    return A.cols - s.rank;
}

std::optional<std::set<Int>> local_feasibility(const IntMatrix& A, const std::vector<Int>& b) {
    HermiteSolution s = hermite_solve(A, b, false);
    if (!s.rational_feasible) return std::nullopt;
    return s.obstructing_primes;
}

}  // namespace lac
