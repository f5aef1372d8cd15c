#pragma once
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lac {

using Int = mpz_class;
using Rat = mpq_class;
inline int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

Rat parse_rat(const std::string& s);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

// p + q*sqrt(3), totally ordered by the real embedding.
struct Sqrt3 {
    Rat p, q;
    int sign() const;
    Sqrt3 operator-(const Sqrt3& o) const { return {p - o.p, q - o.q}; }
    Sqrt3 operator+(const Sqrt3& o) const { return {p + o.p, q + o.q}; }
    double approx() const;
    friend std::strong_ordering operator<=>(const Sqrt3& x, const Sqrt3& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator==(const Sqrt3& x, const Sqrt3& y) { return x.p == y.p && x.q == y.q; }
};

// a + b*w with w^2 + w + 1 = 0.
struct Cyclo {
    Rat a, b;
    Cyclo() = default;
    Cyclo(long v) : a(v), b(0) {}
    Cyclo(Rat x) : a(std::move(x)), b(0) {}
    Cyclo(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}
    static Cyclo omega() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_real() const { return b == 0; }
    Cyclo conj() const { return {a - b, -b}; }
    Rat norm() const { return a * a - a * b + b * b; }
    Cyclo inv() const;
    // real part is rational; imaginary part is im3() * sqrt(3)
    Rat re() const { return a - b / 2; }
    Rat im3() const { return b / 2; }
    Sqrt3 im() const { return {Rat(0), b / 2}; }

    Cyclo operator+(const Cyclo& o) const { return {a + o.a, b + o.b}; }
    Cyclo operator-(const Cyclo& o) const { return {a - o.a, b - o.b}; }
    Cyclo operator-() const { return {-a, -b}; }
    Cyclo operator*(const Cyclo& o) const {
        // w^2 = -1 - w
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    Cyclo operator/(const Cyclo& o) const { return *this * o.inv(); }
    bool operator==(const Cyclo& o) const { return a == o.a && b == o.b; }
    bool operator<(const Cyclo& o) const { return a < o.a || (a == o.a && b < o.b); }
    std::string str() const;
};

// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;
    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from(const std::vector<std::vector<long>>& v, std::size_t cols = 0);
    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    IntMatrix transpose() const;
    std::vector<Int> row(std::size_t i) const;
    void append_row(const std::vector<Int>& r);
    bool is_zero_row(std::size_t i) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;
};

}  // namespace lac
