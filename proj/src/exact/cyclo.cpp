#include <cmath>
#include <stdexcept>

#include "lac/exact.hpp"

namespace lac {

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }

int Sqrt3::sign() const {
    int s = sgn(p), t = sgn(q);
    if (s >= 0 && t >= 0) return (s || t) ? 1 : 0;
    if (s <= 0 && t <= 0) return -1;
    Rat d = p * p - 3 * q * q;  // nonzero: sqrt(3) is irrational
    return s > 0 ? sgn(d) : -sgn(d);
}

double Sqrt3::approx() const { return p.get_d() + q.get_d() * std::sqrt(3.0); }

Cyclo Cyclo::inv() const {
    Rat n = norm();
    if (n == 0) throw std::domain_error("Cyclo: division by zero");
    Cyclo c = conj();
    return {c.a / n, c.b / n};
}

std::string Cyclo::str() const {
    if (b == 0) return a.get_str();
    return a.get_str() + (b < 0 ? "-" : "+") + Rat(abs(b)).get_str() + "w";
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from(const std::vector<std::vector<long>>& v, std::size_t cols) {
    if (!v.empty()) cols = v[0].size();
    IntMatrix m(v.size(), cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return {a.begin() + i * cols, a.begin() + (i + 1) * cols};
}

void IntMatrix::append_row(const std::vector<Int>& r) {
    if (rows == 0 && cols == 0) cols = r.size();
    if (r.size() != cols) throw std::invalid_argument("row length mismatch");
    a.insert(a.end(), r.begin(), r.end());
    ++rows;
}

bool IntMatrix::is_zero_row(std::size_t i) const {
    for (std::size_t j = 0; j < cols; ++j)
        if ((*this)(i, j) != 0) return false;
    return true;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols) throw std::invalid_argument("vector length mismatch");
    std::vector<Int> y(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (x[j] != 0) y[i] += (*this)(i, j) * x[j];
    return y;
}

}  // namespace lac
