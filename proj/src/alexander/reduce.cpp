#include <stdexcept>

#include "lac/alexander.hpp"

namespace lac {

Lambda2 Lambda2::t_power(int k, long e) {
    Lambda2 x;
    x.c0 = 1;
    if (e) x.lin[k] = e;  // (1 + u)^e = 1 + e u mod m^2
    return x;
}

Lambda2 Lambda2::operator*(const Lambda2& o) const {
    Lambda2 r;
    r.c0 = c0 * o.c0;
    for (const auto& [k, v] : lin) r.lin[k] += v * o.c0;
    for (const auto& [k, v] : o.lin) r.lin[k] += v * c0;
    std::erase_if(r.lin, [](const auto& kv) { return kv.second == 0; });
    return r;
}

Lambda2 Lambda2::operator+(const Lambda2& o) const {
    Lambda2 r = *this;
    r.c0 += o.c0;
    for (const auto& [k, v] : o.lin) r.lin[k] += v;
    std::erase_if(r.lin, [](const auto& kv) { return kv.second == 0; });
    return r;
}

bool Lambda2::operator==(const Lambda2& o) const {
    Lambda2 a = *this + Lambda2{}, b = o + Lambda2{};
    return a.c0 == b.c0 && a.lin == b.lin;
}

void TruncatedClass::add0(int i, int j, long c) {
    if (i == j || c == 0) return;
    if (i > j) std::swap(i, j), c = -c;
    if ((deg0[{i, j}] += c) == 0) deg0.erase({i, j});
}

void TruncatedClass::add1(int k, int i, int j, long c) {
    if (i == j || c == 0) return;
    if (i > j) std::swap(i, j), c = -c;
    auto bump = [&](TripleKey key, long v) {
        if ((deg1[key] += v) == 0) deg1.erase(key);
    };
    if (k >= i) {
        bump({k, i, j}, c);
        return;
    }
    // Jacobi: (t_k-1)x_{ij} = (t_i-1)x_{kj} - (t_j-1)x_{ki} for k < i < j
    bump({i, k, j}, c);
    bump({j, k, i}, -c);
}

TruncatedClass& TruncatedClass::operator+=(const TruncatedClass& o) {
    for (const auto& [k, v] : o.deg0) add0(k.first, k.second, v);
    for (const auto& [k, v] : o.deg1)
        if ((deg1[k] += v) == 0) deg1.erase(k);
    return *this;
}

TruncatedClass TruncatedClass::operator-() const {
    TruncatedClass r = *this;
    for (auto& [k, v] : r.deg0) v = -v;
    for (auto& [k, v] : r.deg1) v = -v;
    return r;
}

TruncatedClass TruncatedClass::operator-(const TruncatedClass& o) const {
    TruncatedClass r = *this;
    r += -o;
    return r;
}

// Left-to-right collection. The processed prefix is kept as
// x_1^{e_1} ... x_r^{e_r} * tau (canonical order, tau in F').
// Appending x^eps moves x^eps leftwards past the later generators S:
//   S x^eps = x^eps S [S^-1, x^-eps]
// and then tau x^eps = x^eps (x^-eps tau x^eps).
TruncatedClass reduce_word(const Word& w, int r, const std::vector<int>& order_in) {
    std::vector<int> order = order_in;
    if (order.empty())
        for (int g = 1; g <= r; ++g) order.push_back(g);
    if (static_cast<int>(order.size()) != r) throw std::invalid_argument("reduce_word: order length");
    std::vector<int> pos(r + 1, -1);
    for (int k = 0; k < r; ++k) pos.at(order[k]) = k;
    std::vector<long> e(r + 1, 0);
    TruncatedClass tau;

    for (int a : w) {
        const int x = std::abs(a);
        if (x < 1 || x > r) throw std::invalid_argument("reduce_word: letter out of range");
        const long eps = a > 0 ? 1 : -1;
        // conjugation by x^-eps multiplies by t_x^-eps = 1 - eps (t_x - 1)
        for (const auto& [key, c] : tau.deg0) tau.add1(x, key.first, key.second, -eps * c);
        // [S^-1, x^-eps], S^-1 = product of y^-e_y over later generators, reversed
        Lambda2 prefix;  // linear part of the factors already passed
        for (int q = r - 1; q > pos[x]; --q) {
            const int y = order[q];
            const long beta = -e[y];
            if (beta == 0) continue;
            // [y^beta, c] = (beta + C(beta,2)(t_y-1)) [y, c]; earlier factors contribute prefix
            Lambda2 coef;
            coef.c0 = beta;
            for (const auto& [k, v] : prefix.lin) coef.lin[k] += beta * v;
            coef.lin[y] += beta * (beta - 1) / 2;
            if (eps == 1) {
                // [y, x^-1] = (-1 + (t_x - 1)) [y, x]
                Lambda2 f;
                f.c0 = -1;
                f.lin[x] = 1;
                coef = coef * f;
            }
            tau.add0(y, x, coef.c0);
            for (const auto& [k, v] : coef.lin) tau.add1(k, y, x, v);
            prefix.lin[y] += beta;
        }
        e[x] += eps;
    }
    for (int g = 1; g <= r; ++g)
        if (e[g] != 0) throw NotInCommutator("reduce_word: word not in the commutator subgroup");
    return tau;
}

nlohmann::json to_json(const TruncatedClass& x) {
    nlohmann::json d0 = nlohmann::json::object(), d1 = nlohmann::json::object();
    for (const auto& [k, v] : x.deg0) d0[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
    for (const auto& [k, v] : x.deg1)
        d1[std::to_string(k[0]) + ";" + std::to_string(k[1]) + "," + std::to_string(k[2])] = v;
    return {{"deg0", d0}, {"deg1", d1}};
}

}  // namespace lac
