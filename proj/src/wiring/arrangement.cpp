#include <algorithm>
#include <map>

#include "lac/wiring.hpp"

namespace lac {

ProjLine::ProjLine(Cyclo a, Cyclo b, Cyclo c) : v{std::move(a), std::move(b), std::move(c)} {
    std::size_t k = 0;
    while (k < 3 && v[k].is_zero()) ++k;
    if (k == 3) throw std::invalid_argument("ProjLine: zero coefficients");
    Cyclo s = v[k].inv();
    for (auto& x : v) x = x * s;
}

ProjLine ProjLine::conj() const { return {v[0].conj(), v[1].conj(), v[2].conj()}; }

Arrangement maclane_arrangement(bool conj) {
    const Cyclo w = conj ? Cyclo::omega().conj() : Cyclo::omega();
    Arrangement a;
    a.lines = {{1, 0, 0},  {0, 1, 0},  {1, -1, 0},           {0, 0, 1},
               {1, 0, -1}, {0, w, 1}, {-(w + Cyclo(1)), w, 1}, {-1, w + Cyclo(1), 1}};
    return a;
}

Arrangement conjugate(const Arrangement& a) {
    Arrangement b = a;
    for (auto& l : b.lines) l = l.conj();
    return b;
}

namespace {

using Vec3 = std::array<Cyclo, 3>;

Vec3 cross(const Vec3& p, const Vec3& q) {
    return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

Vec3 normalize(Vec3 p) {
    std::size_t k = 0;
    while (k < 3 && p[k].is_zero()) ++k;
    if (k == 3) return p;
    Cyclo s = p[k].inv();
    for (auto& x : p) x = x * s;
    return p;
}

using Mat3 = std::array<Vec3, 3>;

Mat3 inverse(const Mat3& m) {
    Mat3 adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    Cyclo det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
    if (det.is_zero()) throw std::invalid_argument("singular 3x3 matrix");
    Cyclo id = det.inv();
    for (auto& row : adj)
        for (auto& x : row) x = x * id;
    return adj;
}

// row vector times matrix
Vec3 vmul(const Vec3& l, const Mat3& m) {
    Vec3 r{Cyclo(0), Cyclo(0), Cyclo(0)};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r[j] = r[j] + l[k] * m[k][j];
    return r;
}

}  // namespace

LineCombinatorics combinatorics_of(const Arrangement& a) {
    const int n = static_cast<int>(a.lines.size());
    std::map<std::vector<std::pair<Rat, Rat>>, std::vector<int>> pts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a.lines[i] == a.lines[j]) throw std::invalid_argument("arrangement: repeated line");
            Vec3 p = normalize(cross(a.lines[i].v, a.lines[j].v));
            std::vector<std::pair<Rat, Rat>> key;
            for (const auto& x : p) key.emplace_back(x.a, x.b);
            auto& s = pts[key];
            s.push_back(i);
            s.push_back(j);
        }
    std::vector<Point> out;
    for (auto& [k, s] : pts) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        out.push_back(s);
    }
    return LineCombinatorics::make(n, out, false);
}

AffineModel decone_and_shear(const Arrangement& a, const Rat& shear) {
    const int n = static_cast<int>(a.lines.size());
    if (a.decone < 0 || a.decone >= n) throw std::invalid_argument("decone index out of range");
    const Vec3& L = a.lines[a.decone].v;
    // new coordinates: x' = L.p, y', z' = two unit coordinates completing a basis
    Mat3 M{L, Vec3{Cyclo(0), Cyclo(1), Cyclo(0)}, Vec3{Cyclo(0), Cyclo(0), Cyclo(1)}};
    if (L[0].is_zero()) {
        M[1] = Vec3{Cyclo(1), Cyclo(0), Cyclo(0)};
        if (L[1].is_zero()) M[2] = Vec3{Cyclo(0), Cyclo(1), Cyclo(0)};
    }
    const Mat3 Mi = inverse(M);
    AffineModel am;
    am.shear = shear;
    for (int k = 0; k < n; ++k) {
        if (k == a.decone) continue;
        Vec3 l = vmul(a.lines[k].v, Mi);
        // chart x' = 1, X = y + s z, Y = z:  c + a X + (b - a s) Y = 0
        const Cyclo &cx = l[0], &cy = l[1], &cz = l[2];
        Cyclo den = cz - cy * Cyclo(shear);
        if (den.is_zero()) throw NonGeneric("vertical line after shear");
        Cyclo id = den.inv();
        am.m.push_back(-cy * id);
        am.c.push_back(-cx * id);
        am.ids.push_back(k);
    }
    affine_vertices(am);  // genericity check
    return am;
}

std::vector<Vertex> affine_vertices(const AffineModel& am) {
    const std::size_t r = am.r();
    std::map<std::pair<Rat, Rat>, std::pair<Cyclo, Point>> by_x;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            if (am.m[i] == am.m[j]) {
                if (am.c[i] == am.c[j]) throw std::invalid_argument("repeated affine line");
                continue;  // meet on the deconing line
            }
            Cyclo X = (am.c[j] - am.c[i]) / (am.m[i] - am.m[j]);
            auto& e = by_x[{X.a, X.b}];
            e.first = X;
            e.second.push_back(static_cast<int>(i) + 1);
            e.second.push_back(static_cast<int>(j) + 1);
        }
    std::vector<Vertex> out;
    for (auto& [k, e] : by_x) {
        Point s = e.second;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        const Cyclo Y = am.value(s[0] - 1, e.first);
        for (int g : s)
            if (!(am.value(g - 1, e.first) == Y)) throw NonGeneric("two vertices over one X");
        out.push_back({e.first, s});
    }
    std::sort(out.begin(), out.end(), [](const Vertex& u, const Vertex& v) {
        Rat ur = u.x.re(), vr = v.x.re();
        if (ur != vr) return ur < vr;
        return u.x.im3() < v.x.im3();
    });
    return out;
}

AffineModel decone_generic(const Arrangement& a, int skip) {
    for (int k = 1; k < 200; ++k) {
        Rat s(k, 2 * k + 1);
        s.canonicalize();
        try {
            AffineModel am = decone_and_shear(a, s);
            if (skip-- > 0) continue;
            return am;
        } catch (const NonGeneric&) {
        }
    }
    throw NonGeneric("no generic shear found");
}

nlohmann::json to_json(const Cyclo& c) { return {{"a", c.a.get_str()}, {"b", c.b.get_str()}}; }

Cyclo cyclo_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Cyclo(j.get<long>());
    return {parse_rat(j.at("a").get<std::string>()), parse_rat(j.at("b").get<std::string>())};
}

nlohmann::json to_json(const Arrangement& a) {
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : a.lines) ls.push_back({to_json(l.v[0]), to_json(l.v[1]), to_json(l.v[2])});
    return {{"lines", ls}, {"decone", a.decone}};
}

Arrangement arrangement_from_json(const nlohmann::json& j) {
    Arrangement a;
    for (const auto& l : j.at("lines"))
        a.lines.emplace_back(cyclo_from_json(l.at(0)), cyclo_from_json(l.at(1)), cyclo_from_json(l.at(2)));
    a.decone = j.value("decone", 0);
    return a;
}

}  // namespace lac
