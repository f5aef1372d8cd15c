#include <mutex>

#include "lac/wiring.hpp"

namespace lac {

namespace {

// rationals by increasing height: 0, 1, -1, 2, -2, 1/2, -1/2, ...
std::vector<Rat> small_rationals(int height) {
    std::vector<Rat> out{Rat(0)};
    for (int h = 1; h <= height; ++h)
        for (int q = 1; q <= h; ++q) {
            int p = h;
            if (q != h && gcd(Int(p), Int(q)) != 1) continue;
            for (const Rat& x : std::vector<Rat>{Rat(p, q), Rat(-p, q), Rat(q, p), Rat(-q, p)}) {
                Rat y = x;
                y.canonicalize();
                if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
            }
        }
    return out;
}

ProjLine transform(const ProjLine& l, const std::array<Rat, 3>& rho) {
    const Cyclo a(rho[0]), b(rho[1]), ic(Rat(1) / rho[2]);
    const auto& v = l.v;
    return {v[0] - v[2] * a * ic, v[1] - v[2] * b * ic, v[2] * ic};
}

Arrangement build(bool first_conj, bool second_conj, const std::array<Rat, 3>& rho) {
    Arrangement a = maclane_arrangement(first_conj);
    const Arrangement s = maclane_arrangement(second_conj);
    for (int k = 3; k < 8; ++k) a.lines.push_back(transform(s.lines[k], rho));
    return a;
}

bool all_types_ok(const std::array<Rat, 3>& rho, const LineCombinatorics& target) {
    for (bool f : {false, true})
        for (bool s : {false, true}) {
            try {
                if (!(combinatorics_of(build(f, s, rho)) == target)) return false;
            } catch (const std::invalid_argument&) {
                return false;
            }
        }
    return true;
}

}  // namespace

RybnikovRealization realize_rybnikov(const std::string& type, unsigned budget) {
    if (type.size() != 2 || (type[0] != '+' && type[0] != '-') || (type[1] != '+' && type[1] != '-'))
        throw std::invalid_argument("rybnikov type must be one of ++ +- -+ --");
    static std::mutex mu;
    static std::optional<std::array<Rat, 3>> cached;
    static unsigned cached_budget = 0;
    {
        std::lock_guard<std::mutex> lk(mu);
        if (!cached || cached_budget > budget) {
            const LineCombinatorics target = builtin("rybnikov");
            const auto qs = small_rationals(4);
            unsigned tries = 0;
            std::optional<std::array<Rat, 3>> found;
            for (const auto& c : qs) {
                if (c == 0) continue;
                for (const auto& a : qs)
                    for (const auto& b : qs) {
                        if (found || tries >= budget) break;
                        ++tries;
                        std::array<Rat, 3> rho{a, b, c};
                        if (all_types_ok(rho, target)) found = rho;
                    }
                if (found || tries >= budget) break;
            }
            if (!found) throw std::runtime_error("realize_rybnikov: search budget exhausted");
            cached = found;
            cached_budget = tries;
        }
    }
    // one real rho serves every type: R_{a,b} = L_a u rho L_b
    RybnikovRealization out{build(type[0] == '-', type[1] == '-', *cached), *cached};
    return out;
}

}  // namespace lac
