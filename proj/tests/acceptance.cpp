// One line per acceptance criterion. Limits are wall-clock seconds for the criterion.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lac/cli.hpp"
#include "lac/homtriv.hpp"
#include "lac/rigidity.hpp"
#include "properties.hpp"

using namespace lac;

namespace {

constexpr double kLimit1 = 10, kLimit2 = 60, kLimit3 = 300, kLimit4 = 3600, kLimit5 = 300, kLimit6 = 600,
                 kLimit7 = 60, kLimit8 = 600, kLimit9 = 600, kLimit10 = 3600;

struct Pair {
    ZariskiPresentation pa, pb;
    LineCombinatorics c;
};

Pair maclane_pair() {
    const auto d = wiring_diagram(decone_generic(maclane_arrangement(false)));
    Pair p;
    std::tie(p.pa, p.pb) = matched_pair(d, conjugate_diagram(d));
    p.c = combinatorics_of(maclane_arrangement(false));
    return p;
}

Pair rybnikov_pair() {
    const auto a = realize_rybnikov("++"), b = realize_rybnikov("-+");
    Pair p;
    std::tie(p.pa, p.pb) =
        matched_pair(wiring_diagram(decone_generic(a.arr)), wiring_diagram(decone_generic(b.arr)));
    p.c = combinatorics_of(a.arr);
    return p;
}

std::string ranks(const M2Rank& m) {
    std::ostringstream s;
    s << "gr0=" << m.gr0 << " gr1=" << m.gr1 << " M2=" << m.total << " torsion=" << m.torsion.size();
    return s.str();
}

std::string primes(const std::set<Int>& p) {
    std::string out = "{";
    for (const auto& x : p) out += (out.size() > 1 ? "," : "") + x.get_str();
    return out + "}";
}

int failures = 0;

void criterion(int id, const std::string& what, double limit, const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (t > limit) {
        ok = false;
        detail += " [over time limit]";
    }
    if (!ok) ++failures;
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " | " << what << " | " << detail << " | "
              << t << "s of " << limit << "s" << std::endl;
}

}  // namespace

int main() {
    std::cout << std::fixed << std::setprecision(3);
    criterion(1, "MacLane ranks", kLimit1, [](std::string& d) {
        const auto p = maclane_pair();
        const auto m = m2_rank(p.c, p.pa.relations, p.c.n - 1);
        d = ranks(m);
        return m.gr0 == 8 && m.gr1 == 21 && m.total == 29 && m.torsion.empty();
    });
    criterion(2, "Rybnikov ranks", kLimit2, [](std::string& d) {
        const auto p = rybnikov_pair();
        const auto m = m2_rank(p.c, p.pa.relations, p.c.n - 1);
        d = ranks(m);
        return m.gr0 == 15 && m.gr1 == 40 && m.total == 55 && m.torsion.empty();
    });
    criterion(3, "MacLane obstruction system", kLimit3, [](std::string& d) {
        const auto p = maclane_pair();
        const auto v = solve(build_system(p.pa, p.pb, p.c));
        d = "rational=" + std::to_string(v.rational_feasible) + " integer=" + std::to_string(v.integer_feasible) +
            " dimension=" + std::to_string(v.dimension) + " (appearing " + std::to_string(v.dimension_appearing) +
            ") primes=" + primes(v.obstructing_primes);
        if (v.dimension != 98) d += " warning: dimension differs from 98";
        return v.rational_feasible && !v.integer_feasible && v.obstructing_primes == std::set<Int>{3};
    });
    criterion(4, "Rybnikov obstruction system, ++ vs -+", kLimit4, [](std::string& d) {
        const auto p = rybnikov_pair();
        const auto v = solve(build_system(p.pa, p.pb, p.c, 0, 4));
        d = "rational=" + std::to_string(v.rational_feasible) + " integer=" + std::to_string(v.integer_feasible) +
            " dimension=" + std::to_string(v.dimension) + " (appearing " + std::to_string(v.dimension_appearing) +
            ") primes=" + primes(v.obstructing_primes);
        return v.rational_feasible && !v.integer_feasible && v.dimension_appearing == 252;
    });
    criterion(5, "self comparison accepts p = 0", kLimit5, [](std::string& d) {
        const auto p = maclane_pair();
        const auto sys = build_system(p.pa, p.pa, p.c);
        const auto v = solve(sys);
        const bool zero = verify_witness(sys, std::vector<Int>(sys.variables.size(), Int(0)));
        d = "integer=" + std::to_string(v.integer_feasible) + " zero_witness=" + std::to_string(zero);
        return v.integer_feasible && zero;
    });
    criterion(6, "admissibility suite", kLimit6, [](std::string& d) {
        const bool m3 = decide_3_admissible(builtin("m3")).status == AdmStatus::admissible;
        const auto ceva = decide_3_admissible(builtin("ceva"));
        std::vector<Vec2> want;
        for (auto [a, b] : {std::pair{1, 0}, {1, 0}, {0, 1}, {0, 1}, {-1, -1}, {-1, -1}}) want.push_back({Int(a), Int(b)});
        const bool ceva_ok = ceva.status == AdmStatus::admissible && ceva.vectors == want;
        const auto ml = decide_3_admissible(builtin("maclane"));
        const bool ml_ok = ml.status == AdmStatus::not_admissible && replay_trace(builtin("maclane"), ml);
        const auto pm = pointwise_3_admissible(builtin("maclane"), 4);
        const auto pr = pointwise_3_admissible(builtin("rybnikov"), 4);
        d = "m3=" + std::to_string(m3) + " ceva=" + std::to_string(ceva_ok) + " maclane_trace=" +
            std::to_string(ml_ok) + " (" + std::to_string(ml.leaves.size()) + " leaves) pointwise maclane=" +
            std::to_string(pm.pass) + " rybnikov=" + std::to_string(pr.pass) + " subsets=" +
            std::to_string(pr.subsets) + " unknown=" + std::to_string(pm.unknown + pr.unknown);
        return m3 && ceva_ok && ml_ok && pm.pass && pr.pass && pm.unknown == 0 && pr.unknown == 0;
    });
    criterion(7, "triangle census", kLimit7, [](std::string& d) {
        const auto c = builtin("rybnikov");
        int with36 = 0;
        for (const auto& p : c.points_of_size(3)) with36 += triangle_count_of(c, p) == 36;
        const int n0 = triangle_count_of(c, {0, 1, 2});
        d = "count({0,1,2})=" + std::to_string(n0) + " points_with_36=" + std::to_string(with36);
        return n0 == 36 && with36 == 1;
    });
    criterion(8, "rigidity", kLimit8, [](std::string& d) {
        const auto r = rigidity_verdict(builtin("rybnikov"), 1, 4);
        bool discharged = r.unresolved == 0;
        for (const auto& k : r.candidates) discharged = discharged && (k.disposition == "aut" || k.disposition == "obstructed");
        const auto e = rigidity_verdict(builtin("example7"));
        const auto W = example7_witness();
        const bool w = check_admissibility(W, builtin("example7")) && invertible_on_h(W);
        d = "rybnikov=" + to_string(r.verdict) + " candidates=" + std::to_string(r.candidates.size()) +
            " example7=" + to_string(e.verdict) + " listed_witness=" + std::to_string(w);
        return r.verdict == RigidStatus::rigid && discharged && e.verdict == RigidStatus::not_rigid && w;
    });
    criterion(9, "property suites", kLimit9, [](std::string& d) {
        const bool a = props::order_independence(1000, 1000), b = props::jacobi_words_vanish(7),
                   c = props::shear_independence(), e = props::conjugation_involution(),
                   f = props::snf_hnf_reconstruction(77, 300);
        d = "order=" + std::to_string(a) + " jacobi=" + std::to_string(b) + " shear=" + std::to_string(c) +
            " conjugation=" + std::to_string(e) + " snf_hnf=" + std::to_string(f);
        return a && b && c && e && f;
    });
    criterion(10, "end to end reproduce rybnikov", kLimit10, [](std::string& d) {
        cli::RunOptions opt;
        opt.jobs = 4;
        const auto a = cli::cmd_reproduce("rybnikov", opt);
        const auto b = cli::cmd_reproduce("rybnikov", opt);
        const bool same = a.body.dump() == b.body.dump();
        const auto& h = a.body.at("homtriv");
        const bool c4 = h.at("integer_feasible") == false && h.at("dimension_appearing") == 252;
        const bool c8 = a.body.at("rigidity").at("verdict") == "rigid" && a.body.at("rigidity").contains("candidates");
        d = "exit=" + std::to_string(a.exit_code) + " deterministic=" + std::to_string(same) + " conclusion=\"" +
            a.conclusion + "\"";
        return a.exit_code == cli::pass && same && c4 && c8 &&
               a.conclusion.find("not isomorphic") != std::string::npos;
    });
    return failures == 0 ? 0 : 1;
}
