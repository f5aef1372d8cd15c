#include <chrono>
#include <functional>

#include "lac/alexander.hpp"
#include "lac/cli.hpp"
#include "lac/homtriv.hpp"
#include "lac/presentation.hpp"
#include "lac/rigidity.hpp"
#include "lac/wiring.hpp"

namespace lac::cli {

namespace {

struct Stages {
    RunReport& rep;
    template <class F>
    auto operator()(const std::string& name, F&& f) -> decltype(f()) {
        const auto t0 = std::chrono::steady_clock::now();
        auto lap = [&] {
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rep.timings[name] = rep.timings.value(name, 0.0) + dt;
        };
        try {
            if constexpr (std::is_void_v<decltype(f())>) {
                f();
                lap();
            } else {
                auto out = f();
                lap();
                return out;
            }
        } catch (const StageError&) {
            throw;
        } catch (const std::exception& e) {
            throw StageError(name, e.what());
        }
    }
};

nlohmann::json diagram_summary(const AffineModel& am, const WiringDiagram& d) {
    return {{"shear", am.shear.get_str()},
            {"vertices", d.vertices.size()},
            {"tilt", d.tilt.get_str()},
            {"hash", diagram_hash(d)}};
}

nlohmann::json presentation_summary(const ZariskiPresentation& p, const LineCombinatorics& c) {
    const auto z = verify_zariski(p, c);
    if (!z.ok()) throw std::runtime_error("presentation check failed: " + z.failures.front());
    return {{"generators", p.r}, {"relations", p.relations.size()}, {"verified", true}, {"hash", hash_json(to_json(p))}};
}

nlohmann::json ranks_json(const M2Rank& m) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& x : m.torsion) t.push_back(x.get_str());
    return {{"gr0", m.gr0}, {"gr1", m.gr1}, {"M2", m.total}, {"torsion", t}};
}

nlohmann::json system_json(const ObstructionSystem& sys, const HomtrivVerdict& v) {
    auto j = to_json(v);
    j["rows"] = sys.A.rows;
    j["variables"] = sys.variables.size();
    j["appearing"] = sys.appearing.size();
    j["gr1_rank"] = sys.gr1_rank;
    return j;
}

// Shared part: wiring, presentations, ranks and the obstruction system for two arrangements.
struct Pipeline {
    ZariskiPresentation pa, pb;
    HomtrivVerdict verdict;
    ObstructionSystem sys;
};

Pipeline run_pair(Stages& st, nlohmann::json& body, const Arrangement& a, const Arrangement* b,
                  const LineCombinatorics& c, const RunOptions& opt) {
    Pipeline out;
    const auto am = st("wiring", [&] { return decone_generic(a); });
    const auto da = st("wiring", [&] { return wiring_diagram(am); });
    WiringDiagram db;
    if (b) {
        const auto bm = st("wiring", [&] { return decone_generic(*b); });
        db = st("wiring", [&] { return wiring_diagram(bm); });
        body["wiring"] = {{"left", diagram_summary(am, da)}, {"right", diagram_summary(bm, db)}};
    } else {
        // the conjugate arrangement, traced along the conjugate path
        db = conjugate_diagram(da);
        body["wiring"] = {{"left", diagram_summary(am, da)}, {"right", {{"conjugate_of_left", true}, {"hash", diagram_hash(db)}}}};
    }
    std::tie(out.pa, out.pb) = st("presentation", [&] { return matched_pair(da, db); });
    body["presentation"] = st("presentation", [&] {
        return nlohmann::json{{"left", presentation_summary(out.pa, c)}, {"right", presentation_summary(out.pb, c)}};
    });
    body["alexander"] = st("alexander", [&] { return ranks_json(m2_rank(c, out.pa.relations, c.n - 1)); });
    out.sys = st("homtriv", [&] { return build_system(out.pa, opt.self_compare ? out.pa : out.pb, c, 0, opt.jobs); });
    out.verdict = st("homtriv", [&] { return solve(out.sys); });
    if (out.verdict.integer_feasible && !verify_witness(out.sys, out.verdict.witness))
        throw StageError("homtriv", "witness does not verify");
    body["homtriv"] = system_json(out.sys, out.verdict);
    body["homtriv"]["self_compare"] = opt.self_compare;
    return out;
}

}  // namespace

RunReport cmd_reproduce(const std::string& target, const RunOptions& opt) {
    RunReport rep;
    Stages st{rep};
    auto& body = rep.body;
    body["tool"] = "lac";
    body["version"] = kVersion;
    body["target"] = target;
    body["seed"] = opt.seed;
    if (target == "maclane") {
        const auto arr = maclane_arrangement(false);
        const auto c = st("combinatorics", [&] {
            auto cc = combinatorics_of(arr);
            if (!find_isomorphism(cc, builtin("maclane"))) throw std::runtime_error("not the MacLane combinatorics");
            return cc;
        });
        body["inputs"] = {{"arrangement", hash_json(to_json(arr))}, {"combinatorics", hash_json(to_json(c))}};
        body["combinatorics"] = {{"lines", c.n}, {"points", c.points.size()}, {"multiplicity", multiplicity(c)}};
        const auto p = run_pair(st, body, arr, nullptr, c, opt);
        if (opt.self_compare) {
            rep.exit_code = p.verdict.integer_feasible ? pass : fail;
            rep.conclusion = p.verdict.integer_feasible ? "self-comparison feasible, witness verified"
                                                        : "self-comparison infeasible";
        } else {
            rep.exit_code = p.verdict.integer_feasible ? fail : pass;
            rep.conclusion = p.verdict.integer_feasible
                                 ? "obstruction system has an integer solution"
                                 : "no homologically trivial isomorphism between the two fundamental groups";
        }
    } else if (target == "rybnikov") {
        const auto ra = st("realization", [&] { return realize_rybnikov("++"); });
        const auto rb = st("realization", [&] { return realize_rybnikov("-+"); });
        const auto c = st("combinatorics", [&] {
            auto cc = combinatorics_of(ra.arr);
            if (combinatorics_of(rb.arr).points != cc.points) throw std::runtime_error("realizations differ");
            if (!find_isomorphism(cc, builtin("rybnikov"))) throw std::runtime_error("not the Rybnikov combinatorics");
            return cc;
        });
        body["inputs"] = {{"left", hash_json(to_json(ra.arr))}, {"right", hash_json(to_json(rb.arr))},
                          {"combinatorics", hash_json(to_json(c))}};
        body["realization"] = {{"left", "++"}, {"right", "-+"},
                               {"rho", {ra.rho[0].get_str(), ra.rho[1].get_str(), ra.rho[2].get_str()}}};
        body["combinatorics"] = {{"lines", c.n}, {"points", c.points.size()}, {"multiplicity", multiplicity(c)}};
        const auto p = run_pair(st, body, ra.arr, &rb.arr, c, opt);
        const auto rig = st("rigidity", [&] { return rigidity_verdict(c, opt.seed, opt.jobs); });
        body["rigidity"] = to_json(rig);
        const bool obstructed = !p.verdict.integer_feasible && !opt.self_compare;
        const bool rigid = rig.verdict == RigidStatus::rigid;
        if (obstructed && rigid) {
            rep.exit_code = pass;
            rep.conclusion = "the fundamental groups of the two complements are not isomorphic";
        } else if (!obstructed) {
            rep.exit_code = fail;
            rep.conclusion = "obstruction system has an integer solution";
        } else {
            rep.exit_code = inconclusive;
            rep.conclusion = "rigidity not certified: " + rig.failing_step;
        }
    } else {
        throw std::invalid_argument("unknown target " + target);
    }
    body["conclusion"] = rep.conclusion;
    body["exit_code"] = rep.exit_code;
    return rep;
}

}  // namespace lac::cli
