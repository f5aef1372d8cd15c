// lac: command line front end.
#include <iostream>

#include "CLI11.hpp"
#include "lac/alexander.hpp"
#include "lac/cli.hpp"
#include "lac/homtriv.hpp"
#include "lac/presentation.hpp"
#include "lac/rigidity.hpp"
#include "lac/wiring.hpp"

using namespace lac;
using nlohmann::json;

namespace {

struct Out {
    json body;
    int code = cli::pass;
};

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_text(const json& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix + it.key();
        if (it->is_object()) print_text(*it, key + ".");
        else if (it->is_array() && !it->empty() && (it->front().is_object() || it->front().is_array()))
            std::cout << key << ": " << it->size() << " entries\n";
        else std::cout << key << ": " << scalar(*it) << "\n";
    }
}

Arrangement arrangement_arg(const std::string& s) {
    if (s == "maclane") return maclane_arrangement(false);
    if (s == "maclane-conj") return maclane_arrangement(true);
    if (s.rfind("rybnikov:", 0) == 0) return realize_rybnikov(s.substr(9)).arr;
    return arrangement_from_json(cli::read_json_file(s));
}

Out comb_info(const LineCombinatorics& c) {
    json by = json::object();
    for (const auto& p : c.points) by[std::to_string(p.size())] = by.value(std::to_string(p.size()), 0) + 1;
    return {{{"lines", c.n}, {"points", c.points.size()}, {"multiplicity", multiplicity(c)}, {"by_size", by}}};
}

Out comb_triangles(const LineCombinatorics& c) {
    json per = json::array();
    for (const auto& p : c.points_of_size(3)) per.push_back({{"point", p}, {"count", triangle_count_of(c, p)}});
    return {{{"triangles", triangles(c).size()}, {"per_point", per}}};
}

Out adm_check(const LineCombinatorics& c, bool pointwise, unsigned jobs) {
    if (pointwise) {
        const auto r = pointwise_3_admissible(c, jobs);
        return {to_json(r), r.pass ? cli::pass : (r.unknown ? cli::inconclusive : cli::fail)};
    }
    const auto v = decide_3_admissible(c);
    auto j = to_json(v);
    j["replay"] = v.status == AdmStatus::not_admissible && v.rule == "branch" ? replay_trace(c, v) : true;
    const int code = v.status == AdmStatus::admissible       ? cli::pass
                     : v.status == AdmStatus::not_admissible ? cli::fail
                                                             : cli::inconclusive;
    return {j, code};
}

Out rigid_check(const LineCombinatorics& c, uint64_t seed, unsigned jobs) {
    const auto r = rigidity_verdict(c, seed, jobs);
    const int code = r.verdict == RigidStatus::rigid       ? cli::pass
                     : r.verdict == RigidStatus::not_rigid ? cli::fail
                                                           : cli::inconclusive;
    return {to_json(r), code};
}

Out homtriv_solve(const std::string& left, const std::string& right, const std::string& comb, unsigned jobs) {
    const auto pa = presentation_from_json(cli::read_json_file(left));
    const auto pb = presentation_from_json(cli::read_json_file(right));
    const auto c = cli::load_combinatorics(comb);
    const auto [ma, mb] = matched_pair(pa, pb);
    const auto sys = build_system(ma, mb, c, 0, jobs);
    const auto v = solve(sys);
    auto j = to_json(v);
    j["rows"] = sys.A.rows;
    j["variables"] = sys.variables.size();
    j["appearing"] = sys.appearing.size();
    // feasible means no obstruction was found
    return {j, v.integer_feasible ? cli::fail : cli::pass};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of complex line arrangements"};
    app.require_subcommand(1);
    app.fallthrough();
    uint64_t seed = 1;
    unsigned jobs = 1;
    std::string report, format = "json";
    app.add_option("--seed", seed, "seed for every randomized step")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads")->capture_default_str();
    app.add_option("--report", report, "write the report to PATH");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.set_version_flag("--version", cli::kVersion);

    std::function<Out()> run;
    std::string comb, target, left, right, file, against;
    bool pointwise = false, self = false, timings = false;

    auto* cm = app.add_subcommand("comb", "combinatorics")->require_subcommand(1);
    auto comb_cmd = [&](const char* name, const char* help, std::function<Out(const LineCombinatorics&)> f) {
        auto* s = cm->add_subcommand(name, help);
        s->add_option("C", comb, "builtin name or JSON file")->required();
        s->callback([&, f] { run = [&, f] { return f(cli::load_combinatorics(comb)); }; });
    };
    comb_cmd("validate", "check the incidence axioms", [](const LineCombinatorics& c) {
        const auto errs = validate(c);
        return Out{{{"valid", errs.empty()}, {"errors", errs}}, errs.empty() ? cli::pass : cli::fail};
    });
    comb_cmd("info", "counts and multiplicity", comb_info);
    comb_cmd("aut", "automorphism group", [](const LineCombinatorics& c) {
        const auto g = automorphism_group(c);
        return Out{{{"order", g.size()}, {"elements", g}}};
    });
    comb_cmd("triangles", "triangle census", comb_triangles);

    auto* am = app.add_subcommand("adm", "admissibility")->require_subcommand(1);
    auto* ac = am->add_subcommand("check", "decide 3-admissibility");
    ac->add_option("C", comb)->required();
    ac->add_flag("--pointwise", pointwise, "decide pointwise 3-admissibility instead");
    ac->callback([&] { run = [&] { return adm_check(cli::load_combinatorics(comb), pointwise, jobs); }; });

    auto* pw = app.add_subcommand("pointwise", "pointwise 3-admissibility sweep");
    pw->add_option("C", comb)->required();
    pw->callback([&] { run = [&] { return adm_check(cli::load_combinatorics(comb), true, jobs); }; });

    auto* rm = app.add_subcommand("rigid", "combinatorial rigidity")->require_subcommand(1);
    auto* rc = rm->add_subcommand("check", "rigidity verdict");
    rc->add_option("C", comb)->required();
    rc->callback([&] { run = [&] { return rigid_check(cli::load_combinatorics(comb), seed, jobs); }; });

    auto* wi = app.add_subcommand("wiring", "braided wiring diagram of an arrangement");
    wi->add_option("A", target, "maclane, maclane-conj, rybnikov:TYPE or an arrangement JSON file")->required();
    wi->callback([&] { run = [&] { return Out{to_json(wiring_diagram(decone_generic(arrangement_arg(target))))}; }; });

    auto* pr = app.add_subcommand("present", "presentation from a wiring diagram");
    pr->add_option("D", file, "diagram JSON")->required();
    pr->add_option("--against", against, "second diagram; relations are matched");
    pr->callback([&] {
        run = [&] {
            const auto d = diagram_from_json(cli::read_json_file(file));
            if (against.empty()) return Out{to_json(from_wiring(d))};
            const auto [a, b] = matched_pair(d, diagram_from_json(cli::read_json_file(against)));
            return Out{{{"left", to_json(a)}, {"right", to_json(b)}}};
        };
    });

    auto* al = app.add_subcommand("alex", "truncated Alexander ranks");
    al->add_option("P", file, "presentation JSON")->required();
    al->add_option("--comb", comb)->required();
    al->callback([&] {
        run = [&] {
            const auto c = cli::load_combinatorics(comb);
            const auto m = m2_rank(c, presentation_from_json(cli::read_json_file(file)).relations, c.n - 1);
            json t = json::array();
            for (const auto& x : m.torsion) t.push_back(x.get_str());
            return Out{{{"gr0", m.gr0}, {"gr1", m.gr1}, {"M2", m.total}, {"torsion", t}}};
        };
    });

    auto* hm = app.add_subcommand("homtriv", "homologically trivial isomorphisms")->require_subcommand(1);
    auto* hs = hm->add_subcommand("solve", "build and solve the obstruction system");
    hs->add_option("--left", left)->required();
    hs->add_option("--right", right)->required();
    hs->add_option("--comb", comb)->required();
    hs->callback([&] { run = [&] { return homtriv_solve(left, right, comb, jobs); }; });

    auto* rp = app.add_subcommand("reproduce", "full pipeline");
    rp->add_option("T", target, "maclane or rybnikov")->required()->check(CLI::IsMember({"maclane", "rybnikov"}));
    rp->add_flag("--self", self, "compare the first arrangement with itself");
    rp->add_flag("--timings", timings, "add stage timings (the report is then not reproducible)");
    rp->callback([&] {
        run = [&] {
            auto r = cli::cmd_reproduce(target, {seed, jobs, self});
            if (timings) r.body["timings"] = r.timings;
            return Out{r.body, r.exit_code};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::usage;
    }
    Out out;
    try {
        out = run();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::inconclusive;
    }
    const std::string dumped = out.body.dump(2) + "\n";
    if (!report.empty()) cli::write_text_file(report, dumped);
    if (format == "json") std::cout << dumped;
    else print_text(out.body);
    return out.code;
}
