#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <stdexcept>
#include <thread>

#include "lac/rigidity.hpp"

namespace lac {

namespace {

bool is_m3(const LineCombinatorics& c) { return c.n == 3 && c.points.size() == 1; }

}  // namespace

PointwiseReport pointwise_3_admissible(const LineCombinatorics& c, unsigned jobs) {
    if (c.n > 13) throw std::invalid_argument("pointwise_3_admissible: more than 13 lines");
    PointwiseReport rep;
    struct Entry {
        std::vector<int> lines;
        std::size_t cls;
    };
    struct Class {
        LineCombinatorics rep;
        AdmissibilityVerdict verdict;
    };
    std::vector<Entry> survivors;
    std::vector<Class> classes;
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (uint32_t mask = 1; mask < (1u << c.n); ++mask) {
        if (std::popcount(mask) < 3) continue;
        ++rep.subsets;
        std::vector<int> lines;
        for (int l = 0; l < c.n; ++l)
            if (mask >> l & 1) lines.push_back(l);
        const auto sub = subcombinatorics(c, lines);
        if (parallel_closure_collapses(sub.c)) {
            ++rep.killed_by_closure;
            continue;
        }
        auto& bucket = buckets[iso_invariant(sub.c)];
        std::size_t cls = classes.size();
        for (std::size_t k : bucket)
            if (find_isomorphism(classes[k].rep, sub.c)) {
                cls = k;
                break;
            }
        if (cls == classes.size()) {
            classes.push_back({sub.c, {}});
            bucket.push_back(cls);
        }
        survivors.push_back({lines, cls});
    }
    rep.iso_classes = classes.size();

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errs(classes.size());
    auto work = [&] {
        for (std::size_t k; (k = next++) < classes.size();) try {
                classes[k].verdict = decide_3_admissible(classes[k].rep);
            } catch (...) {
                errs[k] = std::current_exception();
            }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    for (const auto& e : survivors) {
        const auto& cl = classes[e.cls];
        SubsetVerdict sv{e.lines, cl.verdict.status, cl.verdict.rule, e.cls, is_m3(cl.rep)};
        if (sv.status == AdmStatus::unknown) ++rep.unknown;
        if (sv.status == AdmStatus::admissible) rep.admissible.push_back(sv);
        if (sv.status == AdmStatus::unknown || (sv.status == AdmStatus::admissible && !sv.is_m3))
            rep.offending.push_back(sv);
    }
    rep.pass = rep.offending.empty();
    return rep;
}

}  // namespace lac
