#include <algorithm>
#include <cstdio>
#include <numeric>

#include "lac/alexander.hpp"
#include "lac/presentation.hpp"

namespace lac {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) x = -x;
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word commutator(const Word& a, const Word& b) {
    return free_reduce(concat(concat(a, b), concat(inverse(a), inverse(b))));
}

std::vector<long> exponent_sums(const Word& w, int r) {
    std::vector<long> e(r, 0);
    for (int x : w) {
        const int g = std::abs(x);
        if (g < 1 || g > r) throw std::invalid_argument("word letter out of range");
        e[g - 1] += x > 0 ? 1 : -1;
    }
    return e;
}

ZariskiPresentation from_wiring(const WiringDiagram& d) {
    replay(d);  // validates the diagram
    ZariskiPresentation p;
    p.r = d.r;
    p.ids = d.ids;
    p.diagram_hash = diagram_hash(d);
    std::vector<int> strand = d.initial;
    std::vector<Word> mer;
    for (int s : d.initial) mer.push_back({s});
    auto apply = [&](const std::vector<int>& w) {
        for (int l : w) {
            const std::size_t k = std::abs(l) - 1;
            Word a = mer[k], b = mer[k + 1];
            if (l > 0) {
                mer[k] = free_reduce(concat(concat(inverse(a), b), a));
                mer[k + 1] = a;
            } else {
                mer[k] = b;
                mer[k + 1] = free_reduce(concat(concat(b, a), inverse(b)));
            }
            std::swap(strand[k], strand[k + 1]);
        }
    };
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        apply(d.braids[v]);
        const auto& ev = d.vertices[v];
        const std::size_t m = ev.strands.size();
        Word prod;
        for (std::size_t q = m; q-- > 0;) prod = concat(prod, mer[ev.start + q]);
        prod = free_reduce(prod);
        for (std::size_t q = 0; q + 1 < m; ++q) {
            const int s = ev.strands[q];  // sorted, so the largest is skipped
            const std::size_t pos = std::find(strand.begin(), strand.end(), s) - strand.begin();
            p.relations.push_back(commutator(prod, mer[pos]));
            p.tags.push_back({ev.strands, s});
        }
    }
    return p;
}

namespace {

void sort_by_tag(ZariskiPresentation& p) {
    std::vector<std::size_t> idx(p.relations.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return p.tags[a] < p.tags[b]; });
    ZariskiPresentation q = p;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        q.relations[k] = p.relations[idx[k]];
        q.tags[k] = p.tags[idx[k]];
    }
    p = std::move(q);
}

}  // namespace

std::pair<ZariskiPresentation, ZariskiPresentation> matched_pair(ZariskiPresentation a, ZariskiPresentation b) {
    if (a.r != b.r) throw MatchError("matched_pair: generator counts differ");
    sort_by_tag(a);
    sort_by_tag(b);
    if (a.tags != b.tags) throw MatchError("matched_pair: vertex sets differ");
    for (std::size_t k = 0; k < a.relations.size(); ++k) {
        auto ca = reduce_word(a.relations[k], a.r), cb = reduce_word(b.relations[k], b.r);
        if (ca.deg0 != cb.deg0) throw MatchError("matched_pair: degree-0 classes differ at relation " + std::to_string(k));
    }
    return {std::move(a), std::move(b)};
}

std::pair<ZariskiPresentation, ZariskiPresentation> matched_pair(const WiringDiagram& a, const WiringDiagram& b) {
    return matched_pair(from_wiring(a), from_wiring(b));
}

ZariskiReport verify_zariski(const ZariskiPresentation& p, const LineCombinatorics& c) {
    ZariskiReport rep;
    for (std::size_t k = 0; k < p.relations.size(); ++k) {
        auto e = exponent_sums(p.relations[k], p.r);
        if (std::any_of(e.begin(), e.end(), [](long x) { return x != 0; })) {
            rep.exponent_sums_zero = false;
            rep.failures.push_back("relation " + std::to_string(k) + ": nonzero exponent sum");
        }
    }
    // all relations in the commutator subgroup: abelianization is free of rank r
    rep.abelianization_free = rep.exponent_sums_zero;
    const long mult = multiplicity(c);
    if (static_cast<long>(p.relations.size()) != mult) {
        rep.count_matches = false;
        rep.failures.push_back("relation count " + std::to_string(p.relations.size()) + " != multiplicity " +
                               std::to_string(mult));
    }
    if (p.r + 1 != c.n) rep.failures.push_back("generator count does not match the combinatorics");
    return rep;
}

std::string diagram_hash(const WiringDiagram& d) {
    const std::string s = to_json(d).dump();
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json to_json(const ZariskiPresentation& p) {
    nlohmann::json tags = nlohmann::json::array();
    for (const auto& t : p.tags) tags.push_back({{"vertex", t.vertex}, {"strand", t.strand}});
    return {{"r", p.r}, {"relations", p.relations}, {"tags", tags}, {"ids", p.ids}, {"diagram_hash", p.diagram_hash}};
}

ZariskiPresentation presentation_from_json(const nlohmann::json& j) {
    ZariskiPresentation p;
    p.r = j.at("r").get<int>();
    p.relations = j.at("relations").get<std::vector<Word>>();
    if (j.contains("tags"))
        for (const auto& t : j.at("tags")) p.tags.push_back({t.at("vertex").get<Point>(), t.at("strand").get<int>()});
    if (p.tags.size() != p.relations.size()) p.tags.resize(p.relations.size());
    p.ids = j.value("ids", std::vector<int>{});
    p.diagram_hash = j.value("diagram_hash", std::string{});
    return p;
}

}  // namespace lac
