#include "skein/diagram.hpp"
#include "skein/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace skein {

OrientedDiagram splice(const OrientedDiagram& d, const std::vector<int>& which,
                       const std::vector<std::pair<int, int>>& joins) {
    std::set<int> dead(which.begin(), which.end());
    std::map<int, int> succ;  // in-arc -> out-arc across a deleted crossing
    for (auto [a, b] : joins) succ[a] = b;

    // arcs whose tail crossing survives (or that begin a chain)
    std::set<int> chain_out;  // arcs that are the continuation of some arc
    for (auto [a, b] : joins) chain_out.insert(b);

    std::map<int, int> remap;  // arc -> representative surviving id
    std::vector<int> free_circles;
    std::set<int> done;
    for (auto [start, ignored] : succ) {
        if (done.count(start) || chain_out.count(start)) continue;
        // open chain starting at `start` (its tail is intact)
        int a = start;
        done.insert(a);
        while (succ.count(a)) {
            a = succ[a];
            done.insert(a);
            remap[a] = start;
        }
        remap[start] = start;
    }
    // remaining joined arcs form closed cycles -> free circles
    for (auto [start, ignored] : succ) {
        if (done.count(start)) continue;
        int a = start, rep = start;
        do {
            rep = std::min(rep, a);
            a = succ[a];
        } while (a != start);
        do {
            done.insert(a);
            remap[a] = rep;
            a = succ[a];
        } while (a != start);
        free_circles.push_back(rep);
    }

    OrientedDiagram out;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        if (dead.count(static_cast<int>(c))) continue;
        Crossing x = d.crossings[c];
        for (int* slot : {&x.over_in, &x.over_out, &x.under_in, &x.under_out}) {
            auto it = remap.find(*slot);
            if (it != remap.end()) *slot = it->second;
        }
        out.crossings.push_back(x);
    }
    // carry over pre-existing free circles
    std::set<int> in_crossings;
    for (const auto& x : d.crossings)
        for (int a : {x.over_in, x.over_out, x.under_in, x.under_out}) in_crossings.insert(a);
    for (const auto& comp : d.components)
        if (comp.size() == 1 && !in_crossings.count(comp[0])) free_circles.push_back(comp[0]);

    out.components = trace_components(out.crossings, free_circles);
    return compact_arcs(out);
}

OrientedDiagram remove_crossings_pass_through(const OrientedDiagram& d,
                                              const std::vector<int>& which) {
    std::vector<std::pair<int, int>> joins;
    for (int c : which) {
        const Crossing& x = d.crossings[c];
        joins.emplace_back(x.over_in, x.over_out);
        joins.emplace_back(x.under_in, x.under_out);
    }
    return splice(d, which, joins);
}

OrientedDiagram smooth_crossing(const OrientedDiagram& d, int ci) {
    const Crossing& x = d.crossings[ci];
    return splice(d, {ci}, {{x.over_in, x.under_out}, {x.under_in, x.over_out}});
}

OrientedDiagram switch_crossing(const OrientedDiagram& d, int ci) {
    OrientedDiagram r = d;
    Crossing& x = r.crossings[ci];
    std::swap(x.over_in, x.under_in);
    std::swap(x.over_out, x.under_out);
    x.sign = -x.sign;
    return r;
}

namespace {

// R1: a crossing one of whose output arcs loops straight back into it.
std::optional<int> find_r1(const OrientedDiagram& d) {
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const Crossing& x = d.crossings[c];
        if (x.over_out == x.under_in || x.under_out == x.over_in)
            return static_cast<int>(c);
    }
    return std::nullopt;
}

// R2: crossings c1, c2 joined by two arcs, one strand over at both and the
// other under at both.
std::optional<std::pair<int, int>> find_r2(const OrientedDiagram& d) {
    // locate each arc's head crossing/slot and tail crossing/slot
    int n = -1;
    for (const auto& x : d.crossings)
        n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
    if (n < 0) return std::nullopt;
    // head[a] = (crossing, over?) for the crossing a enters
    std::vector<std::pair<int, int>> head(n + 1, {-1, -1}), tail(n + 1, {-1, -1});
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const Crossing& x = d.crossings[c];
        head[x.over_in] = {static_cast<int>(c), 0};
        head[x.under_in] = {static_cast<int>(c), 1};
        tail[x.over_out] = {static_cast<int>(c), 0};
        tail[x.under_out] = {static_cast<int>(c), 1};
    }
    for (int a = 0; a <= n; ++a) {
        auto [c1, s1] = tail[a];
        auto [c2, s2] = head[a];
        if (c1 < 0 || c2 < 0 || c1 == c2) continue;
        if (s1 != s2) continue;  // arc must stay over (or stay under) at both ends
        // find a partner arc between the same crossings on the opposite level
        for (int b = 0; b <= n; ++b) {
            if (b == a) continue;
            bool parallel = tail[b] == std::make_pair(c1, 1 - s1) &&
                            head[b] == std::make_pair(c2, 1 - s2);
            bool antiparallel = tail[b] == std::make_pair(c2, 1 - s2) &&
                                head[b] == std::make_pair(c1, 1 - s1);
            if (parallel || antiparallel) return std::make_pair(c1, c2);
        }
    }
    return std::nullopt;
}

}  // namespace

SimplifyResult simplify(const OrientedDiagram& d) {
    SimplifyResult r{d, 0};
    for (;;) {
        if (auto c = find_r1(r.diagram)) {
            r.curl_log += r.diagram.crossings[*c].sign;
            r.diagram = remove_crossings_pass_through(r.diagram, {*c});
            continue;
        }
        if (auto pr = find_r2(r.diagram)) {
            r.diagram = remove_crossings_pass_through(r.diagram, {pr->first, pr->second});
            continue;
        }
        break;
    }
    return r;
}

}  // namespace skein
