#include "skein/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skein {

namespace {

struct ArcHead {
    int crossing = -1;
    int slot = -1;  // 0 over, 1 under
};

struct Indexed {
    std::vector<ArcHead> head;
    std::vector<std::vector<int>> comps;  // crossing-bearing components only
    int free_circles = 0;
    const OrientedDiagram* d = nullptr;

    int next_arc(int a) const {
        const Crossing& x = d->crossings[head[a].crossing];
        return head[a].slot == 0 ? x.over_out : x.under_out;
    }
};

Indexed build_index(const OrientedDiagram& d) {
    Indexed ix;
    ix.d = &d;
    int n = -1;
    for (const auto& x : d.crossings)
        n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
    for (const auto& c : d.components)
        for (int a : c) n = std::max(n, a);
    ix.head.resize(n + 1);
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        ix.head[d.crossings[c].over_in] = {static_cast<int>(c), 0};
        ix.head[d.crossings[c].under_in] = {static_cast<int>(c), 1};
    }
    for (const auto& comp : d.components) {
        if (comp.size() == 1 && ix.head[comp[0]].crossing < 0)
            ix.free_circles++;
        else
            ix.comps.push_back(comp);
    }
    return ix;
}

struct State {
    std::vector<int> rank;       // crossing -> first-visit rank, -1 unseen
    int next_rank = 0;
    std::vector<char> comp_done;
    std::vector<int> roots;      // chosen root arc per visited component
};

// Walk one component from root arc, appending bytes and updating state.
std::string walk(const Indexed& ix, State& st, int comp_idx, int root) {
    std::string seg;
    const auto& comp = ix.comps[comp_idx];
    auto pos = std::find(comp.begin(), comp.end(), root);
    int a = root;
    for (std::size_t k = 0; k < comp.size(); ++k) {
        const ArcHead& h = ix.head[a];
        int& r = st.rank[h.crossing];
        if (r < 0) r = st.next_rank++;
        seg.push_back(static_cast<char>(r & 0xff));
        seg.push_back(static_cast<char>((r >> 8) & 0xff));
        int sign_bit = ix.d->crossings[h.crossing].sign > 0 ? 1 : 0;
        seg.push_back(static_cast<char>(h.slot | (sign_bit << 1)));
        a = ix.next_arc(a);
    }
    (void)pos;
    // 3-byte terminator keeps the stream aligned; a real record's third byte
    // is at most 3, so this cannot collide with crossing data.
    seg.append(3, '\xff');
    st.comp_done[comp_idx] = 1;
    st.roots.push_back(root);
    return seg;
}

}  // namespace

static std::pair<std::string, State> canonical_core(const OrientedDiagram& d) {
    Indexed ix = build_index(d);
    std::string code;
    State init;
    init.rank.assign(d.crossings.size(), -1);
    init.comp_done.assign(ix.comps.size(), 0);
    std::vector<State> frontier{init};
    for (std::size_t step = 0; step < ix.comps.size(); ++step) {
        std::string best;
        bool have = false;
        std::vector<State> next;
        for (const State& st : frontier) {
            for (std::size_t ci = 0; ci < ix.comps.size(); ++ci) {
                if (st.comp_done[ci]) continue;
                for (int root : ix.comps[ci]) {
                    State cand = st;
                    std::string seg = walk(ix, cand, static_cast<int>(ci), root);
                    if (!have || seg < best) {
                        best = seg;
                        next.clear();
                        next.push_back(std::move(cand));
                        have = true;
                    } else if (seg == best) {
                        next.push_back(std::move(cand));
                    }
                }
            }
        }
        code += best;
        // dedup equivalent states
        std::sort(next.begin(), next.end(), [](const State& a, const State& b) {
            if (a.rank != b.rank) return a.rank < b.rank;
            return a.comp_done < b.comp_done;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const State& a, const State& b) {
                                   return a.rank == b.rank && a.comp_done == b.comp_done;
                               }),
                   next.end());
        frontier = std::move(next);
    }
    code.push_back(static_cast<char>(ix.free_circles & 0xff));
    code.push_back(static_cast<char>((ix.free_circles >> 8) & 0xff));
    State winner = frontier.empty() ? init : frontier.front();
    // deterministic representative among ties: smallest root sequence
    for (const State& st : frontier)
        if (st.roots < winner.roots) winner = st;
    return {code, winner};
}

std::string canonical_code(const OrientedDiagram& d) { return canonical_core(d).first; }

CanonicalTraversal canonical_traversal(const OrientedDiagram& d) {
    auto [code, st] = canonical_core(d);
    Indexed ix = build_index(d);
    CanonicalTraversal t;
    t.crossing_rank.assign(d.crossings.size(), -1);
    t.first_visit_over.assign(d.crossings.size(), 0);
    int n = static_cast<int>(ix.head.size());
    t.comp_of_arc.assign(n, -1);
    // replay the winning roots in order
    std::set<int> used;
    int rank = 0;
    for (int root : st.roots) {
        int ci = -1;
        for (std::size_t i = 0; i < ix.comps.size(); ++i)
            if (!used.count(static_cast<int>(i)) &&
                std::find(ix.comps[i].begin(), ix.comps[i].end(), root) != ix.comps[i].end()) {
                ci = static_cast<int>(i);
                break;
            }
        used.insert(ci);
        int a = root;
        for (std::size_t k = 0; k < ix.comps[ci].size(); ++k) {
            t.arc_order.push_back(a);
            t.comp_of_arc[a] = ci;
            const ArcHead& h = ix.head[a];
            if (t.crossing_rank[h.crossing] < 0) {
                t.crossing_rank[h.crossing] = rank++;
                t.first_visit_over[h.crossing] = (h.slot == 0);
                if (h.slot != 0) t.bad_crossings.push_back(h.crossing);
            }
            a = ix.next_arc(a);
        }
    }
    return t;
}

}  // namespace skein
