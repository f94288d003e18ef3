#include "skein/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace skein {

void BraidWord::check() const {
    if (strands < 1) throw diagram_error("braid word needs at least one strand");
    for (int l : letters)
        if (l == 0 || std::abs(l) >= strands)
            throw diagram_error("braid letter out of range");
}

int BraidWord::writhe() const {
    int w = 0;
    for (int l : letters) w += l > 0 ? 1 : -1;
    return w;
}

std::vector<int> BraidWord::permutation() const {
    check();
    std::vector<int> pos(strands);  // pos[p] = strand currently at position p
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : letters) {
        int i = std::abs(l) - 1;
        std::swap(pos[i], pos[i + 1]);
    }
    std::vector<int> perm(strands);
    for (int p = 0; p < strands; ++p) perm[pos[p]] = p;
    return perm;
}

// ------------------------------------------------------------- arc indexing

namespace {

struct ArcEnds {
    // head: (crossing, slot) where the arc enters; tail: where it leaves.
    // slot: 0 = over, 1 = under. -1 crossing means unattached at that end.
    int head_c = -1, head_slot = -1;
    int tail_c = -1, tail_slot = -1;
    int uses_in = 0, uses_out = 0;
};

std::vector<ArcEnds> index_arcs(const std::vector<Crossing>& crossings, int arc_count) {
    std::vector<ArcEnds> ends(arc_count);
    auto in = [&](int a, int c, int slot) {
        if (a < 0 || a >= arc_count) throw diagram_error("arc id out of range");
        ends[a].head_c = c;
        ends[a].head_slot = slot;
        ends[a].uses_in++;
    };
    auto out = [&](int a, int c, int slot) {
        if (a < 0 || a >= arc_count) throw diagram_error("arc id out of range");
        ends[a].tail_c = c;
        ends[a].tail_slot = slot;
        ends[a].uses_out++;
    };
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        const Crossing& x = crossings[c];
        in(x.over_in, static_cast<int>(c), 0);
        in(x.under_in, static_cast<int>(c), 1);
        out(x.over_out, static_cast<int>(c), 0);
        out(x.under_out, static_cast<int>(c), 1);
    }
    return ends;
}

int max_arc_id(const OrientedDiagram& d) {
    int m = -1;
    for (const auto& x : d.crossings)
        m = std::max({m, x.over_in, x.over_out, x.under_in, x.under_out});
    for (const auto& comp : d.components)
        for (int a : comp) m = std::max(m, a);
    return m;
}

// next arc along the strand after arc a enters its head crossing
int next_arc(const std::vector<Crossing>& crossings, const ArcEnds& e) {
    const Crossing& x = crossings[e.head_c];
    return e.head_slot == 0 ? x.over_out : x.under_out;
}

}  // namespace

std::vector<std::vector<int>> trace_components(const std::vector<Crossing>& crossings,
                                               const std::vector<int>& free_circle_arcs) {
    int n = -1;
    for (const auto& x : crossings)
        n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
    for (int a : free_circle_arcs) n = std::max(n, a);
    auto ends = index_arcs(crossings, n + 1);
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n + 1, 0);
    for (int a0 = 0; a0 <= n; ++a0) {
        if (seen[a0] || ends[a0].uses_in == 0) continue;
        std::vector<int> cyc;
        int a = a0;
        do {
            if (seen[a]) throw diagram_error("inconsistent strand wiring");
            seen[a] = 1;
            cyc.push_back(a);
            a = next_arc(crossings, ends[a]);
        } while (a != a0);
        comps.push_back(std::move(cyc));
    }
    for (int a : free_circle_arcs) comps.push_back({a});
    return comps;
}

// ---------------------------------------------------------------- validate

namespace {

// Planarity check by Euler count on each connected piece: trace faces using
// the rotation system the crossing structure induces and test V - E + F = 2.
bool euler_planar(const std::vector<Crossing>& crossings) {
    if (crossings.empty()) return true;
    int n = -1;
    for (const auto& x : crossings)
        n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
    auto ends = index_arcs(crossings, n + 1);

    // Counterclockwise port order at a crossing, as slot codes:
    //   0 over_in, 1 over_out, 2 under_in, 3 under_out
    // sign +1: (over_out, under_out, over_in, under_in)
    // sign -1: (over_out, under_in, over_in, under_out)
    auto ccw_next = [&](int c, int port) {
        // pos cycle: over_out -> under_out -> over_in -> under_in
        // neg cycle: over_out -> under_in -> over_in -> under_out
        static const int pos[4] = {2, 3, 1, 0};
        static const int neg[4] = {3, 2, 0, 1};
        return crossings[c].sign > 0 ? pos[port] : neg[port];
    };
    auto port_arc = [&](int c, int port) {
        const Crossing& x = crossings[c];
        switch (port) {
            case 0: return x.over_in;
            case 1: return x.over_out;
            case 2: return x.under_in;
            default: return x.under_out;
        }
    };

    // half-edge = (arc, end): end 0 means traveling with the arc orientation
    // (from tail to head), end 1 against it.
    // face step: travel along half-edge to the vertex, then leave along the
    // ccw-next port.
    struct HalfEdge {
        int arc, dir;
    };
    auto face_next = [&](HalfEdge h) -> HalfEdge {
        const ArcEnds& e = ends[h.arc];
        int c, port;
        if (h.dir == 0) {  // arrive at head
            c = e.head_c;
            port = e.head_slot == 0 ? 0 : 2;
        } else {  // arrive at tail
            c = e.tail_c;
            port = e.tail_slot == 0 ? 1 : 3;
        }
        if (c < 0) throw diagram_error("open strand in closed diagram");
        int np = ccw_next(c, port);
        int na = port_arc(c, np);
        int ndir = (np == 0 || np == 2) ? 1 : 0;  // leaving via an in-port goes against the arc
        return {na, ndir};
    };

    // connected pieces over crossings
    std::vector<int> piece(crossings.size(), -1);
    int npieces = 0;
    for (std::size_t c0 = 0; c0 < crossings.size(); ++c0) {
        if (piece[c0] != -1) continue;
        std::vector<int> stack{static_cast<int>(c0)};
        piece[c0] = npieces;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int port = 0; port < 4; ++port) {
                int a = port_arc(c, port);
                for (int d : {ends[a].head_c, ends[a].tail_c}) {
                    if (d >= 0 && piece[d] == -1) {
                        piece[d] = npieces;
                        stack.push_back(d);
                    }
                }
            }
        }
        ++npieces;
    }

    // count faces per piece
    std::vector<int> faces(npieces, 0), verts(npieces, 0), edges(npieces, 0);
    for (std::size_t c = 0; c < crossings.size(); ++c) verts[piece[c]]++;
    std::set<int> counted_arcs;
    for (std::size_t c = 0; c < crossings.size(); ++c)
        for (int port = 0; port < 4; ++port) {
            int a = port_arc(static_cast<int>(c), port);
            if (counted_arcs.insert(a).second) edges[piece[c]]++;
        }
    std::set<std::pair<int, int>> seen;  // (arc, dir)
    for (int a = 0; a <= n; ++a) {
        if (ends[a].uses_in == 0) continue;
        for (int dir = 0; dir < 2; ++dir) {
            if (seen.count({a, dir})) continue;
            HalfEdge h{a, dir};
            int p = piece[dir == 0 ? ends[a].head_c : ends[a].tail_c];
            do {
                seen.insert({h.arc, h.dir});
                h = face_next(h);
            } while (!(h.arc == a && h.dir == dir));
            faces[p]++;
        }
    }
    for (int p = 0; p < npieces; ++p)
        if (verts[p] - edges[p] + faces[p] != 2) return false;
    return true;
}

}  // namespace

void validate(const OrientedDiagram& d) {
    int n = max_arc_id(d);
    if (n < 0 && d.crossings.empty()) {
        return;  // empty diagram
    }
    auto ends = index_arcs(d.crossings, n + 1);
    std::vector<int> comp_uses(n + 1, 0);
    for (const auto& comp : d.components) {
        if (comp.empty()) throw diagram_error("empty component");
        for (int a : comp) {
            if (a < 0 || a > n) throw diagram_error("component arc id out of range");
            comp_uses[a]++;
        }
    }
    for (int a = 0; a <= n; ++a)
        if (ends[a].uses_in > 1 || ends[a].uses_out > 1)
            throw diagram_error("duplicate arc: arc " + std::to_string(a) +
                                " used more than once as a crossing input or output");
    for (int a = 0; a <= n; ++a) {
        if (ends[a].uses_in != ends[a].uses_out)
            throw diagram_error("orientation mismatch: arc " + std::to_string(a) +
                                " enters and leaves crossings unequally");
        if (comp_uses[a] != 1)
            throw diagram_error("arc " + std::to_string(a) +
                                " must appear in exactly one component cycle");
        if (ends[a].uses_in == 0 && comp_uses[a] == 1) {
            // free circle: must be alone in its cycle
            for (const auto& comp : d.components)
                for (int b : comp)
                    if (b == a && comp.size() != 1)
                        throw diagram_error("crossing-free arc inside a longer cycle");
        }
    }
    // component cycles must match the strand wiring
    std::vector<int> free_arcs;
    for (int a = 0; a <= n; ++a)
        if (ends[a].uses_in == 0) free_arcs.push_back(a);
    auto derived = trace_components(d.crossings, free_arcs);
    auto key = [](std::vector<std::vector<int>> cs) {
        for (auto& c : cs) {
            auto mn = std::min_element(c.begin(), c.end());
            std::rotate(c.begin(), mn, c.end());
        }
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    if (key(derived) != key(d.components))
        throw diagram_error("component data does not match strand wiring");
    for (const auto& x : d.crossings)
        if (x.sign != 1 && x.sign != -1) throw diagram_error("crossing sign must be +1 or -1");
    if (!euler_planar(d.crossings)) throw diagram_error("non-planar connectivity");
}

// ------------------------------------------------------------ construction

OrientedDiagram braid_closure(const BraidWord& w) {
    w.check();
    OrientedDiagram d;
    int n = w.strands;
    std::vector<int> start(n), cur(n);
    int next_id = 0;
    for (int i = 0; i < n; ++i) start[i] = cur[i] = next_id++;
    for (int l : w.letters) {
        int i = std::abs(l) - 1;
        int a = next_id++;  // new arc leaving at position i+1
        int b = next_id++;  // new arc leaving at position i
        Crossing x;
        if (l > 0) {
            x = {cur[i], a, cur[i + 1], b, +1};
        } else {
            x = {cur[i + 1], b, cur[i], a, -1};
        }
        d.crossings.push_back(x);
        cur[i] = b;
        cur[i + 1] = a;
    }
    // closure: identify cur[i] with start[i]
    std::vector<int> remap(next_id);
    std::iota(remap.begin(), remap.end(), 0);
    for (int i = 0; i < n; ++i) {
        // arc cur[i] becomes arc start[i]
        int from = cur[i], to = start[i];
        if (from == to) continue;
        for (auto& x : d.crossings) {
            for (int* slot : {&x.over_in, &x.over_out, &x.under_in, &x.under_out})
                if (*slot == from) *slot = to;
        }
    }
    std::vector<int> free_arcs;
    {
        auto perm = w.permutation();
        std::vector<char> touched(n, 0);
        for (int l : w.letters) {
            touched[std::abs(l) - 1] = 1;
            touched[std::abs(l)] = 1;
        }
        for (int i = 0; i < n; ++i)
            if (!touched[i]) free_arcs.push_back(start[i]);
    }
    d.components = trace_components(d.crossings, free_arcs);
    return compact_arcs(d);
}

int writhe(const OrientedDiagram& d) {
    int w = 0;
    for (const auto& x : d.crossings) w += x.sign;
    return w;
}

int self_writhe(const OrientedDiagram& d, int ci) {
    int n = max_arc_id(d);
    std::vector<int> comp_of(n + 1, -1);
    for (std::size_t i = 0; i < d.components.size(); ++i)
        for (int a : d.components[i]) comp_of[a] = static_cast<int>(i);
    int w = 0;
    for (const auto& x : d.crossings)
        if (comp_of[x.over_in] == ci && comp_of[x.under_in] == ci) w += x.sign;
    return w;
}

OrientedDiagram reverse_all(const OrientedDiagram& d) {
    OrientedDiagram r = d;
    for (auto& x : r.crossings) {
        std::swap(x.over_in, x.over_out);
        std::swap(x.under_in, x.under_out);
    }
    for (auto& comp : r.components) std::reverse(comp.begin(), comp.end());
    return r;
}

OrientedDiagram compact_arcs(const OrientedDiagram& d) {
    int n = max_arc_id(d);
    std::vector<int> remap(n + 1, -1);
    int next = 0;
    auto touch = [&](int a) {
        if (remap[a] == -1) remap[a] = next++;
    };
    for (const auto& comp : d.components)
        for (int a : comp) touch(a);
    for (const auto& x : d.crossings)
        for (int a : {x.over_in, x.over_out, x.under_in, x.under_out}) touch(a);
    OrientedDiagram r = d;
    for (auto& x : r.crossings) {
        x.over_in = remap[x.over_in];
        x.over_out = remap[x.over_out];
        x.under_in = remap[x.under_in];
        x.under_out = remap[x.under_out];
    }
    for (auto& comp : r.components)
        for (int& a : comp) a = remap[a];
    return r;
}

std::vector<OrientedDiagram> split_pieces(const OrientedDiagram& d) {
    int n = max_arc_id(d);
    // union components that share a crossing
    std::vector<int> comp_of(n + 1, -1);
    for (std::size_t i = 0; i < d.components.size(); ++i)
        for (int a : d.components[i]) comp_of[a] = static_cast<int>(i);
    std::vector<int> parent(d.components.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& x : d.crossings) {
        int a = find(comp_of[x.over_in]), b = find(comp_of[x.under_in]);
        if (a != b) parent[a] = b;
    }
    std::map<int, OrientedDiagram> pieces;
    for (std::size_t i = 0; i < d.components.size(); ++i)
        pieces[find(static_cast<int>(i))].components.push_back(d.components[i]);
    for (const auto& x : d.crossings) pieces[find(comp_of[x.over_in])].crossings.push_back(x);
    std::vector<OrientedDiagram> out;
    out.reserve(pieces.size());
    for (auto& [k, p] : pieces) out.push_back(compact_arcs(p));
    return out;
}

}  // namespace skein
