#include "skein/tangle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace skein {

namespace {

struct ArcUse {
    int tail_c = -1, tail_slot = -1;  // crossing out-slot
    int head_c = -1, head_slot = -1;  // crossing in-slot
    int tail_ep = -1, head_ep = -1;   // boundary endpoint index (bottom then top)
    int uses = 0;
};

int tangle_max_arc(const Tangle& t) {
    int n = -1;
    for (const auto& x : t.crossings)
        n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
    for (const auto& e : t.bottom) n = std::max(n, e.arc);
    for (const auto& e : t.top) n = std::max(n, e.arc);
    return n;
}

std::vector<ArcUse> tangle_index(const Tangle& t) {
    int n = tangle_max_arc(t);
    std::vector<ArcUse> u(n + 1);
    for (std::size_t c = 0; c < t.crossings.size(); ++c) {
        const Crossing& x = t.crossings[c];
        auto setin = [&](int a, int slot) {
            if (a < 0 || a > n) throw diagram_error("tangle arc out of range");
            if (u[a].head_c >= 0 || u[a].head_ep >= 0)
                throw diagram_error("tangle arc has two heads");
            u[a].head_c = static_cast<int>(c);
            u[a].head_slot = slot;
            u[a].uses++;
        };
        auto setout = [&](int a, int slot) {
            if (a < 0 || a > n) throw diagram_error("tangle arc out of range");
            if (u[a].tail_c >= 0 || u[a].tail_ep >= 0)
                throw diagram_error("tangle arc has two tails");
            u[a].tail_c = static_cast<int>(c);
            u[a].tail_slot = slot;
            u[a].uses++;
        };
        setin(x.over_in, 0);
        setin(x.under_in, 1);
        setout(x.over_out, 0);
        setout(x.under_out, 1);
    }
    int k = t.width_bottom();
    for (int i = 0; i < k + t.width_top(); ++i) {
        const Endpoint& e = i < k ? t.bottom[i] : t.top[i - k];
        if (e.arc < 0 || e.arc > n) throw diagram_error("endpoint arc out of range");
        ArcUse& a = u[e.arc];
        if (e.into) {
            if (a.tail_c >= 0 || a.tail_ep >= 0) throw diagram_error("tangle arc has two tails");
            a.tail_ep = i;
        } else {
            if (a.head_c >= 0 || a.head_ep >= 0) throw diagram_error("tangle arc has two heads");
            a.head_ep = i;
        }
        a.uses++;
    }
    return u;
}

// next arc continuing through a crossing
int through(const Tangle& t, const ArcUse& a) {
    const Crossing& x = t.crossings[a.head_c];
    return a.head_slot == 0 ? x.over_out : x.under_out;
}

}  // namespace



Tangle identity_tangle(int k) {
    Tangle t;
    for (int i = 0; i < k; ++i) {
        t.bottom.push_back({i, true});
        t.top.push_back({i, false});
    }
    return t;
}

Tangle braid_tangle(const BraidWord& w) {
    w.check();
    Tangle t;
    int n = w.strands;
    std::vector<int> cur(n);
    int next_id = 0;
    for (int i = 0; i < n; ++i) {
        cur[i] = next_id++;
        t.bottom.push_back({cur[i], true});
    }
    for (int l : w.letters) {
        int i = std::abs(l) - 1;
        int a = next_id++;
        int b = next_id++;
        if (l > 0)
            t.crossings.push_back({cur[i], a, cur[i + 1], b, +1});
        else
            t.crossings.push_back({cur[i + 1], b, cur[i], a, -1});
        cur[i] = b;
        cur[i + 1] = a;
    }
    for (int i = 0; i < n; ++i) t.top.push_back({cur[i], false});
    return t;
}

std::vector<StrandPath> strand_paths(const Tangle& t) {
    auto u = tangle_index(t);
    int k = t.width_bottom();
    int total = k + t.width_top();
    std::vector<StrandPath> out;
    for (int i = 0; i < total; ++i) {
        const Endpoint& e = i < k ? t.bottom[i] : t.top[i - k];
        if (!e.into) continue;
        StrandPath p;
        p.from = i;
        int a = e.arc;
        for (;;) {
            p.arcs.push_back(a);
            if (u[a].head_ep >= 0) {
                p.to = u[a].head_ep;
                break;
            }
            a = through(t, u[a]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::vector<int>> tangle_loops(const Tangle& t) {
    auto u = tangle_index(t);
    std::set<int> open;
    for (const auto& p : strand_paths(t))
        for (int a : p.arcs) open.insert(a);
    std::vector<std::vector<int>> loops;
    std::set<int> seen;
    for (std::size_t a0 = 0; a0 < u.size(); ++a0) {
        if (u[a0].uses == 0 || open.count(static_cast<int>(a0)) || seen.count(static_cast<int>(a0)))
            continue;
        std::vector<int> cyc;
        int a = static_cast<int>(a0);
        do {
            seen.insert(a);
            cyc.push_back(a);
            a = through(t, u[a]);
        } while (a != static_cast<int>(a0));
        loops.push_back(std::move(cyc));
    }
    return loops;
}

std::vector<int> strand_pairing(const Tangle& t) {
    int total = t.width_bottom() + t.width_top();
    std::vector<int> pair(total, -1);
    for (const auto& p : strand_paths(t)) {
        pair[p.from] = p.to;
        pair[p.to] = p.from;
    }
    for (int i = 0; i < total; ++i)
        if (pair[i] < 0) throw diagram_error("unmatched tangle endpoint");
    return pair;
}

bool is_pure(const Tangle& t) {
    if (t.width_bottom() != 2 || t.width_top() != 2) return false;
    auto p = strand_pairing(t);
    return p[0] == 2 && p[1] == 3;
}

bool is_transposing(const Tangle& t) {
    if (t.width_bottom() != 2 || t.width_top() != 2) return false;
    auto p = strand_pairing(t);
    return p[0] == 3 && p[1] == 2;
}

Tangle reverse_strings(const Tangle& t) {
    Tangle r = t;
    for (auto& x : r.crossings) {
        std::swap(x.over_in, x.over_out);
        std::swap(x.under_in, x.under_out);
    }
    for (auto& e : r.bottom) e.into = !e.into;
    for (auto& e : r.top) e.into = !e.into;
    return r;
}

Tangle rotate_tangle(const Tangle& t, Axis axis, bool reverse) {
    Tangle r = t;
    switch (axis) {
        case Axis::tau1:
            // flip about the horizontal axis and swap over/under: signs keep
            for (auto& x : r.crossings) {
                std::swap(x.over_in, x.under_in);
                std::swap(x.over_out, x.under_out);
            }
            std::swap(r.bottom, r.top);
            break;
        case Axis::tau2:
            // half-turn in the plane
            std::swap(r.bottom, r.top);
            std::reverse(r.bottom.begin(), r.bottom.end());
            std::reverse(r.top.begin(), r.top.end());
            break;
        case Axis::tau3:
            // left-right flip with over/under swap
            for (auto& x : r.crossings) {
                std::swap(x.over_in, x.under_in);
                std::swap(x.over_out, x.under_out);
            }
            std::reverse(r.bottom.begin(), r.bottom.end());
            std::reverse(r.top.begin(), r.top.end());
            break;
    }
    if (reverse) r = reverse_strings(r);
    return r;
}

// ---------------------------------------------------------------- gluing

namespace {

struct JoinResult {
    std::map<int, int> remap;
    int circles = 0;
};

// joins: strand leaves on arc a, continues on arc b (a and b merge)
JoinResult resolve_joins(const std::vector<std::pair<int, int>>& joins) {
    JoinResult r;
    std::map<int, int> succ;
    std::set<int> continued;  // arcs that are the continuation of another
    for (auto [a, b] : joins) {
        if (!succ.emplace(a, b).second) throw diagram_error("arc joined twice");
        continued.insert(b);
    }
    std::set<int> done;
    for (auto& [start, ignored] : succ) {
        if (done.count(start) || continued.count(start)) continue;
        int a = start;
        done.insert(a);
        while (succ.count(a)) {
            a = succ[a];
            if (done.count(a)) break;
            done.insert(a);
            r.remap[a] = start;
        }
        r.remap[start] = start;
    }
    for (auto& [start, ignored] : succ) {
        if (done.count(start)) continue;
        int a = start, rep = start;
        do {
            rep = std::min(rep, a);
            a = succ[a];
        } while (a != start);
        do {
            done.insert(a);
            r.remap[a] = rep;
            a = succ[a];
        } while (a != start);
        r.circles++;
    }
    return r;
}

void apply_remap(std::vector<Crossing>& crossings, const std::map<int, int>& remap) {
    for (auto& x : crossings)
        for (int* slot : {&x.over_in, &x.over_out, &x.under_in, &x.under_out}) {
            auto it = remap.find(*slot);
            if (it != remap.end()) *slot = it->second;
        }
}

void apply_remap(std::vector<Endpoint>& eps, const std::map<int, int>& remap) {
    for (auto& e : eps) {
        auto it = remap.find(e.arc);
        if (it != remap.end()) e.arc = it->second;
    }
}

Tangle shift_arcs(const Tangle& t, int offset) {
    Tangle r = t;
    for (auto& x : r.crossings) {
        x.over_in += offset;
        x.over_out += offset;
        x.under_in += offset;
        x.under_out += offset;
    }
    for (auto& e : r.bottom) e.arc += offset;
    for (auto& e : r.top) e.arc += offset;
    return r;
}

// join endpoint pairs (leaving, entering); both endpoint lists must refer to
// the combined arc numbering
std::pair<std::vector<std::pair<int, int>>, int> endpoint_joins(
    const std::vector<Endpoint>& out_side, const std::vector<Endpoint>& in_side) {
    if (out_side.size() != in_side.size()) throw diagram_error("arity mismatch at glued edge");
    std::vector<std::pair<int, int>> joins;
    for (std::size_t i = 0; i < out_side.size(); ++i) {
        const Endpoint &a = out_side[i], &b = in_side[i];
        if (a.into == b.into) throw diagram_error("orientation clash at glued edge");
        if (a.into)
            joins.emplace_back(b.arc, a.arc);  // strand leaves through b's side
        else
            joins.emplace_back(a.arc, b.arc);
    }
    return {joins, 0};
}

OrientedDiagram finish_closed(std::vector<Crossing> crossings,
                              const std::vector<std::pair<int, int>>& joins, int circles) {
    auto jr = resolve_joins(joins);
    apply_remap(crossings, jr.remap);
    circles += jr.circles;
    // representative arcs of closed chains that ended up crossing-free
    std::set<int> used;
    for (const auto& x : crossings)
        for (int a : {x.over_in, x.over_out, x.under_in, x.under_out}) used.insert(a);
    std::vector<int> free_arcs;
    std::set<int> reps;
    for (auto& [from, to] : jr.remap) reps.insert(to);
    int fresh = 0;
    for (int rep : reps)
        if (!used.count(rep)) ++fresh;
    // `fresh` chains closed without touching surviving crossings; they are
    // exactly the resolve_joins circles that stayed crossing-free plus any
    // open chain that became a circle, which cannot happen here.
    (void)fresh;
    int next_free = used.empty() ? 0 : *used.rbegin() + 1;
    for (int i = 0; i < circles; ++i) free_arcs.push_back(next_free + i);
    OrientedDiagram d;
    d.crossings = std::move(crossings);
    d.components = trace_components(d.crossings, free_arcs);
    return compact_arcs(d);
}

}  // namespace

// Closure that ignores stored strand orientations: whole strands are
// reversed as needed to make each cap consistent (the closed curves have a
// unique orientation up to total reversal).  caps are endpoint pairs in the
// bottom-then-top numbering.
OrientedDiagram close_reorienting(const Tangle& t, std::vector<std::pair<int, int>> caps) {
    auto paths = strand_paths(t);
    int kb = t.width_bottom(), kt = t.width_top();
    // endpoint index -> (path, which end): ends are 0 = from, 1 = to
    std::map<int, std::pair<int, int>> at;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        at[paths[i].from] = {static_cast<int>(i), 0};
        at[paths[i].to] = {static_cast<int>(i), 1};
    }
    // trace the closed circles, deciding a direction for every strand
    std::map<int, int> cap_of;
    for (const auto& [x, y] : caps) {
        cap_of[x] = y;
        cap_of[y] = x;
    }
    std::vector<int> dir(paths.size(), 0);  // +1 forward, -1 reversed
    for (std::size_t start = 0; start < paths.size(); ++start) {
        if (dir[start] != 0) continue;
        int p = static_cast<int>(start), enter_end = 0;
        do {
            dir[p] = enter_end == 0 ? +1 : -1;
            int exit_ep = enter_end == 0 ? paths[p].to : paths[p].from;
            int next_ep = cap_of.at(exit_ep);
            auto [np, nend] = at.at(next_ep);
            p = np;
            enter_end = nend;
        } while (static_cast<std::size_t>(p) != start || (dir[p] == 0));
    }
    // rebuild crossings with reversed strands flipped level by level
    std::map<int, int> arc_dir;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (int a : paths[i].arcs) arc_dir[a] = dir[i];
    Tangle flipped = t;
    for (auto& x : flipped.crossings) {
        if (arc_dir.count(x.over_in) && arc_dir.at(x.over_in) < 0) std::swap(x.over_in, x.over_out);
        if (arc_dir.count(x.under_in) && arc_dir.at(x.under_in) < 0)
            std::swap(x.under_in, x.under_out);
    }
    for (auto& e : flipped.bottom)
        if (arc_dir.count(e.arc) && arc_dir.at(e.arc) < 0) e.into = !e.into;
    for (auto& e : flipped.top)
        if (arc_dir.count(e.arc) && arc_dir.at(e.arc) < 0) e.into = !e.into;
    // caps now join one incoming and one outgoing strand each
    std::vector<std::pair<int, int>> joins;
    auto ep = [&](int i) -> const Endpoint& {
        return i < kb ? flipped.bottom[i] : flipped.top[i - kb];
    };
    for (const auto& [x, y] : caps) {
        const Endpoint &a = ep(x), &b = ep(y);
        if (a.into == b.into) throw diagram_error("strand flip failed at closure");
        if (a.into)
            joins.emplace_back(b.arc, a.arc);
        else
            joins.emplace_back(a.arc, b.arc);
    }
    auto jr = resolve_joins(joins);
    std::vector<Crossing> crossings = flipped.crossings;
    apply_remap(crossings, jr.remap);
    int circles = jr.circles + t.free_circles;
    std::set<int> used;
    for (const auto& x : crossings)
        for (int a : {x.over_in, x.over_out, x.under_in, x.under_out}) used.insert(a);
    std::vector<int> free_arcs;
    int next_free = used.empty() ? 0 : *used.rbegin() + 1;
    for (int i = 0; i < circles; ++i) free_arcs.push_back(next_free + i);
    OrientedDiagram d;
    d.crossings = std::move(crossings);
    d.components = trace_components(d.crossings, free_arcs);
    return compact_arcs(d);
}

namespace {

OrientedDiagram closed_shadow(const Tangle& t) {
    int kb = t.width_bottom(), kt = t.width_top();
    std::vector<std::pair<int, int>> caps;
    for (int i = 0; i + 1 < kb; i += 2) caps.emplace_back(i, i + 1);
    for (int i = 0; i + 1 < kt; i += 2) caps.emplace_back(kb + i, kb + i + 1);
    if (kb % 2 != 0) {
        if (kt % 2 == 0) throw diagram_error("edge widths have different parity");
        caps.emplace_back(kb - 1, kb + kt - 1);
    }
    return close_reorienting(t, std::move(caps));
}

}  // namespace

void validate_tangle(const Tangle& t) {
    auto u = tangle_index(t);
    for (std::size_t a = 0; a < u.size(); ++a) {
        bool has_tail = u[a].tail_c >= 0 || u[a].tail_ep >= 0;
        bool has_head = u[a].head_c >= 0 || u[a].head_ep >= 0;
        if (u[a].uses == 0) continue;
        if (!has_tail || !has_head)
            throw diagram_error("tangle arc " + std::to_string(a) + " has a loose end");
    }
    if (t.free_circles < 0) throw diagram_error("negative circle count");
    if (!t.crossings.empty()) validate(closed_shadow(t));
}

Tangle stack(const Tangle& t1, const Tangle& t2) {
    int off = tangle_max_arc(t1) + 1;
    Tangle b = shift_arcs(t2, off);
    auto [joins, extra] = endpoint_joins(t1.top, b.bottom);
    auto jr = resolve_joins(joins);
    Tangle r;
    r.crossings = t1.crossings;
    r.crossings.insert(r.crossings.end(), b.crossings.begin(), b.crossings.end());
    apply_remap(r.crossings, jr.remap);
    r.bottom = t1.bottom;
    r.top = b.top;
    apply_remap(r.bottom, jr.remap);
    apply_remap(r.top, jr.remap);
    r.free_circles = t1.free_circles + t2.free_circles + jr.circles + extra;
    return r;
}

Tangle side_by_side(const Tangle& t1, const Tangle& t2) {
    int off = tangle_max_arc(t1) + 1;
    Tangle b = shift_arcs(t2, off);
    Tangle r;
    r.crossings = t1.crossings;
    r.crossings.insert(r.crossings.end(), b.crossings.begin(), b.crossings.end());
    r.bottom = t1.bottom;
    r.bottom.insert(r.bottom.end(), b.bottom.begin(), b.bottom.end());
    r.top = t1.top;
    r.top.insert(r.top.end(), b.top.begin(), b.top.end());
    r.free_circles = t1.free_circles + t2.free_circles;
    return r;
}

OrientedDiagram close_tangle(const Tangle& t) {
    int kb = t.width_bottom(), kt = t.width_top();
    std::vector<std::pair<int, int>> joins;
    auto pair_up = [&](const std::vector<Endpoint>& eps, int n) {
        for (int i = 0; i + 1 < n; i += 2) {
            const Endpoint &a = eps[i], &b = eps[i + 1];
            if (a.into == b.into) throw diagram_error("orientation clash at plat closure");
            if (a.into)
                joins.emplace_back(b.arc, a.arc);
            else
                joins.emplace_back(a.arc, b.arc);
        }
    };
    pair_up(t.bottom, kb);
    pair_up(t.top, kt);
    if (kb % 2 != 0 || kt % 2 != 0) {
        if (kb % 2 == 0 || kt % 2 == 0)
            throw diagram_error("plat closure needs matching parity on both edges");
        const Endpoint &a = t.bottom[kb - 1], &b = t.top[kt - 1];
        if (a.into == b.into) throw diagram_error("orientation clash at plat closure");
        if (a.into)
            joins.emplace_back(b.arc, a.arc);
        else
            joins.emplace_back(a.arc, b.arc);
    }
    auto d = finish_closed(t.crossings, joins, t.free_circles);
    return d;
}

OrientedDiagram trace_close(const Tangle& t) {
    if (t.width_bottom() != t.width_top())
        throw diagram_error("annular closure needs equal widths");
    std::vector<std::pair<int, int>> joins;
    for (int i = 0; i < t.width_bottom(); ++i) {
        const Endpoint &b = t.bottom[i], &u = t.top[i];
        if (b.into == u.into) throw diagram_error("orientation clash at closure");
        if (b.into)
            joins.emplace_back(u.arc, b.arc);
        else
            joins.emplace_back(b.arc, u.arc);
    }
    return finish_closed(t.crossings, joins, t.free_circles);
}

OrientedDiagram close_custom(const Tangle& t,
                             const std::vector<std::pair<int, int>>& bottom_pairs,
                             const std::vector<std::pair<int, int>>& top_pairs,
                             const std::vector<std::pair<int, int>>& through_pairs) {
    std::vector<char> used_b(t.width_bottom(), 0), used_t(t.width_top(), 0);
    std::vector<std::pair<int, int>> joins;
    auto add = [&](const Endpoint& a, const Endpoint& b) {
        if (a.into == b.into) throw diagram_error("orientation clash at closure");
        if (a.into)
            joins.emplace_back(b.arc, a.arc);
        else
            joins.emplace_back(a.arc, b.arc);
    };
    for (auto [i, j] : bottom_pairs) {
        used_b.at(i) = used_b.at(j) = 1;
        add(t.bottom[i], t.bottom[j]);
    }
    for (auto [i, j] : top_pairs) {
        used_t.at(i) = used_t.at(j) = 1;
        add(t.top[i], t.top[j]);
    }
    for (auto [i, j] : through_pairs) {
        used_b.at(i) = used_t.at(j) = 1;
        add(t.bottom[i], t.top[j]);
    }
    for (char u : used_b)
        if (!u) throw diagram_error("closure leaves a bottom endpoint open");
    for (char u : used_t)
        if (!u) throw diagram_error("closure leaves a top endpoint open");
    return finish_closed(t.crossings, joins, t.free_circles);
}

Tangle identity_like(const std::vector<bool>& upward) {
    Tangle t;
    for (std::size_t i = 0; i < upward.size(); ++i) {
        t.bottom.push_back({static_cast<int>(i), upward[i]});
        t.top.push_back({static_cast<int>(i), !upward[i]});
    }
    return t;
}

Tangle cut_open(const OrientedDiagram& knot, int arc) {
    if (!knot.is_knot()) throw diagram_error("cut_open needs a one-component diagram");
    Tangle t;
    t.crossings = knot.crossings;
    int fresh = 0;
    for (const auto& x : t.crossings)
        fresh = std::max({fresh, x.over_in, x.over_out, x.under_in, x.under_out});
    ++fresh;
    // the arc is cut: its tail keeps `arc` (leaving the top), its head end
    // becomes a fresh arc entering from the bottom
    bool used = false;
    for (auto& x : t.crossings)
        for (int* slot : {&x.over_in, &x.under_in})
            if (*slot == arc) {
                *slot = fresh;
                used = true;
            }
    if (!used) {
        // crossing-free unknot: cut to a bare strand
        t.bottom.push_back({0, true});
        t.top.push_back({0, false});
        t.crossings.clear();
        return t;
    }
    t.bottom.push_back({fresh, true});
    t.top.push_back({arc, false});
    return t;
}

// ----------------------------------------------------------------- cabling

namespace {

struct GridStub {
    // arc-id slots at the geometric ports of one base crossing's grid
    std::vector<int> over_in, over_out, under_in, under_out;
};

}  // namespace

Tangle cable_tangle(const Tangle& t, const CableSpec& spec) {
    auto u = tangle_index(t);
    auto paths = strand_paths(t);
    auto loops = tangle_loops(t);
    if (spec.strand_orients.size() != paths.size())
        throw diagram_error("cable spec: strand count mismatch");
    if (spec.loop_orients.size() != loops.size())
        throw diagram_error("cable spec: loop count mismatch");

    int n = tangle_max_arc(t);
    // multiplicity and orientation list per base arc
    std::vector<int> mult(n + 1, 0);
    std::vector<const std::vector<int>*> orient(n + 1, nullptr);
    for (std::size_t s = 0; s < paths.size(); ++s)
        for (int a : paths[s].arcs) {
            mult[a] = static_cast<int>(spec.strand_orients[s].size());
            orient[a] = &spec.strand_orients[s];
        }
    for (std::size_t s = 0; s < loops.size(); ++s)
        for (int a : loops[s]) {
            mult[a] = static_cast<int>(spec.loop_orients[s].size());
            orient[a] = &spec.loop_orients[s];
        }

    int next_arc = 0;
    auto alloc = [&]() { return next_arc++; };

    // per base crossing: grid crossings and geometric stubs
    std::vector<GridStub> stubs(t.crossings.size());
    struct SubCrossing {
        int geo_oi, geo_oo, geo_ui, geo_uo;
        int base;
        int oi_orient, uj_orient;
    };
    std::vector<SubCrossing> subs;

    for (std::size_t c = 0; c < t.crossings.size(); ++c) {
        const Crossing& x = t.crossings[c];
        int p = mult[x.over_in], q = mult[x.under_in];
        const auto& po = *orient[x.over_in];
        const auto& qo = *orient[x.under_in];
        GridStub& st = stubs[c];
        st.over_in.resize(p);
        st.over_out.resize(p);
        st.under_in.resize(q);
        st.under_out.resize(q);
        for (int i = 0; i < p; ++i) st.over_in[i] = alloc();
        for (int i = 0; i < p; ++i) st.over_out[i] = alloc();
        for (int j = 0; j < q; ++j) st.under_in[j] = alloc();
        for (int j = 0; j < q; ++j) st.under_out[j] = alloc();
        // internal wires
        std::vector<std::vector<int>> wo(p), wu(p + 1);
        for (int i = 0; i < p; ++i) {
            wo[i].resize(std::max(q - 1, 0));
            for (int j = 0; j + 1 < q; ++j) wo[i][j] = alloc();
        }
        for (int i = 1; i < p; ++i) {
            wu[i].resize(q);
            for (int j = 0; j < q; ++j) wu[i][j] = alloc();
        }
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                SubCrossing sc;
                sc.base = static_cast<int>(c);
                sc.oi_orient = po[i];
                sc.uj_orient = qo[j];
                sc.geo_oi = j == 0 ? st.over_in[i] : wo[i][j - 1];
                sc.geo_oo = j == q - 1 ? st.over_out[i] : wo[i][j];
                sc.geo_ui = i == p - 1 ? st.under_in[j] : wu[i + 1][j];
                sc.geo_uo = i == 0 ? st.under_out[j] : wu[i][j];
                subs.push_back(sc);
            }
    }

    // base arcs: connect grid stubs / boundary endpoints
    Tangle out;
    out.free_circles = 0;
    std::vector<std::vector<int>> arc_copies(n + 1);
    for (int a = 0; a <= n; ++a) {
        if (u[a].uses == 0 || mult[a] == 0) continue;
        arc_copies[a].resize(mult[a]);
        for (int i = 0; i < mult[a]; ++i) {
            int tail_stub = -1, head_stub = -1;
            if (u[a].tail_c >= 0) {
                GridStub& st = stubs[u[a].tail_c];
                tail_stub = (u[a].tail_slot == 0 ? st.over_out : st.under_out)[i];
            }
            if (u[a].head_c >= 0) {
                GridStub& st = stubs[u[a].head_c];
                head_stub = (u[a].head_slot == 0 ? st.over_in : st.under_in)[i];
            }
            if (tail_stub >= 0 && head_stub >= 0) {
                arc_copies[a][i] = tail_stub;  // identified below
            } else if (tail_stub >= 0) {
                arc_copies[a][i] = tail_stub;
            } else if (head_stub >= 0) {
                arc_copies[a][i] = head_stub;
            } else {
                arc_copies[a][i] = alloc();  // boundary-to-boundary strand
            }
        }
    }
    // unify tail stubs with head stubs along base arcs
    std::map<int, int> unify;
    for (int a = 0; a <= n; ++a) {
        if (u[a].uses == 0 || mult[a] == 0) continue;
        if (u[a].tail_c >= 0 && u[a].head_c >= 0) {
            for (int i = 0; i < mult[a]; ++i) {
                GridStub& st = stubs[u[a].head_c];
                int head_stub = (u[a].head_slot == 0 ? st.over_in : st.under_in)[i];
                unify[head_stub] = arc_copies[a][i];
            }
        }
    }

    // emit sub-crossings with orientations applied
    for (const SubCrossing& sc : subs) {
        auto fix = [&](int arc) {
            auto it = unify.find(arc);
            return it == unify.end() ? arc : it->second;
        };
        int goi = fix(sc.geo_oi), goo = fix(sc.geo_oo), gui = fix(sc.geo_ui),
            guo = fix(sc.geo_uo);
        Crossing y;
        if (sc.oi_orient > 0) {
            y.over_in = goi;
            y.over_out = goo;
        } else {
            y.over_in = goo;
            y.over_out = goi;
        }
        if (sc.uj_orient > 0) {
            y.under_in = gui;
            y.under_out = guo;
        } else {
            y.under_in = guo;
            y.under_out = gui;
        }
        y.sign = t.crossings[sc.base].sign * sc.oi_orient * sc.uj_orient;
        out.crossings.push_back(y);
    }

    // boundary endpoints: copies ordered left to right; ascending copy index
    // when the base strand points up at that endpoint
    auto emit_edge = [&](const std::vector<Endpoint>& eps, bool bottom_edge,
                         std::vector<Endpoint>& dst) {
        for (const auto& e : eps) {
            int m = mult[e.arc];
            const auto& ors = *orient[e.arc];
            bool up = bottom_edge ? e.into : !e.into;
            for (int k = 0; k < m; ++k) {
                int i = up ? k : m - 1 - k;  // copy index at this left-right position
                int arc = arc_copies[e.arc][i];
                bool into = ors[i] > 0 ? e.into : !e.into;
                dst.push_back({arc, into});
            }
        }
    };
    emit_edge(t.bottom, true, out.bottom);
    emit_edge(t.top, false, out.top);

    // crossing-free base circles carry no spec entry; they pass through
    out.free_circles = t.free_circles;
    return out;
}

OrientedDiagram cable_diagram(const OrientedDiagram& d, const std::vector<int>& orients) {
    // cut nothing: treat as a tangle with no boundary
    Tangle t;
    t.crossings = d.crossings;
    int loops_with_crossings = 0;
    int free_circles = 0;
    for (const auto& comp : d.components) {
        bool free_circle = comp.size() == 1;
        if (free_circle) {
            bool used = false;
            for (const auto& x : d.crossings)
                used = used || x.over_in == comp[0] || x.under_in == comp[0];
            free_circle = !used;
        }
        if (free_circle)
            ++free_circles;
        else
            ++loops_with_crossings;
    }
    t.free_circles = free_circles;
    CableSpec spec;
    spec.loop_orients.assign(loops_with_crossings, orients);
    Tangle ct = cable_tangle(t, spec);
    OrientedDiagram out;
    out.crossings = ct.crossings;
    std::vector<int> free_arcs;
    int fresh = 0;
    for (const auto& x : out.crossings)
        fresh = std::max({fresh, x.over_in, x.over_out, x.under_in, x.under_out});
    ++fresh;
    for (int i = 0; i < free_circles * static_cast<int>(orients.size()); ++i)
        free_arcs.push_back(fresh + i);
    out.components = trace_components(out.crossings, free_arcs);
    return compact_arcs(out);
}

}  // namespace skein
