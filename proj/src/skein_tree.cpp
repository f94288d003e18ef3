#include "skein/engines.hpp"
#include "skein/surgery.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#ifdef SKEIN_HAVE_OPENMP
#include <omp.h>
#endif

namespace skein {

LaurentVZ ambient_from_framed(const LaurentVZ& framed, int w) { return framed.shifted(w, 0); }

namespace {

using Clock = std::chrono::steady_clock;

struct EvalCtx {
    MemoCache* cache = nullptr;  // null for the brute engine
    EngineOptions opts;
    Clock::time_point start;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    std::mutex err_mu;
    std::exception_ptr err;

    void fail(std::exception_ptr e) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = e;
        aborted.store(true, std::memory_order_relaxed);
    }

    void tick() {
        if (aborted.load(std::memory_order_relaxed))
            throw budget_exceeded("skein engine aborted");
        std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (opts.node_counter) *opts.node_counter = n;
        if (opts.max_nodes && n > opts.max_nodes)
            throw budget_exceeded("skein engine node budget exceeded");
        if (opts.max_cache_bytes && cache && (n & 0xff) == 0 &&
            cache->approx_bytes() > opts.max_cache_bytes)
            throw budget_exceeded("skein engine memory budget exceeded");
        if (opts.budget_seconds > 0 && (n & 0x3ff) == 0) {
            double el = std::chrono::duration<double>(Clock::now() - start).count();
            if (el > opts.budget_seconds)
                throw budget_exceeded("skein engine time budget exceeded");
        }
    }
};

LaurentVZ eval_full(OrientedDiagram d, EvalCtx& ctx, int depth);

// Task bodies must not leak exceptions; the first failure is recorded and
// every other branch winds down through the aborted flag.
LaurentVZ eval_task(OrientedDiagram d, EvalCtx& ctx, int depth) {
    try {
        return eval_full(std::move(d), ctx, depth);
    } catch (...) {
        ctx.fail(std::current_exception());
        return {};
    }
}

// value of a diagram already known to be layered descending
LaurentVZ descending_value(const OrientedDiagram& d) {
    LaurentVZ val = LaurentVZ::one();
    for (int ci = 0; ci < d.component_count(); ++ci) {
        int w = self_writhe(d, ci);
        val = val.shifted(-w, 0);
        if (ci > 0) val *= LaurentVZ::delta();
    }
    return val;
}

// 2-edge-cuts of the 4-valent crossing graph via cycle-space hashing
struct TwoCut {
    int arc_a, arc_b;
};

std::optional<TwoCut> find_two_cut(const OrientedDiagram& d) {
    int nc = d.crossing_count();
    if (nc < 2) return std::nullopt;
    int n = -1;
    for (const auto& x : d.crossings)
        n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
    std::vector<int> tail_c(n + 1, -1), head_c(n + 1, -1);
    for (int c = 0; c < nc; ++c) {
        const Crossing& x = d.crossings[c];
        tail_c[x.over_out] = c;
        tail_c[x.under_out] = c;
        head_c[x.over_in] = c;
        head_c[x.under_in] = c;
    }
    // adjacency by arcs (skip self-loops)
    std::vector<std::vector<std::pair<int, int>>> adj(nc);  // (neighbor, arc)
    std::vector<char> is_edge(n + 1, 0);
    for (int a = 0; a <= n; ++a) {
        if (tail_c[a] < 0 || head_c[a] < 0 || tail_c[a] == head_c[a]) continue;
        is_edge[a] = 1;
        adj[tail_c[a]].push_back({head_c[a], a});
        adj[head_c[a]].push_back({tail_c[a], a});
    }
    // DFS spanning tree
    std::vector<int> parent_arc(nc, -1), order;
    std::vector<char> seen(nc, 0);
    std::vector<std::uint64_t> mark(nc, 0), arc_hash(n + 1, 0);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        order.push_back(c);
        for (auto [nb, a] : adj[c]) {
            if (!seen[nb]) {
                seen[nb] = 1;
                parent_arc[nb] = a;
                stack.push_back(nb);
            }
        }
    }
    std::vector<char> in_tree(n + 1, 0);
    for (int c = 0; c < nc; ++c)
        if (parent_arc[c] >= 0) in_tree[parent_arc[c]] = 1;
    for (int a = 0; a <= n; ++a) {
        if (!is_edge[a] || in_tree[a]) continue;
        std::uint64_t r = rng();
        arc_hash[a] = r;
        mark[tail_c[a]] ^= r;
        mark[head_c[a]] ^= r;
    }
    // push marks up the tree in reverse DFS order (children before parents)
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int c = *it;
        int pa = parent_arc[c];
        if (pa < 0) continue;
        arc_hash[pa] = mark[c];
        int par = tail_c[pa] == c ? head_c[pa] : tail_c[pa];
        mark[par] ^= mark[c];
    }
    std::unordered_map<std::uint64_t, int> first;
    for (int a = 0; a <= n; ++a) {
        if (!is_edge[a] || arc_hash[a] == 0) continue;
        auto [it, fresh] = first.try_emplace(arc_hash[a], a);
        if (!fresh) return TwoCut{it->second, a};
    }
    return std::nullopt;
}

// split d along a 2-cut; the two cut arcs are resewn inside each side
std::pair<OrientedDiagram, OrientedDiagram> split_two_cut(const OrientedDiagram& d,
                                                          const TwoCut& cut) {
    int nc = d.crossing_count();
    int n = -1;
    for (const auto& x : d.crossings)
        n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
    std::vector<int> tail_c(n + 1, -1), head_c(n + 1, -1);
    for (int c = 0; c < nc; ++c) {
        const Crossing& x = d.crossings[c];
        tail_c[x.over_out] = c;
        tail_c[x.under_out] = c;
        head_c[x.over_in] = c;
        head_c[x.under_in] = c;
    }
    std::vector<std::vector<std::pair<int, int>>> adj(nc);
    for (int a = 0; a <= n; ++a) {
        if (tail_c[a] < 0 || head_c[a] < 0) continue;
        if (a == cut.arc_a || a == cut.arc_b) continue;
        adj[tail_c[a]].push_back({head_c[a], a});
        adj[head_c[a]].push_back({tail_c[a], a});
    }
    std::vector<int> side(nc, -1);
    std::vector<int> stack{tail_c[cut.arc_a]};
    side[tail_c[cut.arc_a]] = 0;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (auto [nb, a] : adj[c])
            if (side[nb] < 0) {
                side[nb] = 0;
                stack.push_back(nb);
            }
    }
    for (int c = 0; c < nc; ++c)
        if (side[c] < 0) side[c] = 1;

    // orientation flow: arc_a runs side0 -> side1, arc_b side1 -> side0
    int a0 = cut.arc_a, b0 = cut.arc_b;
    if (side[head_c[a0]] == 0) std::swap(a0, b0);

    auto build = [&](int which, int out_arc, int in_arc) {
        // out_arc leaves this side, in_arc returns; sew them into one arc
        OrientedDiagram piece;
        for (int c = 0; c < nc; ++c) {
            if (side[c] != which) continue;
            Crossing x = d.crossings[c];
            for (int* slot : {&x.over_in, &x.over_out, &x.under_in, &x.under_out})
                if (*slot == in_arc) *slot = out_arc;
            piece.crossings.push_back(x);
        }
        piece.components = trace_components(piece.crossings, {});
        return compact_arcs(piece);
    };
    return {build(0, a0, b0), build(1, b0, a0)};
}

// core evaluation of a simplified, connected, circle-free diagram
LaurentVZ eval_core(const OrientedDiagram& d, EvalCtx& ctx, int depth) {
    if (d.crossings.empty()) {
        // connected circle-free empty diagram = single free circle was
        // already stripped; reaching here means value 1
        return LaurentVZ::one();
    }
    std::string key;
    bool use_cache = ctx.cache && d.crossing_count() >= ctx.opts.min_cache_crossings;
    if (use_cache) {
        key = canonical_code(d);
        LaurentVZ hit;
        if (ctx.cache->lookup(key, hit)) return hit;
    }
    ctx.tick();

    CanonicalTraversal t = canonical_traversal(d);
    LaurentVZ value;
    if (t.bad_crossings.empty()) {
        value = descending_value(d);
    } else {
        // prefer a bad crossing whose switch cascades into R1/R2 reductions
        int best_c = -1, best_gain = 0;
        for (int c : t.bad_crossings) {
            OrientedDiagram sw = switch_crossing(d, c);
            SimplifyResult sr = simplify(sw);
            int gain = d.crossing_count() - sr.diagram.crossing_count();
            if (gain > best_gain) {
                best_gain = gain;
                best_c = c;
            }
        }
        if (best_c >= 0) {
            int c = best_c;
            int sgn = d.crossings[c].sign;
            OrientedDiagram switched = switch_crossing(d, c);
            OrientedDiagram smoothed = smooth_crossing(d, c);
            LaurentVZ a, b;
            bool par = ctx.opts.parallel && depth < ctx.opts.spawn_depth;
#ifdef SKEIN_HAVE_OPENMP
            if (par) {
#pragma omp task shared(a, switched, ctx) firstprivate(depth)
                a = eval_task(std::move(switched), ctx, depth + 1);
                b = eval_task(std::move(smoothed), ctx, depth + 1);
#pragma omp taskwait
                if (ctx.aborted.load()) throw budget_exceeded("skein engine aborted");
            } else
#endif
            {
                (void)par;
                a = eval_full(std::move(switched), ctx, depth + 1);
                b = eval_full(std::move(smoothed), ctx, depth + 1);
            }
            value = a + (sgn > 0 ? b.shifted(0, 1) : -b.shifted(0, 1));
        } else {
            // resolve the whole bad list toward the descending diagram:
            // each smoothed child drops a crossing, the final switched
            // diagram is descending for this traversal
            OrientedDiagram cur = d;
            std::vector<OrientedDiagram> children;
            std::vector<int> signs;
            for (int c : t.bad_crossings) {
                children.push_back(smooth_crossing(cur, c));
                signs.push_back(cur.crossings[c].sign);
                cur = switch_crossing(cur, c);
            }
            std::vector<LaurentVZ> vals(children.size());
            bool par = ctx.opts.parallel && depth < ctx.opts.spawn_depth;
#ifdef SKEIN_HAVE_OPENMP
            if (par) {
#pragma omp taskloop shared(vals, children, ctx) firstprivate(depth)
                for (std::size_t i = 0; i < children.size(); ++i)
                    vals[i] = eval_task(children[i], ctx, depth + 1);
#pragma omp taskwait
                if (ctx.aborted.load()) throw budget_exceeded("skein engine aborted");
            } else
#endif
            {
                (void)par;
                for (std::size_t i = 0; i < children.size(); ++i)
                    vals[i] = eval_full(children[i], ctx, depth + 1);
            }
            value = descending_value(cur);
            for (std::size_t i = 0; i < children.size(); ++i)
                value += signs[i] > 0 ? vals[i].shifted(0, 1) : -vals[i].shifted(0, 1);
        }
    }
    if (use_cache) ctx.cache->insert(key, value);
    return value;
}

LaurentVZ eval_full(OrientedDiagram d, EvalCtx& ctx, int depth) {
    SimplifyResult sr = simplify(std::move(d));
    LaurentVZ factor = LaurentVZ::one().shifted(-sr.curl_log, 0);

    // strip crossing-free circles
    int circles = 0;
    {
        OrientedDiagram& sd = sr.diagram;
        std::vector<std::vector<int>> keep;
        std::vector<char> arc_in_crossing;
        int n = -1;
        for (const auto& x : sd.crossings)
            n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
        for (const auto& comp : sd.components) {
            bool free_circle = comp.size() == 1 && (comp[0] > n || n < 0);
            if (!free_circle && comp.size() == 1) {
                // single-arc component whose arc might still be unused
                bool used = false;
                for (const auto& x : sd.crossings)
                    used = used || x.over_in == comp[0] || x.under_in == comp[0];
                free_circle = !used;
            }
            if (free_circle)
                ++circles;
            else
                keep.push_back(comp);
        }
        sd.components = std::move(keep);
    }
    if (sr.diagram.components.empty()) {
        if (circles == 0) return factor;  // empty diagram: unit
        LaurentVZ v = factor;
        for (int i = 1; i < circles; ++i) v *= LaurentVZ::delta();
        return v;
    }
    for (int i = 0; i < circles; ++i) factor *= LaurentVZ::delta();

    // split components of the 4-valent graph
    auto pieces = split_pieces(sr.diagram);
    LaurentVZ acc = factor;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0) acc *= LaurentVZ::delta();
        // connected-sum factorization
        OrientedDiagram piece = std::move(pieces[i]);
        bool cut_any = false;
        for (;;) {
            auto cut = find_two_cut(piece);
            if (!cut) break;
            cut_any = true;
            auto [left, right] = split_two_cut(piece, *cut);
            acc *= eval_full(std::move(left), ctx, depth);
            piece = std::move(right);
        }
        // a factor split off above may leave reducible wiring behind
        acc *= cut_any ? eval_full(std::move(piece), ctx, depth)
                       : eval_core(piece, ctx, depth);
    }
    return acc;
}

}  // namespace

LaurentVZ homfly_brute(const OrientedDiagram& d, int max_crossings) {
    validate(d);
    if (d.crossing_count() > max_crossings)
        throw budget_exceeded("homfly_brute: crossing limit exceeded");
    EvalCtx ctx;
    ctx.start = Clock::now();
    return eval_full(d, ctx, 0);
}

LaurentVZ homfly_memo(const OrientedDiagram& d, MemoCache& cache, const EngineOptions& opts) {
    validate(d);
    EvalCtx ctx;
    ctx.cache = &cache;
    ctx.opts = opts;
    ctx.start = Clock::now();
#ifdef SKEIN_HAVE_OPENMP
    if (opts.parallel) {
        LaurentVZ out;
        std::exception_ptr err;
#pragma omp parallel
#pragma omp single nowait
        {
            try {
                out = eval_full(d, ctx, 0);
            } catch (...) {
                err = std::current_exception();
            }
        }
        if (ctx.err) std::rethrow_exception(ctx.err);
        if (err) std::rethrow_exception(err);
        return out;
    }
#endif
    return eval_full(d, ctx, 0);
}

LaurentVZ homfly_ambient_brute(const OrientedDiagram& d, int max_crossings) {
    return ambient_from_framed(homfly_brute(d, max_crossings), writhe(d));
}

LaurentVZ homfly_ambient_memo(const OrientedDiagram& d, MemoCache& cache,
                              const EngineOptions& opts) {
    return ambient_from_framed(homfly_memo(d, cache, opts), writhe(d));
}

}  // namespace skein
