#include "skein/engines.hpp"

#include <algorithm>

namespace skein {

namespace {

// Unoriented smoothing state: live ports wired through arcs and previous
// smoothings.  Ports are numbered 4c + k with k in the ccw cycle order
// starting at over_out, so the A-smoothing always joins (0,1) and (2,3).
struct BracketState {
    std::vector<int> mate;    // port -> wired port, -1 dead
    int loops = 0;
};

struct PortMap {
    // per crossing: ports in ccw order starting at over_out
    // +1: over_out, under_out, over_in, under_in
    // -1: over_out, under_in, over_in, under_out
    static int arc_of(const Crossing& x, int k) {
        if (x.sign > 0) {
            switch (k) {
                case 0: return x.over_out;
                case 1: return x.under_out;
                case 2: return x.over_in;
                default: return x.under_in;
            }
        }
        switch (k) {
            case 0: return x.over_out;
            case 1: return x.under_in;
            case 2: return x.over_in;
            default: return x.under_out;
        }
    }
};

// join the strands attached at ports p and q, counting closed loops
void join(BracketState& st, int p, int q) {
    int x = st.mate[p], y = st.mate[q];
    st.mate[p] = st.mate[q] = -1;
    if (x == q) {
        st.loops++;  // p and q were wired to each other
        return;
    }
    st.mate[x] = y;
    st.mate[y] = x;
}

void bracket_rec(const BracketState& st, int next_crossing, int n, int exp_sum,
                 std::vector<std::pair<std::int32_t, Int>>& acc_pows,
                 const LaurentS& loop_val, std::vector<LaurentS>& loop_pow_cache,
                 LaurentS& acc) {
    if (next_crossing == n) {
        // value: A^exp_sum * loop_val^(loops-1)
        int k = st.loops - 1;
        while (static_cast<int>(loop_pow_cache.size()) <= k)
            loop_pow_cache.push_back(loop_pow_cache.back() * loop_val);
        acc += loop_pow_cache[k].shifted(exp_sum);
        (void)acc_pows;
        return;
    }
    // A-smoothing joins (under_out, over_in)-side pairs; fixed by the
    // positive-kink value -A^3
    {
        BracketState a = st;
        join(a, 4 * next_crossing + 1, 4 * next_crossing + 2);
        join(a, 4 * next_crossing + 3, 4 * next_crossing + 0);
        bracket_rec(a, next_crossing + 1, n, exp_sum + 1, acc_pows, loop_val, loop_pow_cache,
                    acc);
    }
    {
        BracketState b = st;
        join(b, 4 * next_crossing + 0, 4 * next_crossing + 1);
        join(b, 4 * next_crossing + 2, 4 * next_crossing + 3);
        bracket_rec(b, next_crossing + 1, n, exp_sum - 1, acc_pows, loop_val, loop_pow_cache,
                    acc);
    }
}

}  // namespace

LaurentS kauffman_bracket(const OrientedDiagram& d, int max_crossings) {
    validate(d);
    if (d.crossing_count() > max_crossings)
        throw budget_exceeded("kauffman_bracket: crossing limit exceeded");
    if (d.components.empty()) throw diagram_error("kauffman_bracket: empty diagram");

    int n = d.crossing_count();
    BracketState st;
    st.mate.assign(4 * n, -1);
    // wire ports through arcs
    {
        int max_arc = -1;
        for (const auto& x : d.crossings)
            max_arc = std::max({max_arc, x.over_in, x.over_out, x.under_in, x.under_out});
        std::vector<int> port_a(max_arc + 1, -1), port_b(max_arc + 1, -1);
        for (int c = 0; c < n; ++c)
            for (int k = 0; k < 4; ++k) {
                int a = PortMap::arc_of(d.crossings[c], k);
                (port_a[a] < 0 ? port_a[a] : port_b[a]) = 4 * c + k;
            }
        for (int a = 0; a <= max_arc; ++a) {
            if (port_a[a] < 0) continue;
            if (port_b[a] < 0) throw diagram_error("open strand in closed diagram");
            st.mate[port_a[a]] = port_b[a];
            st.mate[port_b[a]] = port_a[a];
        }
        // crossing-free circles
        for (const auto& comp : d.components)
            if (comp.size() == 1 && (comp[0] > max_arc || port_a[comp[0]] < 0)) st.loops++;
    }

    LaurentS loop_val = LaurentS::from_terms({{-2, -1}, {2, -1}});  // -A^2 - A^-2
    std::vector<LaurentS> loop_pows{LaurentS(1)};
    LaurentS acc;
    std::vector<std::pair<std::int32_t, Int>> scratch;
    bracket_rec(st, 0, n, 0, scratch, loop_val, loop_pows, acc);
    return acc;
}

LaurentS jones_via_bracket(const OrientedDiagram& d, int max_crossings) {
    LaurentS br = kauffman_bracket(d, max_crossings);
    int w = writhe(d);
    // (-A^3)^{-w}
    LaurentS out = br.shifted(-3 * w);
    if (w % 2 != 0) out = -out;
    return out;
}

}  // namespace skein
