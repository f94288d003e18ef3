#include "skein/mutation.hpp"

#include <algorithm>

namespace skein {

void MutationScheme::check() const {
    validate_tangle(F);
    validate_tangle(T);
    if (F.width_bottom() != 2 || F.width_top() != 2)
        throw diagram_error("scheme: F must be a 2-tangle");
    if (transposing ? !is_transposing(F) : !is_pure(F))
        throw diagram_error("scheme: kind does not match F's connectivity");
    if (m1 < 1 || m2 < 1) throw diagram_error("scheme: multiplicities must be positive");
    if (static_cast<int>(orient1.size()) != m1 || static_cast<int>(orient2.size()) != m2)
        throw diagram_error("scheme: orientation pattern lengths must be m1, m2");
    if (T.width_bottom() != m1 + m2 || T.width_top() != m1 + m2)
        throw diagram_error("scheme: T must live on m1+m2 strands");
}

Tangle scheme_cable(const MutationScheme& s) {
    auto paths = strand_paths(s.F);
    if (paths.size() != 2) throw diagram_error("scheme: F must have two open strands");
    if (!tangle_loops(s.F).empty())
        throw diagram_error("scheme: F must not contain closed components");
    CableSpec spec;
    spec.strand_orients.resize(2);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        bool through_b0 = paths[i].from == 0 || paths[i].to == 0;
        spec.strand_orients[i] = through_b0 ? s.orient1 : s.orient2;
    }
    return cable_tangle(s.F, spec);
}

OrientedDiagram assemble(const MutationScheme& s) {
    s.check();
    OrientedDiagram d = trace_close(stack(s.T, scheme_cable(s)));
    if (!d.is_knot())
        throw diagram_error("scheme closes to a link with " +
                            std::to_string(d.component_count()) + " components");
    return d;
}

std::pair<OrientedDiagram, OrientedDiagram> mutant_pair(const MutationScheme& s) {
    OrientedDiagram first = assemble(s);
    MutationScheme m = s;
    if (!s.transposing) {
        // tau1 on the inner tangle, every cable orientation reversed
        m.T = rotate_tangle(s.T, Axis::tau1, false);
        for (int& o : m.orient1) o = -o;
        for (int& o : m.orient2) o = -o;
    } else {
        m.T = rotate_tangle(s.T, Axis::tau2, false);
    }
    OrientedDiagram second = trace_close(stack(m.T, scheme_cable(m)));
    if (!second.is_knot()) throw diagram_error("mutant scheme closes to a link");
    return {first, second};
}

OrientedDiagram join_tangles(const Tangle& F, const Tangle& G) {
    if (F.width_bottom() != 2 || F.width_top() != 2 || G.width_bottom() != 2 ||
        G.width_top() != 2)
        throw diagram_error("join_tangles needs two 2-tangles");
    Tangle row = side_by_side(F, G);
    // middle arcs F.T2-G.T1 and F.B2-G.B1, outer arcs F.T1-G.T2 and F.B1-G.B2;
    // string orientations are re-chosen along the closed curves ("reversing
    // its string orientations if necessary")
    return close_reorienting(row, {{1, 2}, {0, 3}, {4 + 1, 4 + 2}, {4 + 0, 4 + 3}});
}

ConwayFamily conway_mutant_family(const Tangle& F, const Tangle& G) {
    validate_tangle(F);
    validate_tangle(G);
    if (!is_pure(F) || !is_transposing(G))
        throw diagram_error("conway_mutant_family expects F pure and G transposing");
    ConwayFamily fam;
    fam.K = join_tangles(F, G);
    if (!fam.K.is_knot()) throw diagram_error("F and G do not close to a knot");
    fam.K_F = join_tangles(F, rotate_tangle(G, Axis::tau1));
    fam.K_G = join_tangles(rotate_tangle(F, Axis::tau2), G);
    fam.K_FG = join_tangles(rotate_tangle(F, Axis::tau2), rotate_tangle(G, Axis::tau1));
    for (const OrientedDiagram* d : {&fam.K_F, &fam.K_G, &fam.K_FG})
        if (!d->is_knot()) throw diagram_error("mutant join produced a link");
    return fam;
}

void SatellitePattern::check() const {
    validate_tangle(Q);
    if (Q.width_bottom() != Q.width_top() || Q.width_bottom() < 1)
        throw diagram_error("pattern must have equal positive widths");
    for (int i = 0; i < Q.width_bottom(); ++i)
        if (Q.bottom[i].into == Q.top[i].into)
            throw diagram_error("pattern does not close around the annulus");
}

OrientedDiagram satellite(const OrientedDiagram& k, const SatellitePattern& q, int cut_arc) {
    q.check();
    validate(k);
    if (!k.is_knot()) throw diagram_error("satellite companion must be a knot");
    Tangle longknot = cut_open(k, cut_arc);
    std::vector<int> orients(q.winding());
    for (int i = 0; i < q.winding(); ++i) orients[i] = q.Q.bottom[i].into ? +1 : -1;
    CableSpec spec;
    spec.strand_orients = {orients};
    Tangle cabled = cable_tangle(longknot, spec);
    return trace_close(stack(cabled, q.Q));
}

MutationScheme scheme_satellite_commutes(const MutationScheme& s, const SatellitePattern& q) {
    s.check();
    q.check();
    int mu = q.winding();
    std::vector<int> qor(mu);
    for (int i = 0; i < mu; ++i) qor[i] = q.Q.bottom[i].into ? +1 : -1;

    // orientation list of a cable of a cable, indexed to the base strand's
    // left: a reversed copy reads its sub-copies in the opposite order
    auto expand = [&](const std::vector<int>& base) {
        std::vector<int> out;
        for (int o : base)
            for (int jb = 0; jb < mu; ++jb) {
                int j = o > 0 ? jb : mu - 1 - jb;
                out.push_back(o * qor[j]);
            }
        return out;
    };

    MutationScheme r;
    r.F = s.F;
    r.transposing = s.transposing;
    r.m1 = s.m1 * mu;
    r.m2 = s.m2 * mu;
    r.orient1 = expand(s.orient1);
    r.orient2 = expand(s.orient2);

    CableSpec tspec;
    tspec.strand_orients.assign(strand_paths(s.T).size(), qor);
    tspec.loop_orients.assign(tangle_loops(s.T).size(), qor);
    Tangle cabledT = cable_tangle(s.T, tspec);

    // Q is spliced below the first strand's bundle
    std::vector<bool> pad_up;
    for (int i = mu; i < cabledT.width_bottom(); ++i)
        pad_up.push_back(cabledT.bottom[i].into);
    Tangle qpad = side_by_side(q.Q, identity_like(pad_up));
    r.T = stack(qpad, cabledT);
    return r;
}

}  // namespace skein
