#pragma once

#include "skein/tangle.hpp"

namespace skein {

/// A genus-2 mutant pair generator: a base 2-tangle F (pure or transposing),
/// an inner tangle T on m1+m2 strands, cable multiplicities and orientation
/// patterns for the two ribbons.
struct MutationScheme {
    Tangle F;
    bool transposing = false;
    Tangle T;
    int m1 = 1, m2 = 1;
    std::vector<int> orient1, orient2;  // +1 with the ribbon, -1 against

    void check() const;
};

/// The cable of F prescribed by the scheme: the strand through bottom
/// endpoint 0 carries m1 parallels with pattern orient1, the other strand m2
/// with orient2.
Tangle scheme_cable(const MutationScheme& s);

/// Close T against the cabled F (T below, cable above, annular closure).
/// Throws diagram_error when the result is not a knot.
OrientedDiagram assemble(const MutationScheme& s);

/// The scheme's knot and its genus-2 mutant partner: the pure case replaces
/// T by tau1(T) and reverses every cable orientation, the transposing case
/// replaces T by tau2(T).
std::pair<OrientedDiagram, OrientedDiagram> mutant_pair(const MutationScheme& s);

/// Two 2-tangles joined side by side and closed: F pure, G transposing (or
/// vice versa) gives a knot.
OrientedDiagram join_tangles(const Tangle& F, const Tangle& G);

struct ConwayFamily {
    OrientedDiagram K, K_F, K_G, K_FG;
};

/// K plus its three mutants obtained from the handlebodies on either side:
/// K_F uses tau1(G), K_G uses tau2(F), K_FG uses both.  String orientations
/// are reversed where needed to make the tangles fit.
ConwayFamily conway_mutant_family(const Tangle& F, const Tangle& G);

/// Pattern in the solid torus: a tangle with equal widths whose annular
/// closure is the pattern link; winding = width.
struct SatellitePattern {
    Tangle Q;
    int winding() const { return static_cast<int>(Q.bottom.size()); }

    void check() const;
};

/// Blackboard satellite: cable the knot with the pattern's winding and
/// splice Q into the bundle at the given arc of k.
OrientedDiagram satellite(const OrientedDiagram& k, const SatellitePattern& q, int cut_arc = 0);

/// The scheme generating the satellites of a scheme's mutant pair: same F,
/// multiplicities scaled by the winding, T replaced by its cable with Q
/// spliced below the first strand's bundle.
MutationScheme scheme_satellite_commutes(const MutationScheme& s, const SatellitePattern& q);

}  // namespace skein
