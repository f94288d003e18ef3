#pragma once

#include "skein/diagram.hpp"

namespace skein {

/// One boundary position of a tangle.  `into` is true when the strand
/// points into the tangle interior at this endpoint (so the endpoint is the
/// tail of its arc).
struct Endpoint {
    int arc = -1;
    bool into = true;

    bool operator==(const Endpoint&) const = default;
};

/// Oriented tangle in a square: crossings plus 2k boundary endpoints on the
/// bottom and top edges, numbered left to right.  Framing is blackboard.
struct Tangle {
    std::vector<Crossing> crossings;
    std::vector<Endpoint> bottom;
    std::vector<Endpoint> top;
    int free_circles = 0;  // crossing-free closed components

    int width_bottom() const { return static_cast<int>(bottom.size()); }
    int width_top() const { return static_cast<int>(top.size()); }

    bool operator==(const Tangle&) const = default;
};

void validate_tangle(const Tangle& t);

/// identity tangle: k vertical strands, oriented upward
Tangle identity_tangle(int k);

/// the tangle of a braid word (all strands upward)
Tangle braid_tangle(const BraidWord& w);

/// Open strand connectivity: for each bottom/top endpoint index (bottom
/// endpoints 0..k-1, then top endpoints k..k+m-1) the partner endpoint.
std::vector<int> strand_pairing(const Tangle& t);

/// A 2-tangle is pure when its arcs join bottom i to top i, transposing
/// when they join bottom i to top 1-i.
bool is_pure(const Tangle& t);
bool is_transposing(const Tangle& t);

enum class Axis { tau1, tau2, tau3 };

/// pi-rotations of the square: tau1 about the horizontal in-plane axis,
/// tau2 about the axis perpendicular to the plane, tau3 = tau1 tau2.
/// Crossing signs are preserved; with reverse_strings all orientations flip.
Tangle rotate_tangle(const Tangle& t, Axis axis, bool reverse_strings = false);

Tangle reverse_strings(const Tangle& t);

/// t1 below t2 (t1's top edge glued to t2's bottom edge)
Tangle stack(const Tangle& t1, const Tangle& t2);

Tangle side_by_side(const Tangle& t1, const Tangle& t2);

/// Plat-style closure: adjacent bottom pairs (1,2)(3,4)... are joined, same
/// on top; with odd width the rightmost bottom endpoint closes around to the
/// rightmost top endpoint.
OrientedDiagram close_tangle(const Tangle& t);

/// Annular (braid-style) closure: top i joins around to bottom i.
OrientedDiagram trace_close(const Tangle& t);

/// Closure with explicit pairings: bottom_pairs and top_pairs join two
/// endpoints of the same edge, through_pairs join a bottom endpoint to a top
/// endpoint.  Every endpoint must occur exactly once.
OrientedDiagram close_custom(const Tangle& t,
                             const std::vector<std::pair<int, int>>& bottom_pairs,
                             const std::vector<std::pair<int, int>>& top_pairs,
                             const std::vector<std::pair<int, int>>& through_pairs = {});

/// Closure joining the listed endpoint pairs (bottom-then-top numbering),
/// reversing whole strands where needed to orient the closed curves; the
/// stored strand orientations are advisory here.
OrientedDiagram close_reorienting(const Tangle& t, std::vector<std::pair<int, int>> caps);

/// Vertical identity strands whose bottom `into` flags follow the given
/// pattern (true = upward strand).
Tangle identity_like(const std::vector<bool>& upward);

/// Cut a knot open at one arc, producing a (1,1)-tangle.
Tangle cut_open(const OrientedDiagram& knot, int arc);

/// Blackboard-framed parallel cable.  strand_orients[s][i] gives the
/// orientation of copy i of open strand s (+1 along the strand, -1
/// against); copies are indexed to the strand's left.  loop_orients
/// likewise for closed components threading crossings, in trace order.
struct CableSpec {
    std::vector<std::vector<int>> strand_orients;
    std::vector<std::vector<int>> loop_orients;
};

Tangle cable_tangle(const Tangle& t, const CableSpec& spec);

/// Cable every component of a closed diagram with the same width.
OrientedDiagram cable_diagram(const OrientedDiagram& d, const std::vector<int>& orients);

/// Open strands in boundary order: each strand as its endpoint pair plus
/// the arcs it traverses.
struct StrandPath {
    int from;  // endpoint index in the bottom-then-top numbering
    int to;
    std::vector<int> arcs;
};
std::vector<StrandPath> strand_paths(const Tangle& t);

/// Closed components of a tangle that thread crossings (trace order).
std::vector<std::vector<int>> tangle_loops(const Tangle& t);

}  // namespace skein
