#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

struct diagram_error : std::runtime_error {
    explicit diagram_error(const std::string& what) : std::runtime_error(what) {}
};

/// One crossing of an oriented planar diagram.  Slots hold arc ids; an arc
/// enters the crossing at an *_in slot and leaves at an *_out slot.  The sign
/// is +1 when the under direction is the over direction rotated 90
/// degrees counterclockwise.
struct Crossing {
    int over_in = -1;
    int over_out = -1;
    int under_in = -1;
    int under_out = -1;
    int sign = +1;

    bool operator==(const Crossing&) const = default;
};

/// Closed oriented link diagram: crossings plus the partition of arcs into
/// oriented cycles.  A crossing-free circle is a one-arc component whose arc
/// appears in no crossing slot.
struct OrientedDiagram {
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> components;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int component_count() const { return static_cast<int>(components.size()); }
    bool is_knot() const { return components.size() == 1; }

    bool operator==(const OrientedDiagram&) const = default;
};

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  // signed generator indices, |i| in 1..strands-1

    void check() const;
    int writhe() const;
    /// permutation p with p[i] = top position of the strand entering at
    /// bottom position i (0-based)
    std::vector<int> permutation() const;
};

/// Confirms all structural invariants (arc usage, orientation consistency,
/// component data, planarity by Euler count).  Throws diagram_error with a
/// description of the first violation.
void validate(const OrientedDiagram& d);

/// Standard closure of a braid word, blackboard framed.
OrientedDiagram braid_closure(const BraidWord& w);

int writhe(const OrientedDiagram& d);

/// Sum of signs of crossings where both strands belong to component ci.
int self_writhe(const OrientedDiagram& d, int ci);

/// All arc orientations flipped; crossing signs unchanged.
OrientedDiagram reverse_all(const OrientedDiagram& d);

struct SimplifyResult {
    OrientedDiagram diagram;
    int curl_log = 0;  // signed count of removed R1 kinks
};

/// Reidemeister I and II reductions to a fixed point.  The framed Homfly of
/// the input equals v^(-curl_log) times that of the output.
SimplifyResult simplify(const OrientedDiagram& d);

/// Canonical byte string: equal for diagrams differing only by arc
/// relabeling and component re-rooting, stable across runs, and injective
/// (two diagrams with the same code have identical crossing data up to
/// relabeling).
std::string canonical_code(const OrientedDiagram& d);

/// Traversal data extracted while canonicalizing, used by the skein engines.
struct CanonicalTraversal {
    std::vector<int> arc_order;        // all arcs in canonical visit order
    std::vector<int> crossing_rank;    // crossing -> first-visit rank
    std::vector<int> comp_of_arc;      // arc -> component index in visit order
    std::vector<char> first_visit_over;  // crossing -> visited over first
    std::vector<int> bad_crossings;    // first met on the under strand, in visit order
};

CanonicalTraversal canonical_traversal(const OrientedDiagram& d);

/// Arcs renumbered 0..n-1 in a structure-preserving way.
OrientedDiagram compact_arcs(const OrientedDiagram& d);

/// Connected components of the underlying 4-valent graph (free circles are
/// their own pieces).  Returns one diagram per piece.
std::vector<OrientedDiagram> split_pieces(const OrientedDiagram& d);

/// Recompute the component cycles of a diagram whose crossings are already
/// consistent; free circles must be passed in since they are not recoverable
/// from crossing data.
std::vector<std::vector<int>> trace_components(const std::vector<Crossing>& crossings,
                                               const std::vector<int>& free_circle_arcs);

}  // namespace skein
