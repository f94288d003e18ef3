#pragma once

#include "skein/diagram.hpp"

namespace skein {

/// Remove the listed crossings, letting both strands run straight through
/// each removed crossing (over_in joins over_out, under_in joins under_out).
/// Chains of joined arcs collapse to one arc; chains that close up become
/// crossing-free circles.  Used for R1/R2 reduction.
OrientedDiagram remove_crossings_pass_through(const OrientedDiagram& d,
                                              const std::vector<int>& which);

/// Oriented smoothing of one crossing: over_in joins under_out and under_in
/// joins over_out.
OrientedDiagram smooth_crossing(const OrientedDiagram& d, int ci);

/// Exchange over and under strands of one crossing (sign flips).
OrientedDiagram switch_crossing(const OrientedDiagram& d, int ci);

/// Generic arc-splice core: delete crossings in `which`; `joins` maps each
/// in-arc of a deleted crossing to the out-arc its strand continues on.
OrientedDiagram splice(const OrientedDiagram& d, const std::vector<int>& which,
                       const std::vector<std::pair<int, int>>& joins);

}  // namespace skein
