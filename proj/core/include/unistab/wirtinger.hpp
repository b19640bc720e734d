#pragma once

#include "unistab/diagram.hpp"
#include "unistab/presentation.hpp"

namespace unistab {

/// Wirtinger presentation of the exterior of a knot or spatial graph.
///
/// One generator per strand (edges chained through the over slots of
/// crossings), numbered in order of their lowest edge label, then one per
/// free loop. One relator per crossing, o^e u_in o^-e u_out^-1 with e the
/// crossing sign, and one per vertex: the meridians read counterclockwise,
/// incoming ends to the power +1 and outgoing ends to -1. Relators are
/// freely reduced but never dropped, so the counts are exact.
///
/// Throws InvalidInput if the diagram is invalid or still has intersections.
GroupPresentation wirtinger(const PlanarDiagram& d);

/// Number of strands as counted by wirtinger (excluding free loops).
std::size_t strand_count(const PlanarDiagram& d);

}  // namespace unistab
