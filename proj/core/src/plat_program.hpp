#pragma once

#include <optional>

#include "unistab/two_bridge.hpp"

namespace unistab::detail {

/// Builds the plat of cf with at most one tunnel on each side; the specs are
/// assumed already checked.
PlanarDiagram build_plat(const ContinuedFraction& cf, const std::optional<TunnelSpec>& upper,
                         const std::optional<TunnelSpec>& lower);

/// Unknot with `chords` parallel trivial tunnels.
PlanarDiagram build_unknot_with_chords(std::size_t chords);

}  // namespace unistab::detail
