#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unistab {

using EdgeLabel = std::uint32_t;

enum class CrossingSign { positive, negative };

/// A transverse crossing. Slots run counterclockwise starting from the
/// incoming under-strand: slots[0] = under-in, slots[2] = under-out. For a
/// positive crossing slots[1] is the outgoing over-strand, for a negative one
/// slots[3] is.
struct Crossing {
  CrossingSign sign = CrossingSign::positive;
  std::array<EdgeLabel, 4> slots{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct VertexSlot {
  EdgeLabel edge = 0;
  bool outgoing = false;

  friend bool operator==(const VertexSlot&, const VertexSlot&) = default;
};

/// A trivalent vertex where a tunnel arc meets the knot; slots counterclockwise.
struct TrivalentVertex {
  std::array<VertexSlot, 3> slots{};

  friend bool operator==(const TrivalentVertex&, const TrivalentVertex&) = default;
};

/// Two tunnel arcs meeting at a point whose over/under information has not
/// been chosen yet. Slots are counterclockwise like a crossing: the first
/// strand runs slots[0] (in) -> slots[2] (out); the second strand occupies
/// slots[1] and slots[3] and takes its orientation from the rest of the
/// diagram.
struct Intersection {
  std::array<EdgeLabel, 4> slots{};

  friend bool operator==(const Intersection&, const Intersection&) = default;
};

/// Nonempty list of nonzero integers a_1, ..., a_k.
struct ContinuedFraction {
  std::vector<long> terms;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

struct PlanarDiagram {
  std::vector<Crossing> crossings;
  std::vector<TrivalentVertex> vertices;
  std::vector<Intersection> intersections;
  std::uint32_t free_loops = 0;
  /// Set when the diagram is the plat closure of a two-bridge continued
  /// fraction, so tunnels can be placed relative to its bridge levels.
  std::optional<ContinuedFraction> plat;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  /// Connected components of the underlying graph (free loops included);
  /// only meaningful when ok().
  std::size_t components = 0;

  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const PlanarDiagram& d);

/// Number of distinct edge labels (free loops not included).
std::size_t edge_count(const PlanarDiagram& d);

/// First Betti number of the underlying graph: E - V + components, where
/// crossings and unresolved intersections do not count as graph vertices.
long first_betti_number(const PlanarDiagram& d);

/// Relabels edges 1..n in order of first appearance (crossings, then
/// vertices, then intersections; slot order within each item).
PlanarDiagram renormalize_labels(const PlanarDiagram& d);

/// Orientation of every slot of every intersection's second strand, solved
/// from the rest of the diagram. Entry i is true when slots[1] of
/// intersection i is the incoming end. Throws InvalidInput if inconsistent.
std::vector<bool> intersection_orientations(const PlanarDiagram& d);

// Text format.
PlanarDiagram parse_diagram(const std::string& text);
std::string emit_diagram(const PlanarDiagram& d);

}  // namespace unistab
