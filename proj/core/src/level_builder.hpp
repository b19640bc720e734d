#pragma once

#include <cstddef>
#include <vector>

#include "unistab/diagram.hpp"

namespace unistab::detail {

enum class StrandKind { knot, tunnel };

/// Sweeps a diagram from top to bottom. The state is the ordered row of
/// open strand ends crossing the current level; each call adds one local
/// event between adjacent ends. finish() orients everything and emits PD
/// slots in the counterclockwise conventions of PlanarDiagram.
class LevelBuilder {
 public:
  struct End {
    std::size_t segment;
    StrandKind kind;
  };

  const std::vector<End>& ends() const noexcept { return ends_; }

  /// New arc whose two ends appear at pos and pos + 1.
  void cap(std::size_t pos, StrandKind kind);
  /// Joins the ends at pos and pos + 1.
  void cup(std::size_t pos);
  /// Crossing of the ends at pos and pos + 1; they swap places.
  void cross(std::size_t pos, bool left_over);
  /// Unresolved intersection of the ends at pos and pos + 1; first_is_left
  /// picks which of them becomes the intersection's first strand.
  void intersect(std::size_t pos, bool first_is_left);
  /// Trivalent vertex on the knot end at pos; a tunnel end branches off to
  /// the right (or left) of it.
  void split(std::size_t pos, bool branch_right);
  /// Trivalent vertex where the ends at pos and pos + 1 (one knot, one
  /// tunnel) join into one knot end.
  void merge(std::size_t pos);

  PlanarDiagram finish() const;

 private:
  enum class NodeType { crossing, intersection, vertex };
  struct Slot {
    std::size_t segment;
    StrandKind kind;
  };
  struct Node {
    NodeType type;
    // counterclockwise slots
    std::vector<Slot> slots;
    // crossing/intersection: index of a slot on the over (first) strand;
    // slots i and i + 2 are paired.
    std::size_t marked = 0;
  };

  std::size_t new_segment();
  void need(std::size_t pos, std::size_t width) const;

  std::vector<End> ends_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> joins_;  // pairs of segments joined by cups
  std::size_t segments_ = 0;
};

}  // namespace unistab::detail
