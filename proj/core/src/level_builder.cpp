#include "level_builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "dsu.hpp"

namespace unistab::detail {

std::size_t LevelBuilder::new_segment() { return segments_++; }

void LevelBuilder::need(std::size_t pos, std::size_t width) const {
  if (pos + width > ends_.size()) throw std::logic_error("level builder: position out of range");
}

void LevelBuilder::cap(std::size_t pos, StrandKind kind) {
  if (pos > ends_.size()) throw std::logic_error("level builder: cap out of range");
  const auto s = new_segment();
  ends_.insert(ends_.begin() + static_cast<std::ptrdiff_t>(pos), 2, End{s, kind});
}

void LevelBuilder::cup(std::size_t pos) {
  need(pos, 2);
  joins_.push_back(ends_[pos].segment);
  joins_.push_back(ends_[pos + 1].segment);
  ends_.erase(ends_.begin() + static_cast<std::ptrdiff_t>(pos),
              ends_.begin() + static_cast<std::ptrdiff_t>(pos + 2));
}

// Crossing geometry: TL, TR above; BL, BR below. Counterclockwise order
// starting east: TR, TL, BL, BR. TL runs to BR, TR runs to BL.
void LevelBuilder::cross(std::size_t pos, bool left_over) {
  need(pos, 2);
  const End tl = ends_[pos], tr = ends_[pos + 1];
  const End bl{new_segment(), tr.kind}, br{new_segment(), tl.kind};
  Node n{NodeType::crossing,
         {{tr.segment, tr.kind}, {tl.segment, tl.kind}, {bl.segment, bl.kind}, {br.segment, br.kind}},
         left_over ? std::size_t{1} : std::size_t{0}};
  nodes_.push_back(std::move(n));
  ends_[pos] = bl;
  ends_[pos + 1] = br;
}

void LevelBuilder::intersect(std::size_t pos, bool first_is_left) {
  cross(pos, first_is_left);
  nodes_.back().type = NodeType::intersection;
}

void LevelBuilder::split(std::size_t pos, bool branch_right) {
  need(pos, 1);
  const End top = ends_[pos];
  const End knot{new_segment(), StrandKind::knot};
  const End branch{new_segment(), StrandKind::tunnel};
  Node n{NodeType::vertex, {{top.segment, top.kind}}, 0};
  // below: left to right
  if (branch_right) {
    n.slots.push_back({knot.segment, knot.kind});
    n.slots.push_back({branch.segment, branch.kind});
    ends_[pos] = knot;
    ends_.insert(ends_.begin() + static_cast<std::ptrdiff_t>(pos + 1), branch);
  } else {
    n.slots.push_back({branch.segment, branch.kind});
    n.slots.push_back({knot.segment, knot.kind});
    ends_[pos] = branch;
    ends_.insert(ends_.begin() + static_cast<std::ptrdiff_t>(pos + 1), knot);
  }
  nodes_.push_back(std::move(n));
}

void LevelBuilder::merge(std::size_t pos) {
  need(pos, 2);
  const End l = ends_[pos], r = ends_[pos + 1];
  const End below{new_segment(), StrandKind::knot};
  // above: right to left, then below
  nodes_.push_back(Node{NodeType::vertex,
                        {{r.segment, r.kind}, {l.segment, l.kind}, {below.segment, below.kind}},
                        0});
  ends_[pos] = below;
  ends_.erase(ends_.begin() + static_cast<std::ptrdiff_t>(pos + 1));
}

PlanarDiagram LevelBuilder::finish() const {
  if (!ends_.empty()) throw std::logic_error("level builder: open ends remain");
  DisjointSets edges(segments_);
  for (std::size_t i = 0; i + 1 < joins_.size(); i += 2) edges.unite(joins_[i], joins_[i + 1]);

  // attachments of each edge
  struct Attach {
    std::size_t node, slot;
  };
  std::vector<std::vector<Attach>> attach(segments_);
  for (std::size_t n = 0; n < nodes_.size(); ++n)
    for (std::size_t s = 0; s < nodes_[n].slots.size(); ++s)
      attach[edges.find(nodes_[n].slots[s].segment)].push_back({n, s});

  // dense labels in node order
  std::vector<EdgeLabel> label(segments_, 0);
  EdgeLabel next = 1;
  for (const auto& n : nodes_)
    for (const auto& s : n.slots) {
      auto r = edges.find(s.segment);
      if (label[r] == 0) label[r] = next++;
    }
  std::uint32_t free_loops = 0;
  std::vector<bool> seen_root(segments_, false);
  for (std::size_t s = 0; s < segments_; ++s) {
    auto r = edges.find(s);
    if (seen_root[r]) continue;
    seen_root[r] = true;
    if (attach[r].empty()) ++free_loops;
  }

  // outgoing[node][slot]: 1 outgoing, 0 incoming, -1 unset
  std::vector<std::vector<int>> outgoing(nodes_.size());
  for (std::size_t n = 0; n < nodes_.size(); ++n) outgoing[n].assign(nodes_[n].slots.size(), -1);

  auto through = [&](std::size_t n, std::size_t s) -> long {
    const Node& node = nodes_[n];
    if (node.type != NodeType::vertex) return static_cast<long>((s + 2) % 4);
    if (node.slots[s].kind == StrandKind::tunnel) return -1;
    for (std::size_t t = 0; t < node.slots.size(); ++t)
      if (t != s && node.slots[t].kind == StrandKind::knot) return static_cast<long>(t);
    return -1;
  };
  auto other_end = [&](std::size_t n, std::size_t s) -> Attach {
    const auto& list = attach[edges.find(nodes_[n].slots[s].segment)];
    if (list.size() != 2) throw std::logic_error("level builder: edge without two ends");
    if (list[0].node == n && list[0].slot == s) return list[1];
    return list[0];
  };
  // walk leaving (n, s); stops at a terminal slot or when reaching oriented slots
  auto walk = [&](std::size_t n, std::size_t s) {
    while (outgoing[n][s] == -1) {
      outgoing[n][s] = 1;
      Attach b = other_end(n, s);
      outgoing[b.node][b.slot] = 0;
      long t = through(b.node, b.slot);
      if (t < 0) break;
      n = b.node;
      s = static_cast<std::size_t>(t);
    }
  };
  // tunnel chains first, leaving from vertices in creation order
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n].type != NodeType::vertex) continue;
    for (std::size_t s = 0; s < nodes_[n].slots.size(); ++s)
      if (nodes_[n].slots[s].kind == StrandKind::tunnel && outgoing[n][s] == -1) walk(n, s);
  }
  // knot components, starting from the first unoriented slot in node order
  for (std::size_t n = 0; n < nodes_.size(); ++n)
    for (std::size_t s = 0; s < nodes_[n].slots.size(); ++s) {
      if (outgoing[n][s] != -1) continue;
      // orient so that the first attachment of this edge is its tail
      const auto& list = attach[edges.find(nodes_[n].slots[s].segment)];
      walk(list[0].node, list[0].slot);
    }

  PlanarDiagram d;
  d.free_loops = free_loops;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const Node& node = nodes_[n];
    auto lab = [&](std::size_t s) { return label[edges.find(node.slots[s].segment)]; };
    if (node.type == NodeType::vertex) {
      TrivalentVertex v;
      for (std::size_t s = 0; s < 3; ++s) v.slots[s] = {lab(s), outgoing[n][s] == 1};
      d.vertices.push_back(v);
      continue;
    }
    const std::size_t marked = node.marked;
    const std::size_t other = (marked + 1) % 4;
    if (node.type == NodeType::crossing) {
      // start from under-in
      const std::size_t under_in = outgoing[n][other] == 0 ? other : (other + 2) % 4;
      Crossing c;
      for (std::size_t i = 0; i < 4; ++i) c.slots[i] = lab((under_in + i) % 4);
      const bool b_out = outgoing[n][(under_in + 1) % 4] == 1;
      c.sign = b_out ? CrossingSign::positive : CrossingSign::negative;
      d.crossings.push_back(c);
    } else {
      const std::size_t first_in = outgoing[n][marked] == 0 ? marked : (marked + 2) % 4;
      Intersection x;
      for (std::size_t i = 0; i < 4; ++i) x.slots[i] = lab((first_in + i) % 4);
      d.intersections.push_back(x);
    }
  }
  return renormalize_labels(d);
}

}  // namespace unistab::detail
