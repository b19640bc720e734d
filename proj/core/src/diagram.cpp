#include "unistab/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "dsu.hpp"
#include "unistab/errors.hpp"

namespace unistab {
namespace {

// One end of an edge as seen from the item that holds it.
struct Occurrence {
  enum class Kind { incoming, outgoing, free } kind;
  std::size_t intersection = 0;  // for free ends
  bool second_slot = false;      // slots[3] rather than slots[1]
};

std::map<EdgeLabel, std::vector<Occurrence>> collect_occurrences(const PlanarDiagram& d) {
  using K = Occurrence::Kind;
  std::map<EdgeLabel, std::vector<Occurrence>> occ;
  for (const auto& c : d.crossings) {
    const bool pos = c.sign == CrossingSign::positive;
    occ[c.slots[0]].push_back({K::incoming});
    occ[c.slots[1]].push_back({pos ? K::outgoing : K::incoming});
    occ[c.slots[2]].push_back({K::outgoing});
    occ[c.slots[3]].push_back({pos ? K::incoming : K::outgoing});
  }
  for (const auto& v : d.vertices)
    for (const auto& s : v.slots) occ[s.edge].push_back({s.outgoing ? K::outgoing : K::incoming});
  for (std::size_t i = 0; i < d.intersections.size(); ++i) {
    const auto& x = d.intersections[i];
    occ[x.slots[0]].push_back({K::incoming});
    occ[x.slots[1]].push_back({K::free, i, false});
    occ[x.slots[2]].push_back({K::outgoing});
    occ[x.slots[3]].push_back({K::free, i, true});
  }
  return occ;
}

// Node 0 is the constant "true"; node i+1 is "slots[1] of intersection i is incoming".
// An occurrence is incoming iff value(node) ^ bit.
std::pair<std::size_t, int> incoming_literal(const Occurrence& o) {
  switch (o.kind) {
    case Occurrence::Kind::incoming:
      return {0, 0};
    case Occurrence::Kind::outgoing:
      return {0, 1};
    case Occurrence::Kind::free:
      break;
  }
  return {o.intersection + 1, o.second_slot ? 1 : 0};
}

struct OrientationSolve {
  std::vector<bool> incoming_first;
  std::vector<std::string> conflicts;
};

OrientationSolve solve_orientations(const PlanarDiagram& d,
                                    const std::map<EdgeLabel, std::vector<Occurrence>>& occ) {
  detail::DisjointSets sets(d.intersections.size() + 1);
  OrientationSolve out;
  for (const auto& [label, list] : occ) {
    if (list.size() != 2) continue;
    auto [na, ba] = incoming_literal(list[0]);
    auto [nb, bb] = incoming_literal(list[1]);
    // exactly one end incoming
    if (!sets.unite(na, nb, 1 ^ ba ^ bb)) {
      if (na == 0 && nb == 0)
        out.conflicts.push_back("edge " + std::to_string(label) + " has two " +
                                (ba == 0 ? "incoming" : "outgoing") + " ends");
      else
        out.conflicts.push_back("edge " + std::to_string(label) +
                                " has inconsistent orientation through an intersection");
    }
  }
  out.incoming_first.resize(d.intersections.size());
  const auto [root0, par0] = sets.find_with_parity(0);
  for (std::size_t i = 0; i < d.intersections.size(); ++i) {
    auto [r, p] = sets.find_with_parity(i + 1);
    // value(node0) = 1; unconstrained intersections default to slots[1] outgoing
    out.incoming_first[i] = (r == root0) ? ((p ^ par0 ^ 1) != 0) : false;
  }
  return out;
}

}  // namespace

ValidationReport validate(const PlanarDiagram& d) {
  ValidationReport report;
  const auto occ = collect_occurrences(d);
  for (const auto& [label, list] : occ) {
    if (label == 0) {
      report.violations.push_back("edge label 0 is not positive");
      continue;
    }
    if (list.size() == 1)
      report.violations.push_back("dangling edge " + std::to_string(label));
    else if (list.size() > 2)
      report.violations.push_back("edge " + std::to_string(label) + " appears " +
                                  std::to_string(list.size()) + " times");
  }
  auto solved = solve_orientations(d, occ);
  for (auto& c : solved.conflicts) report.violations.push_back(std::move(c));
  if (report.ok()) {
    std::unordered_map<EdgeLabel, std::size_t> index;
    for (const auto& [label, list] : occ) index.emplace(label, index.size());
    detail::DisjointSets sets(index.size());
    for (const auto& c : d.crossings) {
      sets.unite(index[c.slots[0]], index[c.slots[2]]);
      sets.unite(index[c.slots[1]], index[c.slots[3]]);
    }
    for (const auto& x : d.intersections) {
      sets.unite(index[x.slots[0]], index[x.slots[2]]);
      sets.unite(index[x.slots[1]], index[x.slots[3]]);
    }
    for (const auto& v : d.vertices) {
      sets.unite(index[v.slots[0].edge], index[v.slots[1].edge]);
      sets.unite(index[v.slots[0].edge], index[v.slots[2].edge]);
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < index.size(); ++i) roots.insert(sets.find(i));
    report.components = roots.size() + d.free_loops;
  }
  return report;
}

std::size_t edge_count(const PlanarDiagram& d) {
  return collect_occurrences(d).size();
}

long first_betti_number(const PlanarDiagram& d) {
  const auto occ = collect_occurrences(d);
  std::unordered_map<EdgeLabel, std::size_t> index;
  for (const auto& [label, list] : occ) index.emplace(label, index.size());
  // graph edges are label chains running straight through crossings
  detail::DisjointSets chains(index.size());
  for (const auto& c : d.crossings) {
    chains.unite(index[c.slots[0]], index[c.slots[2]]);
    chains.unite(index[c.slots[1]], index[c.slots[3]]);
  }
  for (const auto& x : d.intersections) {
    chains.unite(index[x.slots[0]], index[x.slots[2]]);
    chains.unite(index[x.slots[1]], index[x.slots[3]]);
  }
  std::set<std::size_t> all_chains;
  for (std::size_t i = 0; i < index.size(); ++i) all_chains.insert(chains.find(i));
  std::map<std::size_t, int> chain_ends;
  for (const auto& v : d.vertices)
    for (const auto& s : v.slots) ++chain_ends[chains.find(index[s.edge])];
  long closed = 0;
  for (auto c : all_chains)
    if (!chain_ends.count(c)) ++closed;
  const long open_edges = static_cast<long>(all_chains.size()) - closed;
  // components among the vertex-bearing part
  detail::DisjointSets comp(d.vertices.size());
  std::map<std::size_t, std::size_t> first_vertex_on_chain;
  for (std::size_t vi = 0; vi < d.vertices.size(); ++vi)
    for (const auto& s : d.vertices[vi].slots) {
      auto c = chains.find(index[s.edge]);
      auto [it, inserted] = first_vertex_on_chain.emplace(c, vi);
      if (!inserted) comp.unite(it->second, vi);
    }
  std::set<std::size_t> vroots;
  for (std::size_t vi = 0; vi < d.vertices.size(); ++vi) vroots.insert(comp.find(vi));
  return open_edges - static_cast<long>(d.vertices.size()) + static_cast<long>(vroots.size()) +
         closed + static_cast<long>(d.free_loops);
}

PlanarDiagram renormalize_labels(const PlanarDiagram& d) {
  std::unordered_map<EdgeLabel, EdgeLabel> relabel;
  auto map = [&](EdgeLabel l) {
    auto [it, inserted] = relabel.emplace(l, static_cast<EdgeLabel>(relabel.size() + 1));
    return it->second;
  };
  PlanarDiagram out = d;
  for (auto& c : out.crossings)
    for (auto& s : c.slots) s = map(s);
  for (auto& v : out.vertices)
    for (auto& s : v.slots) s.edge = map(s.edge);
  for (auto& x : out.intersections)
    for (auto& s : x.slots) s = map(s);
  return out;
}

std::vector<bool> intersection_orientations(const PlanarDiagram& d) {
  const auto occ = collect_occurrences(d);
  auto solved = solve_orientations(d, occ);
  if (!solved.conflicts.empty()) throw InvalidInput(solved.conflicts.front());
  return solved.incoming_first;
}

}  // namespace unistab
