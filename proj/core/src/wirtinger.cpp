#include "unistab/wirtinger.hpp"

#include <algorithm>
#include <map>

#include "dsu.hpp"
#include "unistab/errors.hpp"

namespace unistab {
namespace {

struct StrandMap {
  std::map<EdgeLabel, std::uint32_t> of_edge;
  std::uint32_t count = 0;
};

StrandMap strands(const PlanarDiagram& d) {
  std::vector<EdgeLabel> labels;
  for (const auto& c : d.crossings) labels.insert(labels.end(), c.slots.begin(), c.slots.end());
  for (const auto& v : d.vertices)
    for (const auto& s : v.slots) labels.push_back(s.edge);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto index = [&](EdgeLabel e) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), e) - labels.begin());
  };
  detail::DisjointSets sets(labels.size());
  for (const auto& c : d.crossings) sets.unite(index(c.slots[1]), index(c.slots[3]));

  StrandMap m;
  std::map<std::size_t, std::uint32_t> of_root;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = of_root.try_emplace(sets.find(i), m.count);
    if (fresh) ++m.count;
    m.of_edge[labels[i]] = it->second;
  }
  return m;
}

}  // namespace

std::size_t strand_count(const PlanarDiagram& d) { return strands(d).count; }

GroupPresentation wirtinger(const PlanarDiagram& d) {
  if (!d.intersections.empty())
    throw InvalidInput("diagram has " + std::to_string(d.intersections.size()) +
                       " unresolved intersections; perturb it first");
  if (const auto report = validate(d); !report.ok())
    throw InvalidInput("invalid diagram: " + report.violations.front());

  const StrandMap m = strands(d);
  GroupPresentation p;
  p.generators = m.count + static_cast<std::uint32_t>(d.free_loops);
  auto gen = [&](EdgeLabel e) { return m.of_edge.at(e); };

  for (const auto& c : d.crossings) {
    const int e = c.sign == CrossingSign::positive ? 1 : -1;
    const std::uint32_t over = gen(c.slots[1]);
    p.relators.push_back(free_reduce({{over, e}, {gen(c.slots[0]), 1}, {over, -e}, {gen(c.slots[2]), -1}}));
  }
  for (const auto& v : d.vertices) {
    Word w;
    for (const auto& s : v.slots) w.push_back({gen(s.edge), s.outgoing ? -1 : 1});
    p.relators.push_back(free_reduce(w));
  }
  return p;
}

}  // namespace unistab
