#include <string>

#include "plat_program.hpp"
#include "unistab/errors.hpp"
#include "unistab/two_bridge.hpp"

namespace unistab {
namespace {

void check_spec(const TunnelSpec& t) {
  if (t.first > 3 || t.second > 3)
    throw InvalidInput("tunnel attachment position off the knot (strands are 0..3)");
  if (t.second != t.first + 1)
    throw InvalidInput("tunnel attachment positions must be adjacent strands, got " +
                       std::to_string(t.first) + "," + std::to_string(t.second));
}

bool is_unknot(const PlanarDiagram& d) {
  return d.crossings.empty() && d.vertices.empty() && d.intersections.empty() && d.free_loops == 1;
}

}  // namespace

TunnelSpec default_tunnel(const ContinuedFraction& cf, TunnelSide side) {
  if (side == TunnelSide::upper) return {side, 1, 2};
  if (cf.terms.size() % 2 == 0) return {side, 0, 1};
  return {side, 1, 2};
}

PlanarDiagram attach_tunnels(const PlanarDiagram& d, const std::vector<TunnelSpec>& specs) {
  for (const auto& t : specs) check_spec(t);
  if (is_unknot(d)) return detail::build_unknot_with_chords(specs.size());

  if (!d.plat || !d.vertices.empty() || !d.intersections.empty())
    throw InvalidInput("tunnels attach only to a plat knot diagram or the unknot");
  if (renormalize_labels(d) != two_bridge_plat(*d.plat))
    throw InvalidInput("diagram does not match the plat of its continued fraction");

  std::optional<TunnelSpec> upper, lower;
  for (const auto& t : specs) {
    auto& slot = t.side == TunnelSide::upper ? upper : lower;
    if (slot)
      throw InvalidInput(std::string("overlapping attachment points: more than one ") +
                         (t.side == TunnelSide::upper ? "upper" : "lower") + " tunnel");
    slot = t;
  }
  return detail::build_plat(*d.plat, upper, lower);
}

long neighborhood_genus(const PlanarDiagram& d) {
  return 1 + static_cast<long>(d.vertices.size() / 2);
}

std::array<Resolution, 2> perturbation_case(int k) {
  switch (k) {
    case 1: return {Resolution::over, Resolution::over};
    case 2: return {Resolution::over, Resolution::under};
    case 3: return {Resolution::under, Resolution::over};
    case 4: return {Resolution::under, Resolution::under};
    default: throw InvalidInput("perturbation case must be 1..4, got " + std::to_string(k));
  }
}

PlanarDiagram resolve_intersections(const PlanarDiagram& d, const std::vector<Resolution>& choice) {
  if (choice.size() != d.intersections.size())
    throw InvalidInput("need one resolution per intersection: " +
                       std::to_string(d.intersections.size()) + " intersections, " +
                       std::to_string(choice.size()) + " choices");
  const std::vector<bool> second_in_at_b = intersection_orientations(d);
  PlanarDiagram out = d;
  out.intersections.clear();
  for (std::size_t i = 0; i < d.intersections.size(); ++i) {
    const auto& s = d.intersections[i].slots;
    const bool b_in = second_in_at_b[i];
    Crossing c;
    if (choice[i] == Resolution::over) {
      // the second strand is under; start at its incoming end
      if (b_in) {
        c.slots = {s[1], s[2], s[3], s[0]};
        c.sign = CrossingSign::positive;
      } else {
        c.slots = {s[3], s[0], s[1], s[2]};
        c.sign = CrossingSign::negative;
      }
    } else {
      c.slots = s;
      c.sign = b_in ? CrossingSign::negative : CrossingSign::positive;
    }
    out.crossings.push_back(c);
  }
  return renormalize_labels(out);
}

PlanarDiagram perturb(const PlanarDiagram& d, int k) {
  const auto choice = perturbation_case(k);
  if (d.intersections.size() != 2)
    throw InvalidInput("perturbation needs exactly 2 unresolved intersections, found " +
                       std::to_string(d.intersections.size()));
  return resolve_intersections(d, {choice[0], choice[1]});
}

}  // namespace unistab
