#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "unistab/diagram.hpp"

namespace unistab {

struct Fraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Evaluates a_1 + 1/(a_2 + 1/(... + 1/a_k)) in lowest terms with a
/// positive denominator. Throws InvalidInput on an empty list, a zero term,
/// or an intermediate value with zero denominator.
Fraction cf_to_fraction(const ContinuedFraction& cf);

/// 4-plat closure of the continued fraction. Twist regions alternate
/// between the middle pair of strands (odd-numbered terms, right-handed for
/// positive terms) and the left pair (even-numbered terms, left-handed for
/// positive terms). The top is closed by caps on strand pairs (0,1), (2,3);
/// the bottom by cups on (0,1), (2,3) for an odd number of terms and on
/// (1,2), (0,3) for an even number. The result has sum |a_i| crossings and
/// carries the continued fraction as its plat provenance.
PlanarDiagram two_bridge_plat(const ContinuedFraction& cf);

enum class TunnelSide { upper, lower };

/// Placement of one tunnel arc on a plat. Positions index the four strands
/// left to right and must be adjacent. An upper tunnel joins the two
/// top bridge arcs (default strands 1, 2) and is carried down alongside
/// its end strands to the bottom bridge level; a lower tunnel joins the
/// two strands of the bottom closure at the bottom bridge level (default
/// strands 0, 1 for an even number of terms, 1, 2 otherwise).
struct TunnelSpec {
  TunnelSide side = TunnelSide::upper;
  std::uint32_t first = 1;
  std::uint32_t second = 2;

  friend bool operator==(const TunnelSpec&, const TunnelSpec&) = default;
};

TunnelSpec default_tunnel(const ContinuedFraction& cf, TunnelSide side);

/// Adds tunnel arcs to a plat knot diagram (or to the 0-crossing unknot,
/// where every tunnel becomes a trivial chord). Where the upper tunnel lands
/// on a strand that also carries the lower tunnel, its end is slid below
/// the lower tunnel's attachment and the point where it passes the lower
/// tunnel is recorded as an unresolved Intersection.
PlanarDiagram attach_tunnels(const PlanarDiagram& d, const std::vector<TunnelSpec>& specs);

/// Regular-neighbourhood genus of knot plus tunnels: 1 + number of tunnels.
long neighborhood_genus(const PlanarDiagram& d);

/// Over/under choice for one intersection: whether its first strand passes over.
enum class Resolution { over, under };

/// Case k in 1..4 resolves the two intersections as
/// (over,over), (over,under), (under,over), (under,under), in diagram order.
std::array<Resolution, 2> perturbation_case(int k);

/// Replaces every unresolved intersection by a crossing.
PlanarDiagram resolve_intersections(const PlanarDiagram& d, const std::vector<Resolution>& choice);

/// Resolves exactly two intersections according to perturbation_case(k).
PlanarDiagram perturb(const PlanarDiagram& d, int k);

}  // namespace unistab
