#include <gtest/gtest.h>

#include <set>

#include "unistab/errors.hpp"
#include "unistab/two_bridge.hpp"

using namespace unistab;

namespace {

PlanarDiagram unknot() {
  PlanarDiagram d;
  d.free_loops = 1;
  return d;
}

const ContinuedFraction k63{{2, 1, 1, 2}};

PlanarDiagram tunneled63() {
  return attach_tunnels(two_bridge_plat(k63),
                        {default_tunnel(k63, TunnelSide::upper), default_tunnel(k63, TunnelSide::lower)});
}

}  // namespace

TEST(Tunnels, ThetaCurve) {
  const PlanarDiagram d = attach_tunnels(unknot(), {TunnelSpec{}});
  EXPECT_EQ(d.crossings.size(), 0u);
  EXPECT_EQ(d.vertices.size(), 2u);
  EXPECT_EQ(edge_count(d), 3u);
  EXPECT_EQ(d.free_loops, 0u);
  const auto r = validate(d);
  ASSERT_TRUE(r.ok()) << r.violations.front();
  EXPECT_EQ(r.components, 1u);
  EXPECT_EQ(neighborhood_genus(d), 2);
}

TEST(Tunnels, UnknotWithTwoChords) {
  const PlanarDiagram d = attach_tunnels(unknot(), {TunnelSpec{}, TunnelSpec{}});
  EXPECT_EQ(neighborhood_genus(d), 3);
  EXPECT_EQ(first_betti_number(d), 3);
  EXPECT_TRUE(validate(d).ok());
}

TEST(Tunnels, SixThreeUpperAndLower) {
  const PlanarDiagram d = tunneled63();
  const auto r = validate(d);
  ASSERT_TRUE(r.ok()) << r.violations.front();
  EXPECT_EQ(r.components, 1u);
  EXPECT_EQ(d.vertices.size(), 4u);
  EXPECT_EQ(d.intersections.size(), 2u);
  EXPECT_EQ(neighborhood_genus(d), 3);
  EXPECT_EQ(first_betti_number(d), 3);
}

TEST(Tunnels, DefaultPositions) {
  EXPECT_EQ(default_tunnel(k63, TunnelSide::upper), (TunnelSpec{TunnelSide::upper, 1, 2}));
  EXPECT_EQ(default_tunnel(k63, TunnelSide::lower), (TunnelSpec{TunnelSide::lower, 0, 1}));
  EXPECT_EQ(default_tunnel({{3}}, TunnelSide::lower), (TunnelSpec{TunnelSide::lower, 1, 2}));
}

// Betti number and vertex count bookkeeping over a sweep of plats and all
// adjacent attachment positions.
TEST(Tunnels, BookkeepingSweep) {
  const std::vector<std::vector<long>> knots{{3}, {-3}, {2, 2}, {2, -2}, {2, 1, 1, 2}, {3, 2}, {2, 3}, {4, 1, 1}, {1, 1, 1, 1}};
  for (const auto& t : knots) {
    const ContinuedFraction cf{t};
    const PlanarDiagram knot = two_bridge_plat(cf);
    for (std::uint32_t up = 0; up < 3; ++up)
      for (std::uint32_t lo = 0; lo < 3; ++lo) {
        for (const auto& specs : std::vector<std::vector<TunnelSpec>>{
                 {{TunnelSide::upper, up, up + 1}},
                 {{TunnelSide::lower, lo, lo + 1}},
                 {{TunnelSide::upper, up, up + 1}, {TunnelSide::lower, lo, lo + 1}}}) {
          const PlanarDiagram d = attach_tunnels(knot, specs);
          const auto r = validate(d);
          ASSERT_TRUE(r.ok()) << ::testing::PrintToString(t) << ": " << r.violations.front();
          const std::string where = ::testing::PrintToString(t) + " upper " + std::to_string(up) + " lower " +
                                    std::to_string(lo) + " tunnels " + std::to_string(specs.size());
          EXPECT_EQ(r.components, 1u) << where;
          EXPECT_EQ(d.vertices.size(), 2 * specs.size());
          EXPECT_EQ(first_betti_number(d), 1 + static_cast<long>(specs.size()));
          EXPECT_EQ(neighborhood_genus(d), 1 + static_cast<long>(specs.size()));
          if (specs.size() == 1) EXPECT_TRUE(d.intersections.empty());
        }
      }
  }
}

TEST(Tunnels, Errors) {
  const PlanarDiagram knot = two_bridge_plat(k63);
  EXPECT_THROW(attach_tunnels(knot, {{TunnelSide::upper, 2, 4}}), InvalidInput);
  EXPECT_THROW(attach_tunnels(knot, {{TunnelSide::upper, 0, 2}}), InvalidInput);
  EXPECT_THROW(attach_tunnels(knot, {{TunnelSide::upper, 1, 2}, {TunnelSide::upper, 0, 1}}), InvalidInput);
  EXPECT_THROW(attach_tunnels(tunneled63(), {{TunnelSide::upper, 1, 2}}), InvalidInput);
  PlanarDiagram no_provenance = knot;
  no_provenance.plat.reset();
  EXPECT_THROW(attach_tunnels(no_provenance, {{TunnelSide::upper, 1, 2}}), InvalidInput);
  PlanarDiagram tampered = knot;
  tampered.crossings[0].sign = tampered.crossings[0].sign == CrossingSign::positive ? CrossingSign::negative
                                                                                  : CrossingSign::positive;
  EXPECT_THROW(attach_tunnels(tampered, {{TunnelSide::upper, 1, 2}}), InvalidInput);
}

TEST(Perturb, FourDistinctValidDiagrams) {
  const PlanarDiagram d = tunneled63();
  std::set<std::string> seen;
  for (int k = 1; k <= 4; ++k) {
    const PlanarDiagram p = perturb(d, k);
    EXPECT_EQ(p.crossings.size(), d.crossings.size() + 2);
    EXPECT_TRUE(p.intersections.empty());
    const auto r = validate(p);
    ASSERT_TRUE(r.ok()) << r.violations.front();
    EXPECT_EQ(r.components, 1u);
    EXPECT_EQ(first_betti_number(p), 3);
    seen.insert(emit_diagram(p));
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Perturb, CaseOrder) {
  using R = Resolution;
  EXPECT_EQ(perturbation_case(1), (std::array<R, 2>{R::over, R::over}));
  EXPECT_EQ(perturbation_case(2), (std::array<R, 2>{R::over, R::under}));
  EXPECT_EQ(perturbation_case(3), (std::array<R, 2>{R::under, R::over}));
  EXPECT_EQ(perturbation_case(4), (std::array<R, 2>{R::under, R::under}));
}

TEST(Perturb, Errors) {
  EXPECT_THROW(perturb(tunneled63(), 0), InvalidInput);
  EXPECT_THROW(perturb(tunneled63(), 5), InvalidInput);
  EXPECT_THROW(perturb(two_bridge_plat(k63), 1), InvalidInput);
}

TEST(Perturb, ResolutionsAreOppositeCrossings) {
  // resolving one intersection both ways swaps which strand is over
  const PlanarDiagram d = tunneled63();
  const PlanarDiagram a = resolve_intersections(d, {Resolution::over, Resolution::over});
  const PlanarDiagram b = resolve_intersections(d, {Resolution::under, Resolution::over});
  ASSERT_EQ(a.crossings.size(), b.crossings.size());
  EXPECT_NE(emit_diagram(a), emit_diagram(b));
}
