#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unistab/errors.hpp"
#include "unistab/two_bridge.hpp"

using namespace unistab;

namespace {

// every nonzero-term list with k terms and |a_i| <= bound
std::vector<std::vector<long>> all_terms(std::size_t k, long bound) {
  std::vector<std::vector<long>> out{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& prefix : out)
      for (long a = -bound; a <= bound; ++a) {
        if (a == 0) continue;
        auto t = prefix;
        t.push_back(a);
        next.push_back(t);
      }
    out = std::move(next);
  }
  return out;
}

bool defined(const std::vector<long>& t) {
  try {
    cf_to_fraction({t});
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

}  // namespace

TEST(ContinuedFraction, Examples) {
  EXPECT_EQ(cf_to_fraction({{3}}), (Fraction{3, 1}));
  EXPECT_EQ(cf_to_fraction({{2, 2}}), (Fraction{5, 2}));
  EXPECT_EQ(cf_to_fraction({{2, 1, 1, 2}}), (Fraction{13, 5}));
}

TEST(ContinuedFraction, Errors) {
  EXPECT_THROW(cf_to_fraction({{}}), InvalidInput);
  EXPECT_THROW(cf_to_fraction({{2, 0, 1}}), InvalidInput);
  // 2 + 1/(-1 + 1/1) divides by zero
  EXPECT_THROW(cf_to_fraction({{2, -1, 1}}), InvalidInput);
}

TEST(ContinuedFraction, MatchesConvergentOracle) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& t : all_terms(k, 4)) {
      if (!defined(t)) continue;
      const auto [p, q] = oracle::convergent(t);
      EXPECT_EQ(cf_to_fraction({t}), (Fraction{p, q})) << ::testing::PrintToString(t);
    }
}

TEST(Plat, Examples) {
  for (const auto& [terms, crossings] :
       std::vector<std::pair<std::vector<long>, std::size_t>>{{{3}, 3}, {{2, 2}, 4}, {{2, 1, 1, 2}, 6}}) {
    const PlanarDiagram d = two_bridge_plat({terms});
    EXPECT_EQ(d.crossings.size(), crossings);
    const auto r = validate(d);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.components, 1u);
    EXPECT_TRUE(d.vertices.empty());
  }
}

// Generated diagrams validate, have sum |a_i| crossings, one component
// exactly for odd numerators, and Fox-coloring determinant |p|.
TEST(Plat, SweepAgainstFractionAndDeterminant) {
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& t : all_terms(k, 3)) {
      if (!defined(t)) continue;
      const PlanarDiagram d = two_bridge_plat({t});
      const auto r = validate(d);
      ASSERT_TRUE(r.ok()) << ::testing::PrintToString(t) << ": " << r.violations.front();
      std::size_t total = 0;
      for (long a : t) total += static_cast<std::size_t>(std::labs(a));
      EXPECT_EQ(d.crossings.size(), total);
      const auto [p, q] = oracle::convergent(t);
      EXPECT_EQ(r.components == 1, p % 2 != 0) << ::testing::PrintToString(t);
      EXPECT_EQ(oracle::knot_determinant(d), std::llabs(p)) << ::testing::PrintToString(t);
      ++checked;
    }
  EXPECT_GT(checked, 1000u);
}

TEST(Plat, SmallCrossingSweepSelfValidates) {
  // all term lists with sum |a_i| <= 12 and up to 5 terms of size <= 4
  for (std::size_t k = 1; k <= 5; ++k)
    for (const auto& t : all_terms(k, 4)) {
      long total = 0;
      for (long a : t) total += std::labs(a);
      if (total > 12 || !defined(t)) continue;
      EXPECT_TRUE(validate(two_bridge_plat({t})).ok()) << ::testing::PrintToString(t);
    }
}

TEST(Plat, CarriesProvenance) {
  const PlanarDiagram d = two_bridge_plat({{2, 1, 1, 2}});
  ASSERT_TRUE(d.plat.has_value());
  EXPECT_EQ(d.plat->terms, (std::vector<long>{2, 1, 1, 2}));
}
