#include <gtest/gtest.h>

#include "unistab/errors.hpp"
#include "unistab/genus.hpp"

using namespace unistab;

TEST(Genus, Prop21) {
  EXPECT_EQ(prop21_bound(2).value, 3);
  EXPECT_EQ(prop21_bound(0).value, 1);
  EXPECT_EQ(prop21_bound(7).value, 8);
  EXPECT_THROW(prop21_bound(-1), InvalidInput);
}

TEST(Genus, Thm22) {
  EXPECT_EQ(thm22_bound(2, 3, 0).value, 5);
  EXPECT_EQ(thm22_bound(1, 1, 3).value, 5);
  for (long g = 0; g <= 5; ++g)
    for (long c = 0; c <= 5; ++c) EXPECT_EQ(thm22_bound(0, g, c).value, g + c);
}

TEST(Genus, Thm22IsMonotone) {
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      for (long c = 0; c <= 6; ++c) {
        const long v = thm22_bound(a, b, c).value;
        EXPECT_LE(v, thm22_bound(a + 1, b, c).value);
        EXPECT_LE(v, thm22_bound(a, b + 1, c).value);
        EXPECT_LE(v, thm22_bound(a, b, c + 1).value);
      }
}

TEST(Genus, Prop21AgainstThm22) {
  for (long g = 0; g <= 10; ++g) EXPECT_LE(prop21_bound(g).value, thm22_bound(g, g, 0).value + 1);
}

TEST(Genus, Prop32) {
  EXPECT_EQ(prop32_bound(2, 2).value, 4);
  EXPECT_EQ(prop32_bound(0, 5).value, 5);
  EXPECT_EQ(prop32_bound(1, 3).value, 4);
  EXPECT_NE(prop32_bound(1, 3).hypothesis.find("spine"), std::string::npos);
}

TEST(Genus, Prop33) {
  const auto check = [](long g, long n, long t, long u) {
    const auto [tb, ub] = prop33_bounds({g, n});
    EXPECT_EQ(tb.value, t);
    EXPECT_EQ(ub.value, u);
  };
  check(1, 3, 3, 7);
  check(0, 1, 0, 1);
  check(2, 2, 3, 7);
  EXPECT_THROW(prop33_bounds({1, 0}), InvalidInput);
  EXPECT_THROW(prop33_bounds({-1, 1}), InvalidInput);
}

TEST(Genus, EulerGlueExamples) {
  const EulerGlue a = euler_glue_check({1, 3});
  EXPECT_EQ(a.chi_x1, -6);
  EXPECT_EQ(a.chi_s, -6);
  EXPECT_EQ(a.genus, 7);
  const EulerGlue b = euler_glue_check({0, 1});
  EXPECT_EQ(b.chi_x1, 0);
  EXPECT_EQ(b.chi_s, 0);
  EXPECT_EQ(b.genus, 1);
}

TEST(Genus, EulerGlueAgreesWithProp33) {
  for (long g = 0; g <= 10; ++g)
    for (long n = 1; n <= 10; ++n) {
      // chi(X1 u X2) = chi(X1) + chi(X2) - chi(S), and a handlebody of genus h has chi 1 - h
      const long chi_x1 = 1 - (2 * g + 2 * n - 1);
      const long chi_s = 2 - 2 * g - 2 * n;
      EXPECT_EQ(euler_glue_check({g, n}).genus, 1 - (chi_x1 + chi_s - chi_s));
      EXPECT_EQ(euler_glue_check({g, n}).genus, prop33_bounds({g, n}).second.value);
    }
}
