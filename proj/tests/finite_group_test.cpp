#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "unistab/errors.hpp"
#include "unistab/finite_group.hpp"

using namespace unistab;

namespace {

std::size_t element_order(const FiniteGroupTable& g, FiniteGroupTable::Element a) {
  std::size_t k = 1;
  for (auto x = a; x != 0; x = g.mul(x, a)) ++k;
  return k;
}

bool abelian(const FiniteGroupTable& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> class_sizes(const FiniteGroupTable& g) {
  std::vector<std::size_t> out;
  for (const auto& c : g.conjugacy_classes()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(FiniteGroup, BuiltinOrders) {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"Z2", 2}, {"Z3", 3}, {"Z4", 4}, {"Z5", 5}, {"S3", 6}, {"D4", 8}, {"A4", 12}, {"S4", 24}, {"A5", 60}};
  for (const auto& [name, order] : expected) {
    const auto g = builtin_group(name);
    EXPECT_EQ(g.order(), order) << name;
    EXPECT_EQ(g.name(), name);
  }
  EXPECT_EQ(builtin_group_names().size(), expected.size());
}

TEST(FiniteGroup, Z4IsCyclic) {
  const auto g = builtin_group("Z4");
  EXPECT_EQ(g.mul(g.mul(1, 1), g.mul(1, 1)), 0);
  EXPECT_EQ(element_order(g, 1), 4u);
}

TEST(FiniteGroup, StructureFingerprints) {
  EXPECT_FALSE(abelian(builtin_group("S3")));
  EXPECT_FALSE(abelian(builtin_group("D4")));
  EXPECT_TRUE(abelian(builtin_group("Z5")));
  EXPECT_EQ(class_sizes(builtin_group("S3")), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(class_sizes(builtin_group("D4")), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(class_sizes(builtin_group("A4")), (std::vector<std::size_t>{1, 3, 4, 4}));
  EXPECT_EQ(class_sizes(builtin_group("S4")), (std::vector<std::size_t>{1, 3, 6, 6, 8}));
  EXPECT_EQ(class_sizes(builtin_group("A5")), (std::vector<std::size_t>{1, 12, 12, 15, 20}));
}

TEST(FiniteGroup, InversesAndIdentity) {
  for (const auto& name : builtin_group_names()) {
    const auto g = builtin_group(name);
    for (std::size_t a = 0; a < g.order(); ++a) {
      const auto e = static_cast<FiniteGroupTable::Element>(a);
      EXPECT_EQ(g.mul(e, g.inv(e)), 0);
      EXPECT_EQ(g.mul(0, e), e);
    }
  }
}

TEST(FiniteGroup, UnknownName) { EXPECT_THROW(builtin_group("Q8"), InvalidInput); }

TEST(FiniteGroup, TableFileRoundTrip) {
  const auto g = builtin_group("S3");
  const auto h = parse_group_table(emit_group_table(g), "copy");
  EXPECT_EQ(h.table(), g.table());
}

TEST(FiniteGroup, TableFileFromDisk) {
  std::ifstream in(std::string(UNISTAB_TEST_DATA) + "/z3.table");
  std::ostringstream ss;
  ss << in.rdbuf();
  const auto g = parse_group_table(ss.str(), "Z3 file");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.mul(2, 2), 1);
}

TEST(FiniteGroup, RejectsBadTables) {
  // identity not at 0
  EXPECT_THROW(parse_group_table("order 2\n1 0\n0 1\n", "t"), InvalidInput);
  // no inverse for 1
  EXPECT_THROW(parse_group_table("order 2\n0 1\n1 1\n", "t"), InvalidInput);
  // Latin square with identity 0 that is not associative
  EXPECT_THROW(parse_group_table("order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n", "t"),
               InvalidInput);
  EXPECT_THROW(parse_group_table("order 2\n0 1\n", "t"), ParseError);
  EXPECT_THROW(parse_group_table("order 2\n0 1\n1 2\n", "t"), ParseError);
  EXPECT_THROW(parse_group_table("0 1\n1 0\n", "t"), ParseError);
}
