#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace unistab {

/// Cayley table over elements 0..order-1 with the identity at 0.
class FiniteGroupTable {
 public:
  using Element = std::uint16_t;

  /// Checks closure, identity at 0, inverses and associativity; throws
  /// InvalidInput naming the first failure.
  FiniteGroupTable(std::string name, std::vector<std::vector<Element>> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  Element mul(Element a, Element b) const noexcept { return flat_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }

  /// Conjugacy classes, each listed in increasing order; classes ordered by
  /// their least element.
  const std::vector<std::vector<Element>>& conjugacy_classes() const noexcept { return classes_; }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<std::vector<Element>> table_;
  std::vector<Element> flat_;
  std::vector<Element> inverse_;
  std::vector<std::vector<Element>> classes_;
};

/// Z2, Z3, Z4, Z5, S3, D4, A4, S4 or A5; throws InvalidInput otherwise.
FiniteGroupTable builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

/// Text form: "order N" then N rows of N element indices.
FiniteGroupTable parse_group_table(std::string_view text, std::string name);
std::string emit_group_table(const FiniteGroupTable& g);

}  // namespace unistab
