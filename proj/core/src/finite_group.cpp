#include "unistab/finite_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <sstream>

#include "text_scan.hpp"
#include "unistab/errors.hpp"

namespace unistab {

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<Element>> table)
    : name_(std::move(name)), order_(table.size()), table_(std::move(table)) {
  const std::size_t n = order_;
  if (n == 0) throw InvalidInput("group table is empty");
  if (n > 65535) throw InvalidInput("group order too large");
  flat_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n)
      throw InvalidInput("row " + std::to_string(a) + " has " + std::to_string(table_[a].size()) +
                         " entries, expected " + std::to_string(n));
    for (Element x : table_[a]) {
      if (x >= n) throw InvalidInput("entry " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
      flat_.push_back(x);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (mul(0, static_cast<Element>(a)) != a || mul(static_cast<Element>(a), 0) != a)
      throw InvalidInput("element 0 is not the identity");
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t found = n;
    for (std::size_t b = 0; b < n && found == n; ++b)
      if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 0) found = b;
    if (found == n) throw InvalidInput("element " + std::to_string(a) + " has no inverse");
    inverse_[a] = static_cast<Element>(found);
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InvalidInput("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");

  std::vector<bool> done(n, false);
  for (Element a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<Element> cls;
    for (Element g = 0; g < n; ++g) cls.push_back(mul(mul(g, a), inv(g)));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (Element x : cls) done[x] = true;
    classes_.push_back(std::move(cls));
  }
}

namespace {

using Perm = std::vector<std::uint8_t>;

Perm compose(const Perm& p, const Perm& q) {  // apply q first, then p
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

// Closure of the generators under composition, identity first, then in
// order of discovery by breadth-first search.
FiniteGroupTable permutation_group(std::string name, std::size_t degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint8_t>(i);
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm p = compose(elems[k], g);
      if (index.emplace(p, elems.size()).second) elems.push_back(std::move(p));
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<FiniteGroupTable::Element>> table(n, std::vector<FiniteGroupTable::Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a][b] = static_cast<FiniteGroupTable::Element>(index.at(compose(elems[a], elems[b])));
  return FiniteGroupTable(std::move(name), std::move(table));
}

FiniteGroupTable cyclic(std::string name, std::size_t n) {
  std::vector<std::vector<FiniteGroupTable::Element>> table(n, std::vector<FiniteGroupTable::Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<FiniteGroupTable::Element>((a + b) % n);
  return FiniteGroupTable(std::move(name), std::move(table));
}

}  // namespace

std::vector<std::string> builtin_group_names() {
  return {"Z2", "Z3", "Z4", "Z5", "S3", "D4", "A4", "S4", "A5"};
}

FiniteGroupTable builtin_group(std::string_view name) {
  if (name == "Z2") return cyclic("Z2", 2);
  if (name == "Z3") return cyclic("Z3", 3);
  if (name == "Z4") return cyclic("Z4", 4);
  if (name == "Z5") return cyclic("Z5", 5);
  if (name == "S3") return permutation_group("S3", 3, {{1, 0, 2}, {1, 2, 0}});
  if (name == "D4") return permutation_group("D4", 4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  if (name == "A4") return permutation_group("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  if (name == "S4") return permutation_group("S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  if (name == "A5") return permutation_group("A5", 5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
  throw InvalidInput("unknown group '" + std::string(name) + "' (builtin: Z2 Z3 Z4 Z5 S3 D4 A4 S4 A5)");
}

FiniteGroupTable parse_group_table(std::string_view text, std::string name) {
  std::size_t order = 0;
  bool have_header = false;
  std::vector<std::vector<FiniteGroupTable::Element>> rows;
  auto number = [](const detail::Token& t, std::size_t line) {
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
      throw ParseError(line, t.column, "expected a nonnegative integer, got '" + std::string(t.text) + "'");
    return v;
  };
  for (const auto& line : detail::scan_lines(text)) {
    if (!have_header) {
      if (line.tokens.size() != 2 || line.tokens[0].text != "order")
        throw ParseError(line.number, line.tokens[0].column, "expected 'order N' header");
      order = number(line.tokens[1], line.number);
      if (order == 0 || order > 65535) throw ParseError(line.number, line.tokens[1].column, "order out of range");
      have_header = true;
      continue;
    }
    if (rows.size() == order) throw ParseError(line.number, 1, "more than " + std::to_string(order) + " rows");
    if (line.tokens.size() != order)
      throw ParseError(line.number, 1,
                       "expected " + std::to_string(order) + " entries, got " + std::to_string(line.tokens.size()));
    std::vector<FiniteGroupTable::Element> row;
    for (const auto& t : line.tokens) {
      const auto v = number(t, line.number);
      if (v >= order) throw ParseError(line.number, t.column, "element index out of range");
      row.push_back(static_cast<FiniteGroupTable::Element>(v));
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(1, 1, "missing 'order N' header");
  if (rows.size() != order)
    throw ParseError(1, 1, "expected " + std::to_string(order) + " rows, got " + std::to_string(rows.size()));
  return FiniteGroupTable(std::move(name), std::move(rows));
}

std::string emit_group_table(const FiniteGroupTable& g) {
  std::ostringstream os;
  os << "order " << g.order() << '\n';
  for (const auto& row : g.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace unistab
