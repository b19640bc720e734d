#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace unistab::detail {

/// Union-find with path halving; optionally tracks parity to the root.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) { resize(n); }

  void resize(std::size_t n) {
    const std::size_t old = parent_.size();
    parent_.resize(n);
    parity_.resize(n, 0);
    for (std::size_t i = old; i < n; ++i) parent_[i] = i;
  }

  std::size_t size() const noexcept { return parent_.size(); }

  std::pair<std::size_t, int> find_with_parity(std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // compress
    int acc = p;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int old = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= old;
      x = next;
    }
    return {r, p};
  }

  std::size_t find(std::size_t x) { return find_with_parity(x).first; }

  /// Requires value(a) ^ value(b) == parity. Returns false on contradiction.
  bool unite(std::size_t a, std::size_t b, int parity = 0) {
    auto [ra, pa] = find_with_parity(a);
    auto [rb, pb] = find_with_parity(b);
    if (ra == rb) return (pa ^ pb) == parity;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ parity;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace unistab::detail
