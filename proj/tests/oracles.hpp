#pragma once

// Independent reference computations used to check the library. None of
// these call into the code under test except for plain data types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "unistab/diagram.hpp"
#include "unistab/presentation.hpp"

namespace oracle {

using i128 = __int128;

/// p/q from the forward convergent recurrence p_k = a_k p_{k-1} + p_{k-2}.
inline std::pair<std::int64_t, std::int64_t> convergent(const std::vector<long>& a) {
  i128 p_prev = 1, p = a[0], q_prev = 0, q = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    const i128 np = a[k] * p + p_prev, nq = a[k] * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = np;
    q = nq;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const auto g = std::gcd(static_cast<std::int64_t>(p < 0 ? -p : p), static_cast<std::int64_t>(q));
  return {static_cast<std::int64_t>(p) / g, static_cast<std::int64_t>(q) / g};
}

/// Exact determinant by Bareiss elimination.
inline i128 determinant(std::vector<std::vector<i128>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  i128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Knot determinant of a crossing-only diagram via Fox colorings: any
/// first minor of the coloring matrix (rows crossings, columns over-arcs).
inline std::int64_t knot_determinant(const unistab::PlanarDiagram& d) {
  std::map<unistab::EdgeLabel, unistab::EdgeLabel> parent;
  auto find = [&](unistab::EdgeLabel e) {
    parent.try_emplace(e, e);
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const auto& c : d.crossings) parent[find(c.slots[1])] = find(c.slots[3]);
  std::map<unistab::EdgeLabel, std::size_t> arc;
  for (const auto& c : d.crossings)
    for (auto e : c.slots) arc.try_emplace(find(e), arc.size());
  // a component with no undercrossing leaves an extra arc: colorings have rank >= 2
  if (arc.size() > d.crossings.size()) return 0;
  std::vector<std::vector<i128>> m(d.crossings.size(), std::vector<i128>(arc.size(), 0));
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& s = d.crossings[i].slots;
    m[i][arc[find(s[1])]] += 2;
    m[i][arc[find(s[0])]] -= 1;
    m[i][arc[find(s[2])]] -= 1;
  }
  // drop the last row and column
  std::vector<std::vector<i128>> minor;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) minor.emplace_back(m[i].begin(), m[i].end() - 1);
  const i128 det = determinant(minor);
  return static_cast<std::int64_t>(det < 0 ? -det : det);
}

/// Invariant factors from determinantal divisors d_k = gcd of all k x k minors.
inline std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<long long>>& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::int64_t g = 0;
    std::vector<std::size_t> rsel(k), csel(k);
    // enumerate k-subsets by bitmask
    for (std::uint32_t rm = 0; rm < (1u << rows); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      for (std::uint32_t cm = 0; cm < (1u << cols); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
        std::vector<std::vector<i128>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!(rm >> i & 1)) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < cols; ++j)
            if (cm >> j & 1) sub.back().push_back(a[i][j]);
        }
        const i128 det = determinant(sub);
        g = std::gcd(g, static_cast<std::int64_t>(det < 0 ? -det : det));
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<std::int64_t> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

/// Hom count by plain enumeration of every assignment against a raw
/// multiplication table (identity 0).
inline std::uint64_t brute_force_homs(const unistab::GroupPresentation& p,
                                      const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  std::vector<int> inv(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0) inv[a] = b;
  std::vector<int> val(p.generators, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators) {
      int x = 0;
      for (const auto& l : r) x = table[x][l.exp > 0 ? val[l.gen] : inv[val[l.gen]]];
      if (x != 0) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < val.size() && ++val[i] == n) val[i++] = 0;
    if (i == val.size()) break;
  }
  return count;
}

/// Pairs (x, y) of permutations of {0,1,2} with x y x = y x y, counted directly.
inline int trefoil_into_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto mul = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return std::array<int, 3>{a[b[0]], a[b[1]], a[b[2]]};
  };
  int count = 0;
  for (const auto& x : perms)
    for (const auto& y : perms) count += mul(mul(x, y), x) == mul(mul(y, x), y);
  return count;
}

}  // namespace oracle
