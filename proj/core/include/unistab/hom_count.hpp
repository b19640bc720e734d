#pragma once

#include <cstdint>

#include "unistab/finite_group.hpp"
#include "unistab/presentation.hpp"

namespace unistab {

struct CountOptions {
  /// Upper limit on the number of generator assignments searched.
  std::uint64_t budget = std::uint64_t{1} << 32;
  /// Fix the first generator to one element per conjugacy class and weight
  /// by class size.
  bool symmetry_reduction = false;
  /// Worker threads splitting the outermost loop; 0 means hardware concurrency.
  unsigned jobs = 1;
};

/// Worst-case number of assignments the search may visit under opts
/// (saturates at UINT64_MAX).
std::uint64_t search_estimate(const GroupPresentation& p, const FiniteGroupTable& g, const CountOptions& opts);

/// Exact number of homomorphisms from the presented group to g. The result
/// does not depend on jobs. Throws BudgetExceeded when search_estimate is
/// over the budget, and InvalidInput if the count itself overflows 64 bits.
std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroupTable& g, const CountOptions& opts = {});

}  // namespace unistab
