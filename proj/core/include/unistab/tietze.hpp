#pragma once

#include <cstddef>

#include "unistab/presentation.hpp"

namespace unistab {

struct TietzeOptions {
  std::size_t max_moves = 10000;
  /// Eliminations that would push the total relator length past this
  /// multiple of the input's length are skipped.
  std::size_t length_factor = 4;
};

/// Simplifies by Tietze moves: cyclically reduces relators, drops empty
/// and duplicate ones (equal up to rotation and inversion), and eliminates
/// a generator that occurs exactly once in some relator by solving for it.
/// Surviving generators are renumbered in their original order. Generator
/// and relator counts never increase.
GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeOptions& opts = {});

/// Least rotation of w or of its inverse; equal for relators that define
/// the same normal closure trivially.
Word canonical_relator(const Word& w);

}  // namespace unistab
