#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "unistab/abelian.hpp"
#include "unistab/finite_group.hpp"
#include "unistab/hom_count.hpp"
#include "unistab/presentation.hpp"

namespace unistab {

/// The presented group has a different number of homomorphisms into
/// `group` than a free group of rank `rank` would.
struct NotFreeOfRank {
  std::size_t rank = 0;
  std::string group;
  std::uint64_t expected = 0;  // |G|^rank
  std::uint64_t actual = 0;
};

struct AbelianizationMismatch {
  AbelianInvariants found;
  std::size_t expected_rank = 0;
};

struct CandidateOutcome {
  std::string group;
  bool counted = false;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  std::string skipped_reason;  // set when counting was refused
};

struct Inconclusive {
  std::vector<CandidateOutcome> tested;
};

using Verdict = std::variant<NotFreeOfRank, AbelianizationMismatch, Inconclusive>;

struct VerdictReport {
  Verdict verdict;
  AbelianInvariants abelian;
  /// Every candidate examined, in order, up to and including the witness.
  std::vector<CandidateOutcome> candidates;
};

/// Tries to prove that the presented group is not free of rank `rank`:
/// first by its abelianization, then by comparing hom counts into each
/// candidate with |G|^rank. Never claims freeness. Candidates whose count
/// exceeds the budget are skipped and recorded.
VerdictReport not_free_witness(const GroupPresentation& p, std::size_t rank,
                               const std::vector<FiniteGroupTable>& candidates, const CountOptions& opts = {});

bool is_not_free(const VerdictReport& r);
std::string describe(const Verdict& v);

}  // namespace unistab
