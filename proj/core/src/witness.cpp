#include "unistab/witness.hpp"

#include "unistab/errors.hpp"

namespace unistab {

VerdictReport not_free_witness(const GroupPresentation& p, std::size_t rank,
                               const std::vector<FiniteGroupTable>& candidates, const CountOptions& opts) {
  VerdictReport report{Inconclusive{}, abelianization(p), {}};
  if (report.abelian.free_rank != rank || !report.abelian.torsion.empty()) {
    report.verdict = AbelianizationMismatch{report.abelian, rank};
    return report;
  }
  for (const auto& g : candidates) {
    CandidateOutcome out{g.name(), false, 0, 0, {}};
    std::uint64_t expected = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < rank; ++i) overflow |= __builtin_mul_overflow(expected, g.order(), &expected);
    try {
      if (overflow) throw InvalidInput("|G|^rank overflows 64 bits");
      out.actual = count_homs(p, g, opts);
      out.expected = expected;
      out.counted = true;
    } catch (const BudgetExceeded& e) {
      out.skipped_reason = e.what();
    } catch (const InvalidInput& e) {
      out.skipped_reason = e.what();
    }
    report.candidates.push_back(out);
    if (out.counted && out.actual != out.expected) {
      report.verdict = NotFreeOfRank{rank, g.name(), out.expected, out.actual};
      return report;
    }
  }
  report.verdict = Inconclusive{report.candidates};
  return report;
}

bool is_not_free(const VerdictReport& r) {
  return !std::holds_alternative<Inconclusive>(r.verdict);
}

std::string describe(const Verdict& v) {
  if (const auto* n = std::get_if<NotFreeOfRank>(&v))
    return "NotFreeOfRank(" + std::to_string(n->rank) + ", " + n->group + ", expected " +
           std::to_string(n->expected) + ", actual " + std::to_string(n->actual) + ")";
  if (const auto* m = std::get_if<AbelianizationMismatch>(&v))
    return "AbelianizationMismatch(" + to_string(m->found) + " vs " + to_string(AbelianInvariants{m->expected_rank, {}}) + ")";
  const auto& inc = std::get<Inconclusive>(v);
  std::string out = "Inconclusive(";
  for (std::size_t i = 0; i < inc.tested.size(); ++i) out += (i ? ", " : "") + inc.tested[i].group;
  return out + ")";
}

}  // namespace unistab
