#pragma once

#include <string>
#include <vector>

#include "unistab/diagram.hpp"
#include "unistab/hom_count.hpp"
#include "unistab/tietze.hpp"
#include "unistab/witness.hpp"

namespace unistab {

struct CaseStudyOptions {
  ContinuedFraction cf{{2, 1, 1, 2}};
  std::vector<std::string> candidates{"S3", "A4", "S4", "A5"};
  CountOptions counting{std::uint64_t{1} << 32, true, 1};
  TietzeOptions tietze{};
  /// Run the four cases on separate threads.
  bool parallel_cases = false;
};

struct CaseEntry {
  int index = 0;           // 1..4
  std::string resolution;  // e.g. "over/under"
  std::size_t crossings = 0;
  std::size_t vertices = 0;
  std::size_t strands = 0;
  std::size_t generators_before = 0;
  std::size_t relators_before = 0;
  std::size_t generators_after = 0;
  std::size_t relators_after = 0;
  std::string simplified;  // presentation text after simplification
  AbelianInvariants abelian;
  VerdictReport verdict;
  std::string error;  // nonempty if the case failed
  double wall_seconds = 0;
};

struct CaseStudyReport {
  ContinuedFraction cf;
  std::size_t base_crossings = 0;
  std::size_t tunneled_crossings = 0;
  std::size_t intersections = 0;
  std::vector<CaseEntry> cases;
};

/// Plat of cf, default upper and lower tunnels, each of the four
/// resolutions of their two intersections, then Wirtinger presentation,
/// simplification, abelianization and a search for a witness that the
/// group is not free of rank 3.
CaseStudyReport run_case_study_63(const CaseStudyOptions& opts = {});

/// JSON report; timing fields live under each case's "timing" key and are
/// left out when include_timing is false.
std::string case_study_json(const CaseStudyReport& r, bool include_timing = true);
std::string case_study_table(const CaseStudyReport& r);

/// 0 when every case has a NotFree verdict, 2 if some case is inconclusive
/// or failed.
int case_study_exit_code(const CaseStudyReport& r);

}  // namespace unistab
