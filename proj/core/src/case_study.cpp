#include "unistab/case_study.hpp"

#include <chrono>
#include <future>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "unistab/two_bridge.hpp"
#include "unistab/wirtinger.hpp"

namespace unistab {
namespace {

const char* name(Resolution r) { return r == Resolution::over ? "over" : "under"; }

CaseEntry run_case(const PlanarDiagram& tunneled, int k, const std::vector<FiniteGroupTable>& groups,
                   const CaseStudyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CaseEntry e;
  e.index = k;
  const auto res = perturbation_case(k);
  e.resolution = std::string(name(res[0])) + "/" + name(res[1]);
  try {
    const PlanarDiagram d = perturb(tunneled, k);
    e.crossings = d.crossings.size();
    e.vertices = d.vertices.size();
    e.strands = strand_count(d);
    const GroupPresentation p = wirtinger(d);
    e.generators_before = p.generators;
    e.relators_before = p.relators.size();
    const GroupPresentation s = tietze_simplify(p, opts.tietze);
    e.generators_after = s.generators;
    e.relators_after = s.relators.size();
    e.simplified = emit_presentation(s);
    e.verdict = not_free_witness(s, 3, groups, opts.counting);
    e.abelian = e.verdict.abelian;
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  e.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return e;
}

nlohmann::ordered_json verdict_json(const VerdictReport& v) {
  nlohmann::ordered_json j;
  if (const auto* n = std::get_if<NotFreeOfRank>(&v.verdict)) {
    j["kind"] = "NotFreeOfRank";
    j["rank"] = n->rank;
    j["group"] = n->group;
    j["expected"] = n->expected;
    j["actual"] = n->actual;
  } else if (const auto* m = std::get_if<AbelianizationMismatch>(&v.verdict)) {
    j["kind"] = "AbelianizationMismatch";
    j["found"] = to_string(m->found);
    j["expected_rank"] = m->expected_rank;
  } else {
    j["kind"] = "Inconclusive";
  }
  j["summary"] = describe(v.verdict);
  auto& cands = j["candidates"] = nlohmann::ordered_json::array();
  for (const auto& c : v.candidates) {
    nlohmann::ordered_json cj;
    cj["group"] = c.group;
    cj["counted"] = c.counted;
    if (c.counted) {
      cj["expected"] = c.expected;
      cj["actual"] = c.actual;
    } else {
      cj["skipped"] = c.skipped_reason;
    }
    cands.push_back(cj);
  }
  return j;
}

}  // namespace

CaseStudyReport run_case_study_63(const CaseStudyOptions& opts) {
  CaseStudyReport r;
  r.cf = opts.cf;
  const PlanarDiagram base = two_bridge_plat(opts.cf);
  r.base_crossings = base.crossings.size();
  const PlanarDiagram tunneled = attach_tunnels(
      base, {default_tunnel(opts.cf, TunnelSide::upper), default_tunnel(opts.cf, TunnelSide::lower)});
  r.tunneled_crossings = tunneled.crossings.size();
  r.intersections = tunneled.intersections.size();

  std::vector<FiniteGroupTable> groups;
  for (const auto& n : opts.candidates) groups.push_back(builtin_group(n));

  if (opts.parallel_cases) {
    std::vector<std::future<CaseEntry>> futures;
    for (int k = 1; k <= 4; ++k)
      futures.push_back(std::async(std::launch::async, run_case, std::cref(tunneled), k, std::cref(groups),
                                   std::cref(opts)));
    for (auto& f : futures) r.cases.push_back(f.get());
  } else {
    for (int k = 1; k <= 4; ++k) r.cases.push_back(run_case(tunneled, k, groups, opts));
  }
  return r;
}

std::string case_study_json(const CaseStudyReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["continued_fraction"] = r.cf.terms;
  j["base_crossings"] = r.base_crossings;
  j["tunneled_crossings"] = r.tunneled_crossings;
  j["intersections"] = r.intersections;
  auto& cases = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& e : r.cases) {
    nlohmann::ordered_json c;
    c["case"] = e.index;
    c["resolution"] = e.resolution;
    if (!e.error.empty()) {
      c["error"] = e.error;
    } else {
      c["crossings"] = e.crossings;
      c["vertices"] = e.vertices;
      c["strands"] = e.strands;
      c["presentation"] = {{"generators", e.generators_before}, {"relators", e.relators_before}};
      c["simplified"] = {{"generators", e.generators_after}, {"relators", e.relators_after}, {"text", e.simplified}};
      c["abelianization"] = to_string(e.abelian);
      c["verdict"] = verdict_json(e.verdict);
    }
    if (include_timing) c["timing"] = {{"wall_seconds", e.wall_seconds}};
    cases.push_back(c);
  }
  return j.dump(2) + "\n";
}

std::string case_study_table(const CaseStudyReport& r) {
  std::ostringstream os;
  os << "continued fraction";
  for (long t : r.cf.terms) os << ' ' << t;
  os << ": " << r.base_crossings << " crossings, " << r.tunneled_crossings << " with tunnels, "
     << r.intersections << " intersections\n";
  os << std::left << std::setw(6) << "case" << std::setw(13) << "resolution" << std::setw(11) << "crossings"
     << std::setw(13) << "gens/rels" << std::setw(11) << "simplified" << std::setw(8) << "H1"
     << std::setw(10) << "time(s)" << "verdict\n";
  for (const auto& e : r.cases) {
    os << std::setw(6) << e.index << std::setw(13) << e.resolution;
    if (!e.error.empty()) {
      os << "error: " << e.error << '\n';
      continue;
    }
    os << std::setw(11) << e.crossings
       << std::setw(13) << (std::to_string(e.generators_before) + "/" + std::to_string(e.relators_before))
       << std::setw(11) << (std::to_string(e.generators_after) + "/" + std::to_string(e.relators_after))
       << std::setw(8) << to_string(e.abelian);
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << e.wall_seconds;
    os << std::setw(10) << t.str() << describe(e.verdict.verdict) << '\n';
  }
  return os.str();
}

int case_study_exit_code(const CaseStudyReport& r) {
  for (const auto& e : r.cases)
    if (!e.error.empty() || !std::holds_alternative<NotFreeOfRank>(e.verdict.verdict)) return 2;
  return 0;
}

}  // namespace unistab
