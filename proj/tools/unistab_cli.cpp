#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unistab/abelian.hpp"
#include "unistab/case_study.hpp"
#include "unistab/errors.hpp"
#include "unistab/genus.hpp"
#include "unistab/hom_count.hpp"
#include "unistab/tietze.hpp"
#include "unistab/two_bridge.hpp"
#include "unistab/wirtinger.hpp"
#include "unistab/witness.hpp"

using namespace unistab;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t budget = std::uint64_t{1} << 32;
  bool symmetry_reduction = false;
  unsigned jobs = 1;
  std::string output = "table";

  bool as_json() const { return output == "json"; }
  CountOptions counting() const { return {budget, symmetry_reduction, jobs}; }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<long> parse_cf(const std::string& text) {
  std::vector<long> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      terms.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("bad continued fraction term '" + item + "'");
    }
  }
  return terms;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

TunnelSpec parse_positions(TunnelSide side, const std::string& text) {
  const auto parts = split_names(text);
  if (parts.size() != 2) throw InvalidInput("tunnel positions need two strands, e.g. 1,2");
  try {
    return {side, static_cast<std::uint32_t>(std::stoul(parts[0])), static_cast<std::uint32_t>(std::stoul(parts[1]))};
  } catch (const std::exception&) {
    throw InvalidInput("bad tunnel positions '" + text + "'");
  }
}

json diagram_json(const PlanarDiagram& d) {
  const auto report = validate(d);
  json j;
  j["crossings"] = d.crossings.size();
  j["vertices"] = d.vertices.size();
  j["intersections"] = d.intersections.size();
  j["free_loops"] = d.free_loops;
  j["valid"] = report.ok();
  if (report.ok()) j["components"] = report.components;
  j["diagram"] = emit_diagram(d);
  return j;
}

json presentation_json(const GroupPresentation& p) {
  json j;
  j["generators"] = p.generators;
  j["relators"] = json::array();
  for (const auto& r : p.relators) j["relators"].push_back(word_to_string(r));
  return j;
}

void print_bound(const BoundReport& b, bool as_json) {
  if (as_json) {
    json j{{"quantity", b.quantity}, {"value", b.value}, {"formula", b.formula}, {"hypothesis", b.hypothesis}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << b.quantity << " <= " << b.value << "  [" << b.formula << "; " << b.hypothesis << "]\n";
  }
}

int verdict_exit(const VerdictReport& r) { return is_not_free(r) ? 0 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagrams, Wirtinger presentations and finite-quotient tests for knots with tunnels"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("UNISTAB_BUDGET")) {
    try {
      g.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: UNISTAB_BUDGET is not a number: " << env << '\n';
      return 1;
    }
  }
  app.add_option("--budget", g.budget, "Maximum generator assignments searched per count (env UNISTAB_BUDGET)");
  app.add_flag("--symmetry-reduction", g.symmetry_reduction, "Fix the first generator up to conjugacy");
  app.add_option("--jobs", g.jobs, "Worker threads for counting (0 = all cores)");
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "table"}));

  int exit_code = 0;
  std::string file = "-";

  auto* two_bridge = app.add_subcommand("two-bridge", "4-plat diagram of a continued fraction");
  std::string cf_text;
  two_bridge->add_option("--cf", cf_text, "Terms, e.g. 2,1,1,2")->required();
  two_bridge->callback([&] {
    const ContinuedFraction cf{parse_cf(cf_text)};
    const Fraction f = cf_to_fraction(cf);
    const PlanarDiagram d = two_bridge_plat(cf);
    if (g.as_json()) {
      json j = diagram_json(d);
      j["fraction"] = std::to_string(f.numerator) + "/" + std::to_string(f.denominator);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "# fraction " << f.numerator << '/' << f.denominator << '\n' << emit_diagram(d);
    }
  });

  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file");
  validate_cmd->add_option("file", file, "Diagram file, - for stdin");
  validate_cmd->callback([&] {
    const PlanarDiagram d = parse_diagram(read_input(file));
    const ValidationReport r = validate(d);
    if (g.as_json()) {
      json j{{"valid", r.ok()}, {"violations", r.violations}};
      if (r.ok()) j["components"] = r.components;
      std::cout << j.dump(2) << '\n';
    } else if (r.ok()) {
      std::cout << "ok: " << r.components << " component" << (r.components == 1 ? "" : "s") << ", "
                << d.crossings.size() << " crossings, " << d.vertices.size() << " vertices\n";
    } else {
      for (const auto& v : r.violations) std::cout << v << '\n';
    }
    if (!r.ok()) exit_code = 1;
  });

  auto* attach = app.add_subcommand("attach-tunnels", "Add upper and/or lower tunnels to a plat or the unknot");
  bool upper = false, lower = false;
  std::string upper_at, lower_at;
  attach->add_flag("--upper", upper, "Add the upper tunnel");
  attach->add_flag("--lower", lower, "Add the lower tunnel");
  attach->add_option("--upper-at", upper_at, "Strand positions of the upper tunnel, e.g. 1,2");
  attach->add_option("--lower-at", lower_at, "Strand positions of the lower tunnel, e.g. 0,1");
  attach->add_option("file", file, "Diagram file, - for stdin");
  attach->callback([&] {
    const PlanarDiagram d = parse_diagram(read_input(file));
    const ContinuedFraction cf = d.plat.value_or(ContinuedFraction{{1}});
    std::vector<TunnelSpec> specs;
    if (upper || !upper_at.empty())
      specs.push_back(upper_at.empty() ? default_tunnel(cf, TunnelSide::upper)
                                       : parse_positions(TunnelSide::upper, upper_at));
    if (lower || !lower_at.empty())
      specs.push_back(lower_at.empty() ? default_tunnel(cf, TunnelSide::lower)
                                       : parse_positions(TunnelSide::lower, lower_at));
    if (specs.empty()) throw InvalidInput("nothing to attach: pass --upper and/or --lower");
    const PlanarDiagram t = attach_tunnels(d, specs);
    if (g.as_json()) {
      json j = diagram_json(t);
      j["neighborhood_genus"] = neighborhood_genus(t);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << emit_diagram(t);
    }
  });

  auto* perturb_cmd = app.add_subcommand("perturb", "Resolve the two tunnel intersections");
  int case_k = 1;
  perturb_cmd->add_option("--case", case_k, "1..4: (over,over) (over,under) (under,over) (under,under)")->required();
  perturb_cmd->add_option("file", file, "Diagram file, - for stdin");
  perturb_cmd->callback([&] {
    const PlanarDiagram d = perturb(parse_diagram(read_input(file)), case_k);
    std::cout << (g.as_json() ? diagram_json(d).dump(2) + "\n" : emit_diagram(d));
  });

  auto* wirtinger_cmd = app.add_subcommand("wirtinger", "Wirtinger presentation of a diagram");
  wirtinger_cmd->add_option("file", file, "Diagram file, - for stdin");
  wirtinger_cmd->callback([&] {
    const GroupPresentation p = wirtinger(parse_diagram(read_input(file)));
    std::cout << (g.as_json() ? presentation_json(p).dump(2) + "\n" : emit_presentation(p));
  });

  auto* simplify = app.add_subcommand("simplify", "Tietze-simplify a presentation");
  std::size_t max_moves = 10000;
  simplify->add_option("--moves", max_moves, "Move budget");
  simplify->add_option("file", file, "Presentation file, - for stdin");
  simplify->callback([&] {
    const GroupPresentation p = tietze_simplify(parse_presentation(read_input(file)), {max_moves, 4});
    std::cout << (g.as_json() ? presentation_json(p).dump(2) + "\n" : emit_presentation(p));
  });

  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants of a presentation");
  abelianize->add_option("file", file, "Presentation file, - for stdin");
  abelianize->callback([&] {
    const AbelianInvariants a = abelianization(parse_presentation(read_input(file)));
    if (g.as_json())
      std::cout << json{{"free_rank", a.free_rank}, {"torsion", a.torsion}, {"group", to_string(a)}}.dump(2) << '\n';
    else
      std::cout << to_string(a) << '\n';
  });

  auto* count = app.add_subcommand("count-homs", "Count homomorphisms into a finite group");
  std::string group_name, table_file;
  auto* group_opt = count->add_option("--group", group_name, "Builtin group: Z2 Z3 Z4 Z5 S3 D4 A4 S4 A5");
  count->add_option("--table", table_file, "Cayley table file instead of a builtin group")->excludes(group_opt);
  count->add_option("file", file, "Presentation file, - for stdin");
  count->callback([&] {
    if (group_name.empty() && table_file.empty()) throw InvalidInput("pass --group or --table");
    const FiniteGroupTable G = table_file.empty() ? builtin_group(group_name)
                                                  : parse_group_table(read_input(table_file), table_file);
    const GroupPresentation p = parse_presentation(read_input(file));
    const std::uint64_t n = count_homs(p, G, g.counting());
    if (g.as_json())
      std::cout << json{{"group", G.name()}, {"order", G.order()}, {"count", n}}.dump(2) << '\n';
    else
      std::cout << n << '\n';
  });

  auto* not_free = app.add_subcommand("not-free", "Look for a proof that a group is not free of a given rank");
  std::size_t rank = 1;
  std::string groups = "S3,A4,S4,A5";
  not_free->add_option("--rank", rank, "Claimed free rank")->required();
  not_free->add_option("--groups", groups, "Candidate groups, cheapest first");
  not_free->add_option("file", file, "Presentation file, - for stdin");
  not_free->callback([&] {
    std::vector<FiniteGroupTable> cands;
    for (const auto& n : split_names(groups)) cands.push_back(builtin_group(n));
    const VerdictReport r = not_free_witness(parse_presentation(read_input(file)), rank, cands, g.counting());
    if (g.as_json()) {
      json j{{"verdict", describe(r.verdict)}, {"abelianization", to_string(r.abelian)}, {"candidates", json::array()}};
      for (const auto& c : r.candidates) {
        json cj{{"group", c.group}, {"counted", c.counted}};
        if (c.counted) {
          cj["expected"] = c.expected;
          cj["actual"] = c.actual;
        } else {
          cj["skipped"] = c.skipped_reason;
        }
        j["candidates"].push_back(cj);
      }
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << describe(r.verdict) << '\n';
      for (const auto& c : r.candidates)
        if (!c.counted) std::cout << "  skipped " << c.group << ": " << c.skipped_reason << '\n';
    }
    exit_code = verdict_exit(r);
  });

  auto* bounds = app.add_subcommand("bounds", "Genus bounds");
  bounds->require_subcommand(1);
  long bg = 0, g1 = 0, g2 = 0, crossings = 0, n = 1;
  bool euler = false;
  auto* b21 = bounds->add_subcommand("prop21", "Union stabilization of two isotopic splittings");
  b21->add_option("--g", bg)->required();
  b21->callback([&] { print_bound(prop21_bound(bg), g.as_json()); });
  auto* b22 = bounds->add_subcommand("thm22", "Union stabilization via tunnels at crossings");
  b22->add_option("--g1", g1)->required();
  b22->add_option("--g2", g2)->required();
  b22->add_option("--crossings", crossings)->required();
  b22->callback([&] { print_bound(thm22_bound(g1, g2, crossings), g.as_json()); });
  auto* b32 = bounds->add_subcommand("prop32", "Union genus when one spine lies on the other surface");
  b32->add_option("--g1", g1)->required();
  b32->add_option("--g2", g2)->required();
  b32->callback([&] { print_bound(prop32_bound(g1, g2), g.as_json()); });
  auto* b33 = bounds->add_subcommand("prop33", "Bounds from a genus g, n-bridge presentation");
  b33->add_option("--g", bg)->required();
  b33->add_option("--n", n)->required();
  b33->add_flag("--euler-check", euler, "Recompute the union genus from Euler characteristics");
  b33->callback([&] {
    const GnPresentation p{bg, n};
    const auto [tunnels, genus] = prop33_bounds(p);
    print_bound(tunnels, g.as_json());
    print_bound(genus, g.as_json());
    if (euler) {
      const EulerGlue e = euler_glue_check(p);
      if (g.as_json())
        std::cout << json{{"chi_x1", e.chi_x1}, {"chi_x2", e.chi_x2}, {"chi_s", e.chi_s}, {"genus", e.genus}}.dump()
                  << '\n';
      else
        std::cout << "euler check: chi(X1) = " << e.chi_x1 << ", chi(X2) = chi(S) = " << e.chi_s
                  << ", genus = " << e.genus << '\n';
    }
  });

  auto* study = app.add_subcommand("case-study-63", "Run the four perturbation cases of the 6_3 tunnel pair");
  std::string study_cf = "2,1,1,2";
  bool parallel_cases = false, no_timing = false;
  study->add_option("--cf", study_cf, "Continued fraction of the knot");
  study->add_option("--groups", groups, "Candidate groups, cheapest first");
  study->add_flag("--parallel-cases", parallel_cases, "Run the four cases concurrently");
  study->add_flag("--no-timing", no_timing, "Leave timing fields out of the JSON report");
  study->callback([&] {
    CaseStudyOptions opts;
    opts.cf = ContinuedFraction{parse_cf(study_cf)};
    opts.candidates = split_names(groups);
    opts.counting = g.counting();
    opts.parallel_cases = parallel_cases;
    const CaseStudyReport r = run_case_study_63(opts);
    std::cout << (g.as_json() ? case_study_json(r, !no_timing) : case_study_table(r));
    exit_code = case_study_exit_code(r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
