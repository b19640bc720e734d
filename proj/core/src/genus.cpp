#include "unistab/genus.hpp"

#include <stdexcept>

#include "unistab/errors.hpp"

namespace unistab {
namespace {

void nonnegative(long v, const char* name) {
  if (v < 0) throw InvalidInput(std::string(name) + " must be nonnegative");
}

void check(const GnPresentation& p) {
  nonnegative(p.g, "g");
  if (p.n < 1) throw InvalidInput("n must be at least 1");
}

}  // namespace

BoundReport prop21_bound(long g) {
  nonnegative(g, "g");
  return {"union stabilization genus", g + 1, "g + 1",
          "the two splittings are isotopic, of common genus g"};
}

BoundReport thm22_bound(long g1, long g2, long crossings) {
  nonnegative(g1, "g1");
  nonnegative(g2, "g2");
  nonnegative(crossings, "crossings");
  return {"union stabilization genus (upper bound)", g1 + g2 + crossings, "g1 + g2 + c",
          "one tunnel per crossing of the spine diagram of V2 over the g1-punctured disk; "
          "arcs to the boundary of W1 add no genus"};
}

BoundReport prop32_bound(long g1, long g2) {
  nonnegative(g1, "g1");
  nonnegative(g2, "g2");
  return {"union genus (upper bound)", g1 + g2, "g(S1) + g(S2)", "requires the spine of V2 to lie on S1"};
}

std::pair<BoundReport, BoundReport> prop33_bounds(const GnPresentation& p) {
  check(p);
  return {{"tunnel number (upper bound)", p.g + p.n - 1, "g + n - 1",
           "K admits a genus g, n-bridge presentation"},
          {"union genus (upper bound)", 2 * p.g + 2 * p.n - 1, "2g + 2n - 1",
           "K admits a genus g, n-bridge presentation"}};
}

EulerGlue euler_glue_check(const GnPresentation& p) {
  check(p);
  EulerGlue e;
  // X1 is a handlebody of genus 2g + 2n - 1
  e.chi_x1 = 1 - (2 * p.g + 2 * p.n - 1);
  // X2 is (2n-punctured genus g surface) x I, glued to X1 along that surface
  e.chi_s = 2 - 2 * p.g - 2 * p.n;
  e.chi_x2 = e.chi_s;
  e.genus = 1 - (e.chi_x1 + e.chi_x2 - e.chi_s);
  if (e.genus != 2 * p.g + 2 * p.n - 1) throw std::logic_error("Euler characteristic gluing disagrees with 2g + 2n - 1");
  return e;
}

}  // namespace unistab
