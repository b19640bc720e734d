#pragma once

#include <string>
#include <utility>

namespace unistab {

/// A bound together with the formula and the topological hypotheses it
/// relies on, which the caller has to vouch for.
struct BoundReport {
  std::string quantity;
  long value = 0;
  std::string formula;
  std::string hypothesis;
};

/// Genus g, n-bridge presentation of a knot (n >= 1).
struct GnPresentation {
  long g = 0;
  long n = 1;
};

/// Two isotopic splittings of genus g have a union stabilization of genus g + 1.
BoundReport prop21_bound(long g);
/// Union stabilization genus upper bound g1 + g2 + c, one tunnel per crossing.
BoundReport thm22_bound(long g1, long g2, long crossings);
/// Union genus upper bound g1 + g2 when the spine of V2 lies on S1.
BoundReport prop32_bound(long g1, long g2);
/// (tunnel number bound g + n - 1, union genus bound 2g + 2n - 1).
std::pair<BoundReport, BoundReport> prop33_bounds(const GnPresentation& p);

struct EulerGlue {
  long chi_x1 = 0;
  long chi_x2 = 0;
  long chi_s = 0;
  long genus = 0;
};

/// Recomputes the genus of X1 u X2 from Euler characteristics; throws
/// std::logic_error if it disagrees with 2g + 2n - 1.
EulerGlue euler_glue_check(const GnPresentation& p);

}  // namespace unistab
