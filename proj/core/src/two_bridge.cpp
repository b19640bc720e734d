#include "unistab/two_bridge.hpp"

#include <numeric>
#include <string>

#include "level_builder.hpp"
#include "plat_program.hpp"
#include "unistab/errors.hpp"

namespace unistab {
namespace {

std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0, sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(prod, c, &sum))
    throw InvalidInput("continued fraction overflows 64-bit arithmetic");
  return sum;
}

void check_terms(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw InvalidInput("continued fraction needs at least one term");
  for (std::size_t i = 0; i < cf.terms.size(); ++i)
    if (cf.terms[i] == 0)
      throw InvalidInput("continued fraction term " + std::to_string(i + 1) + " is zero");
}

// Ends of the row grouped into host strands, each optionally carrying a
// parallel tunnel strand on its left or right.
struct Cable {
  int ghost = 0;  // -1 left, +1 right, 0 none
  std::size_t width() const { return ghost == 0 ? 1 : 2; }
  std::size_t host_offset() const { return ghost == -1 ? 1 : 0; }
};

class PlatSweep {
 public:
  PlatSweep() {
    b_.cap(0, detail::StrandKind::knot);
    b_.cap(2, detail::StrandKind::knot);
    cables_.assign(4, Cable{});
  }

  std::size_t offset(std::size_t c) const {
    std::size_t o = 0;
    for (std::size_t i = 0; i < c; ++i) o += cables_[i].width();
    return o;
  }

  // Cable c passes cable c + 1; every strand of one goes over every strand of the other.
  void cross(std::size_t c, bool left_over) {
    const std::size_t start = offset(c);
    const std::size_t m = cables_[c].width(), n = cables_[c + 1].width();
    for (std::size_t i = m; i-- > 0;)
      for (std::size_t j = 0; j < n; ++j) b_.cross(start + i + j, left_over);
    std::swap(cables_[c], cables_[c + 1]);
  }

  void insert_upper(const TunnelSpec& t) {
    b_.cap(offset(t.first) + cables_[t.first].width(), detail::StrandKind::tunnel);
    cables_[t.first].ghost = +1;
    cables_[t.second].ghost = -1;
  }

  void insert_lower(const TunnelSpec& t) {
    const std::size_t q = t.first;
    b_.split(offset(q) + cables_[q].host_offset(), true);
    std::size_t branch = offset(q) + cables_[q].host_offset() + 1;
    // the branch end now sits inside cable q's span; cable q + 1 starts one later
    const std::size_t host2 = offset(q + 1) + 1 + cables_[q + 1].host_offset();
    b_.split(host2, false);
    // host2 now holds the second branch
    while (branch + 1 < host2) {
      b_.intersect(branch, false);
      ++branch;
    }
    b_.cup(branch);
  }

  void merge_ghosts() {
    for (std::size_t c = cables_.size(); c-- > 0;) {
      if (cables_[c].ghost == 0) continue;
      b_.merge(offset(c));
      cables_[c].ghost = 0;
    }
  }

  void close(bool odd_terms) {
    if (odd_terms) {
      b_.cup(0);
      b_.cup(0);
    } else {
      b_.cup(1);
      b_.cup(0);
    }
  }

  PlanarDiagram finish() const { return b_.finish(); }

 private:
  detail::LevelBuilder b_;
  std::vector<Cable> cables_;
};

}  // namespace

Fraction cf_to_fraction(const ContinuedFraction& cf) {
  check_terms(cf);
  std::int64_t p = cf.terms.back(), q = 1;
  for (std::size_t i = cf.terms.size() - 1; i-- > 0;) {
    if (p == 0) throw InvalidInput("continued fraction has a zero tail (division by zero)");
    const std::int64_t np = checked_mul_add(cf.terms[i], p, q);
    q = p;
    p = np;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return {p, q};
}

namespace detail {

PlanarDiagram build_plat(const ContinuedFraction& cf, const std::optional<TunnelSpec>& upper,
                         const std::optional<TunnelSpec>& lower) {
  PlatSweep sweep;
  const bool upper_commutes = upper && upper->first == 1 && upper->second == 2;
  if (upper && !upper_commutes) sweep.insert_upper(*upper);
  for (std::size_t j = 0; j < cf.terms.size(); ++j) {
    const long a = cf.terms[j];
    const bool middle = j % 2 == 0;
    const bool right_handed = middle == (a > 0);
    const std::size_t count = static_cast<std::size_t>(a < 0 ? -a : a);
    for (std::size_t k = 0; k < count; ++k) sweep.cross(middle ? 1 : 0, right_handed);
    // the arc joining the middle strands rides through their own twist region
    if (j == 0 && upper_commutes) sweep.insert_upper(*upper);
  }
  if (lower) sweep.insert_lower(*lower);
  sweep.merge_ghosts();
  sweep.close(cf.terms.size() % 2 == 1);
  PlanarDiagram d = sweep.finish();
  d.plat = cf;
  return d;
}

PlanarDiagram build_unknot_with_chords(std::size_t chords) {
  LevelBuilder b;
  b.cap(0, StrandKind::knot);
  for (std::size_t i = 0; i < chords; ++i) {
    b.split(0, true);
    b.split(2, false);
    b.cup(1);
  }
  b.cup(0);
  return b.finish();
}

}  // namespace detail

PlanarDiagram two_bridge_plat(const ContinuedFraction& cf) {
  check_terms(cf);
  return detail::build_plat(cf, std::nullopt, std::nullopt);
}

}  // namespace unistab
