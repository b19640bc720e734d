#include "unistab/tietze.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace unistab {
namespace {

Word least_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

std::size_t total_length(const std::vector<Word>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += r.size();
  return n;
}

// Drops empty relators and duplicates after cyclic reduction.
bool tidy(std::vector<Word>& rs) {
  bool changed = false;
  std::set<Word> seen;
  std::vector<Word> out;
  for (auto& r : rs) {
    Word c = cyclic_reduce(r);
    if (c.size() != r.size()) changed = true;
    if (c.empty()) {
      changed = true;
      continue;
    }
    if (!seen.insert(canonical_relator(c)).second) {
      changed = true;
      continue;
    }
    out.push_back(std::move(c));
  }
  rs = std::move(out);
  return changed;
}

struct Elimination {
  std::size_t relator;
  std::uint32_t gen;
  Word replacement;
};

// Finds a generator occurring exactly once in some relator r = u x^e v,
// which gives x = (v u)^-e. Prefers the shortest replacement.
std::optional<Elimination> find_elimination(const std::vector<Word>& rs, std::uint32_t gens,
                                            std::size_t length_cap) {
  const std::size_t current = total_length(rs);
  std::optional<Elimination> best;
  std::size_t best_growth = 0;
  for (std::size_t ri = 0; ri < rs.size(); ++ri) {
    const Word& r = rs[ri];
    std::vector<std::size_t> occurrences(gens, 0);
    for (const auto& l : r) ++occurrences[l.gen];
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
      const Letter x = r[pos];
      if (occurrences[x.gen] != 1) continue;
      Word vu(r.begin() + static_cast<std::ptrdiff_t>(pos + 1), r.end());
      vu.insert(vu.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
      Word repl = x.exp > 0 ? inverse(vu) : vu;
      std::size_t uses = 0;
      for (std::size_t rj = 0; rj < rs.size(); ++rj)
        if (rj != ri)
          for (const auto& l : rs[rj]) uses += l.gen == x.gen;
      const std::size_t after = current - r.size() + uses * (repl.size() > 0 ? repl.size() - 1 : 0);
      const std::size_t growth = after > current ? after - current : 0;
      if (after > length_cap) continue;
      if (!best || growth < best_growth ||
          (growth == best_growth && repl.size() < best->replacement.size())) {
        best = Elimination{ri, x.gen, std::move(repl)};
        best_growth = growth;
      }
    }
  }
  return best;
}

void apply(std::vector<Word>& rs, std::uint32_t& gens, const Elimination& e) {
  rs.erase(rs.begin() + static_cast<std::ptrdiff_t>(e.relator));
  const Word repl_inv = inverse(e.replacement);
  for (auto& r : rs) {
    Word out;
    for (const auto& l : r) {
      if (l.gen != e.gen) {
        out.push_back(l);
        continue;
      }
      const Word& sub = l.exp > 0 ? e.replacement : repl_inv;
      out.insert(out.end(), sub.begin(), sub.end());
    }
    r = free_reduce(out);
  }
  // close the gap in the numbering
  for (auto& r : rs)
    for (auto& l : r)
      if (l.gen > e.gen) --l.gen;
  --gens;
}

}  // namespace

Word canonical_relator(const Word& w) {
  Word a = least_rotation(w);
  Word b = least_rotation(inverse(w));
  return std::min(a, b);
}

GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeOptions& opts) {
  std::vector<Word> rs = p.relators;
  std::uint32_t gens = p.generators;
  const std::size_t cap = std::max<std::size_t>(total_length(rs), 1) * opts.length_factor;
  std::size_t moves = 0;
  tidy(rs);
  while (moves < opts.max_moves) {
    const auto e = find_elimination(rs, gens, cap);
    if (!e) break;
    apply(rs, gens, *e);
    ++moves;
    tidy(rs);
  }
  return {gens, rs};
}

}  // namespace unistab
