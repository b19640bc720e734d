#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace unistab {

/// x_gen^exp with exp = +1 or -1; generators are 0-based internally.
struct Letter {
  std::uint32_t gen = 0;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
/// Cancels adjacent x x^-1 pairs.
Word free_reduce(const Word& w);
/// Free reduction followed by cancellation across the ends.
Word cyclic_reduce(const Word& w);

struct GroupPresentation {
  std::uint32_t generators = 0;
  std::vector<Word> relators;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Text form: a "gens N" line, then one relator per line. Generators print
/// as g1..gN, inverses in upper case (G3), the empty word as "e".
std::string emit_presentation(const GroupPresentation& p);
/// Accepts the form above; tokens may also be written x3, x3^-1, g3^-1,
/// and "1" is accepted for the empty word. Throws ParseError.
GroupPresentation parse_presentation(std::string_view text);

std::string word_to_string(const Word& w);

}  // namespace unistab
