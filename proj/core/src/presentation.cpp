#include "unistab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "text_scan.hpp"
#include "unistab/errors.hpp"

namespace unistab {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].gen == r[hi - 1].gen && r[lo].exp == -r[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].exp > 0 ? 'g' : 'G';
    out += std::to_string(w[i].gen + 1);
  }
  return out;
}

std::string emit_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens " << p.generators << '\n';
  for (const auto& r : p.relators) os << word_to_string(r) << '\n';
  return os.str();
}

namespace {

std::uint32_t parse_index(std::string_view s, std::size_t line, std::size_t col) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw ParseError(line, col, "bad generator index '" + std::string(s) + "'");
  return v - 1;
}

Letter parse_letter(std::string_view tok, std::size_t line, std::size_t col) {
  const char c = tok.front();
  if (c != 'g' && c != 'G' && c != 'x' && c != 'X')
    throw ParseError(line, col, "expected a generator like g3 or G3, got '" + std::string(tok) + "'");
  int exp = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
  std::string_view body = tok.substr(1);
  if (const auto caret = body.find('^'); caret != std::string_view::npos) {
    const std::string_view e = body.substr(caret + 1);
    if (e == "-1")
      exp = -exp;
    else if (e != "1")
      throw ParseError(line, col, "exponent must be 1 or -1, got '" + std::string(e) + "'");
    body = body.substr(0, caret);
  }
  return {parse_index(body, line, col + 1), exp};
}

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
  GroupPresentation p;
  bool have_header = false;
  for (const auto& line : detail::scan_lines(text)) {
    const auto& toks = line.tokens;
    if (!have_header) {
      if (toks[0].text != "gens" || toks.size() != 2)
        throw ParseError(line.number, toks[0].column, "expected 'gens N' header");
      std::uint32_t n = 0;
      const auto& t = toks[1].text;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
      if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(line.number, toks[1].column, "bad generator count '" + std::string(t) + "'");
      p.generators = n;
      have_header = true;
      continue;
    }
    Word w;
    if (toks.size() == 1 && (toks[0].text == "e" || toks[0].text == "1")) {
      p.relators.push_back(w);
      continue;
    }
    for (const auto& tok : toks) {
      const Letter l = parse_letter(tok.text, line.number, tok.column);
      if (l.gen >= p.generators)
        throw ParseError(line.number, tok.column,
                         "generator " + std::to_string(l.gen + 1) + " out of range (gens " +
                             std::to_string(p.generators) + ")");
      w.push_back(l);
    }
    p.relators.push_back(std::move(w));
  }
  if (!have_header) throw ParseError(1, 1, "missing 'gens N' header");
  return p;
}

}  // namespace unistab
