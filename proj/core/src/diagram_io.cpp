#include <charconv>
#include <sstream>

#include "text_scan.hpp"
#include "unistab/diagram.hpp"
#include "unistab/errors.hpp"

namespace unistab {
namespace {

using detail::Line;
using detail::Token;

EdgeLabel parse_label(const Line& line, const Token& tok) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size() || value == 0 ||
      value > 0xffffffffUL)
    throw ParseError(line.number, tok.column,
                     "expected a positive edge label, got '" + std::string(tok.text) + "'");
  return static_cast<EdgeLabel>(value);
}

long parse_integer(const Line& line, const Token& tok) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
    throw ParseError(line.number, tok.column,
                     "expected an integer, got '" + std::string(tok.text) + "'");
  return value;
}

VertexSlot parse_vertex_slot(const Line& line, const Token& tok) {
  std::string_view t = tok.text;
  char sign = 0;
  if (!t.empty() && (t.back() == '+' || t.back() == '-')) {
    sign = t.back();
    t.remove_suffix(1);
  } else if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
    sign = t.front();
    t.remove_prefix(1);
  }
  if (sign == 0)
    throw ParseError(line.number, tok.column,
                     "vertex slot '" + std::string(tok.text) + "' needs a + or - direction");
  return {parse_label(line, Token{t, tok.column}), sign == '+'};
}

std::array<EdgeLabel, 4> parse_four(const Line& line) {
  if (line.tokens.size() != 5) {
    const auto& at = line.tokens.size() > 5 ? line.tokens[5] : line.tokens.back();
    throw ParseError(line.number, at.column,
                     "expected 4 labels, got " + std::to_string(line.tokens.size() - 1));
  }
  std::array<EdgeLabel, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = parse_label(line, line.tokens[i + 1]);
  return out;
}

}  // namespace

PlanarDiagram parse_diagram(const std::string& text) {
  PlanarDiagram d;
  for (const auto& line : detail::scan_lines(text)) {
    const auto& head = line.tokens.front();
    if (head.text == "Xp" || head.text == "Xm") {
      d.crossings.push_back({head.text == "Xp" ? CrossingSign::positive : CrossingSign::negative,
                             parse_four(line)});
    } else if (head.text == "I") {
      d.intersections.push_back({parse_four(line)});
    } else if (head.text == "V") {
      if (line.tokens.size() != 4) {
        const auto& at = line.tokens.size() > 4 ? line.tokens[4] : line.tokens.back();
        throw ParseError(line.number, at.column,
                         "expected 3 vertex slots, got " + std::to_string(line.tokens.size() - 1));
      }
      TrivalentVertex v;
      for (std::size_t i = 0; i < 3; ++i) v.slots[i] = parse_vertex_slot(line, line.tokens[i + 1]);
      d.vertices.push_back(v);
    } else if (head.text == "U") {
      if (line.tokens.size() != 2)
        throw ParseError(line.number, head.column, "expected 'U <count>'");
      const long n = parse_integer(line, line.tokens[1]);
      if (n < 0)
        throw ParseError(line.number, line.tokens[1].column, "free loop count must be >= 0");
      d.free_loops += static_cast<std::uint32_t>(n);
    } else if (head.text == "P") {
      if (line.tokens.size() < 2)
        throw ParseError(line.number, head.column, "expected 'P <term> ...'");
      if (d.plat) throw ParseError(line.number, head.column, "duplicate plat line");
      ContinuedFraction cf;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const long t = parse_integer(line, line.tokens[i]);
        if (t == 0) throw ParseError(line.number, line.tokens[i].column, "zero continued-fraction term");
        cf.terms.push_back(t);
      }
      d.plat = std::move(cf);
    } else {
      throw ParseError(line.number, head.column,
                       "unknown item '" + std::string(head.text) + "' (expected Xp, Xm, V, U, I or P)");
    }
  }
  return d;
}

std::string emit_diagram(const PlanarDiagram& d) {
  std::ostringstream out;
  if (d.plat) {
    out << 'P';
    for (long t : d.plat->terms) out << ' ' << t;
    out << '\n';
  }
  for (const auto& c : d.crossings) {
    out << (c.sign == CrossingSign::positive ? "Xp" : "Xm");
    for (auto s : c.slots) out << ' ' << s;
    out << '\n';
  }
  for (const auto& v : d.vertices) {
    out << 'V';
    for (const auto& s : v.slots) out << ' ' << s.edge << (s.outgoing ? '+' : '-');
    out << '\n';
  }
  for (const auto& x : d.intersections) {
    out << 'I';
    for (auto s : x.slots) out << ' ' << s;
    out << '\n';
  }
  if (d.free_loops > 0) out << "U " << d.free_loops << '\n';
  return out.str();
}

}  // namespace unistab
