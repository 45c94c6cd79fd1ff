#pragma once

// Text form of alphabets, words and presentations.
//
//   alphabet     := name ("," name)*          name = one lowercase ASCII letter
//   word         := item* | "1"
//   item         := letter ("^" ["-"|"+"] digits)?
//   presentation := alphabet "|" word
//
// Uppercase letters denote inverses. Whitespace between items is ignored.

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "magnus/solver.hpp"

namespace magnus {

namespace detail {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

}  // namespace detail

/// `base` is added to every reported offset (for substrings of a larger input).
inline Word parse_word(std::string_view text, const Alphabet& alphabet, std::size_t base = 0) {
  std::vector<Letter> raw;
  std::size_t i = detail::skip_space(text, 0);
  if (i < text.size() && text[i] == '1' && detail::skip_space(text, i + 1) == text.size()) return Word{};
  while (i < text.size()) {
    const char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw SyntaxError(std::string("unexpected character '") + c + "'", base + i);
    }
    const std::size_t at = i;
    const std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    const auto g = alphabet.find(name);
    if (!g) throw UnknownGenerator("'" + name + "'", base + at);
    int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    long count = 1;
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, count);
      if (ec != std::errc{} || ptr == first) throw SyntaxError("expected an integer exponent", base + i);
      if (count == 0) throw SyntaxError("zero exponent", base + i);
      if (count > static_cast<long>(kDefaultMaxWordLength)) throw SyntaxError("exponent too large", base + i);
      i += static_cast<std::size_t>(ptr - first);
      if (negative) sign = -sign;
    }
    for (long k = 0; k < count; ++k) raw.push_back({*g, static_cast<std::int8_t>(sign)});
    i = detail::skip_space(text, i);
  }
  return Word::reduce(raw);
}

inline Alphabet parse_alphabet(std::string_view text, std::size_t base = 0) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (true) {
    i = detail::skip_space(text, i);
    if (i >= text.size() || !std::islower(static_cast<unsigned char>(text[i]))) {
      throw SyntaxError("expected a lowercase generator name", base + i);
    }
    std::string name(1, text[i]);
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw SyntaxError("duplicate generator '" + name + "'", base + i);
    }
    names.push_back(std::move(name));
    i = detail::skip_space(text, i + 1);
    if (i == text.size()) break;
    if (text[i] != ',') throw SyntaxError("expected ','", base + i);
    ++i;
  }
  return Alphabet(std::move(names));
}

inline OneRelatorPresentation parse_presentation(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw SyntaxError("missing '|'", text.size());
  Alphabet alphabet = parse_alphabet(text.substr(0, bar));
  const Word relator = parse_word(text.substr(bar + 1), alphabet, bar + 1);
  return make_presentation(std::move(alphabet), relator);
}

/// Comma-separated generator names, e.g. "a,c". Empty text is the empty set.
inline std::set<Generator> parse_subset(std::string_view text, const Alphabet& alphabet) {
  std::set<Generator> out;
  std::size_t i = detail::skip_space(text, 0);
  if (i == text.size()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto a = detail::skip_space(text, start);
    std::size_t b = end;
    while (b > a && detail::is_space(text[b - 1])) --b;
    if (a == b) throw SyntaxError("empty generator name", a);
    const std::string name(text.substr(a, b - a));
    const auto g = alphabet.find(name);
    if (!g) throw UnknownGenerator("'" + name + "'", a);
    out.insert(*g);
    start = end + 1;
  }
  return out;
}

inline bool single_letter_names(const Alphabet& alphabet) {
  for (const auto& n : alphabet.names()) {
    if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0]))) return false;
  }
  return true;
}

/// Single-letter alphabets print compactly ("a^2B"); others print
/// space-separated tokens ("b_1 b_0^-2"). The empty word prints as "1".
inline std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  const bool compact = single_letter_names(alphabet);
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    const Letter l = w[i];
    const std::string& name = alphabet.name(l.gen);
    if (compact) {
      os << (l.sign > 0 ? name : std::string(1, static_cast<char>(std::toupper(name[0]))));
      if (run > 1) os << '^' << run;
    } else {
      if (i > 0) os << ' ';
      os << name;
      const long e = run * l.sign;
      if (e != 1) os << '^' << e;
    }
    i = j;
  }
  return os.str();
}

inline std::string format_presentation(const OneRelatorPresentation& p) {
  std::string s;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    if (i) s += ',';
    s += p.alphabet().names()[i];
  }
  return s + " | " + format_word(p.relator(), p.alphabet());
}

inline std::string case_name(const BreakdownStep& step) {
  if (std::holds_alternative<BaseFree>(step.data)) return "free";
  if (std::holds_alternative<BaseSingleGen>(step.data)) return "single-generator";
  if (step.zero_case()) return "zero";
  return "nonzero";
}

inline nlohmann::json hierarchy_json(const HierarchyNode& node) {
  const auto& p = node.presentation;
  nlohmann::json j;
  j["case"] = case_name(node.step);
  j["alphabet"] = p.alphabet().names();
  j["relator"] = format_word(p.relator(), p.alphabet());
  j["level"] = node.level;
  if (!node.free_generators.empty()) j["free"] = node.free_generators;
  if (const auto* zc = node.step.zero_case()) {
    j["stable"] = p.alphabet().name(zc->stable);
    nlohmann::json ranges = nlohmann::json::object();
    for (std::uint32_t g = 0; g < zc->ranges.size(); ++g) {
      if (zc->ranges[g]) ranges[p.alphabet().name(Generator{g})] = {zc->ranges[g]->lo, zc->ranges[g]->hi};
    }
    j["ranges"] = ranges;
  } else if (const auto* e = node.step.embedding()) {
    j["root_of"] = p.alphabet().name(e->src_b);
    j["alpha"] = e->alpha;
    j["beta"] = e->beta;
  }
  j["children"] = nlohmann::json::array();
  for (const auto& c : node.children) j["children"].push_back(hierarchy_json(c));
  return j;
}

inline void print_hierarchy(std::ostream& os, const HierarchyNode& node, int indent = 0) {
  const auto& p = node.presentation;
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << case_name(node.step) << "  <"
     << format_presentation(p) << ">";
  if (!node.free_generators.empty()) {
    os << "  free:";
    for (const auto& n : node.free_generators) os << ' ' << n;
  }
  if (const auto* zc = node.step.zero_case()) {
    os << "  stable " << p.alphabet().name(zc->stable);
    for (std::uint32_t g = 0; g < zc->ranges.size(); ++g) {
      if (zc->ranges[g]) {
        os << "  " << p.alphabet().name(Generator{g}) << '[' << zc->ranges[g]->lo << ',' << zc->ranges[g]->hi << ']';
      }
    }
  } else if (const auto* e = node.step.embedding()) {
    os << "  " << p.alphabet().name(e->src_b) << " = " << e->image.alphabet().name(e->x) << '^' << e->alpha;
  }
  os << '\n';
  for (const auto& c : node.children) print_hierarchy(os, c, indent + 1);
}

}  // namespace magnus
