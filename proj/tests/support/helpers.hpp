#pragma once

#include <random>
#include <string>
#include <vector>

#include "magnus/text.hpp"

namespace magnus::testing {

inline const Alphabet& abcd() {
  static const Alphabet a({"a", "b", "c", "d"});
  return a;
}

/// a, b, c, ... of the given rank.
inline Alphabet letters(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(names);
}

/// Word in text form over a, b, c, d (ids 0..3).
inline Word W(const std::string& text) { return parse_word(text, abcd()); }

inline OneRelatorPresentation P(const std::string& text) { return parse_presentation(text); }

inline std::string S(const Word& w) { return format_word(w, abcd()); }

/// Raw (possibly unreduced) letter sequence of the given length.
inline std::vector<Letter> random_letters(std::mt19937_64& rng, std::size_t rank, std::size_t len) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back({Generator{static_cast<std::uint32_t>(rng() % rank)}, static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  return Word::reduce(random_letters(rng, rank, rng() % (max_len + 1)));
}

/// Random element of the normal closure of r: a product of conjugates.
inline Word random_consequence(std::mt19937_64& rng, const Word& r, std::size_t rank, std::size_t factors,
                               std::size_t conj_len) {
  Word out;
  for (std::size_t i = 0; i < factors; ++i) {
    const Word c = random_word(rng, rank, conj_len);
    out = out * c * (rng() % 2 ? r : r.inverse()) * c.inverse();
  }
  return out;
}

}  // namespace magnus::testing
