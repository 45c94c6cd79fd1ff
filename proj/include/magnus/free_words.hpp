#pragma once

// Free group words: canonical (freely reduced) letter sequences over
// integer generator ids, plus the alphabet that names those ids.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "magnus/errors.hpp"

namespace magnus {

inline constexpr std::size_t kDefaultMaxWordLength = std::size_t{1} << 20;

struct Generator {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Generator, Generator) = default;
};

struct Letter {
  Generator gen;
  std::int8_t sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(Letter other) const { return gen == other.gen && sign == -other.sign; }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

constexpr Letter pos(std::uint32_t id) { return {Generator{id}, 1}; }
constexpr Letter neg(std::uint32_t id) { return {Generator{id}, -1}; }

/// An element of a free group, always stored freely reduced.
class Word {
 public:
  Word() = default;

  /// Reduces `raw`; throws ResourceExhausted if the reduced word exceeds `max_len`.
  static Word reduce(std::span<const Letter> raw, std::size_t max_len = kDefaultMaxWordLength) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) push_reduced(out, l);
    check_length(out.size(), max_len);
    Word w;
    w.letters_ = std::move(out);
    return w;
  }

  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }

  static Word letter(Generator g, int sign = 1) {
    Word w;
    w.letters_.push_back({g, static_cast<std::int8_t>(sign < 0 ? -1 : 1)});
    return w;
  }

  static Word power(Generator g, long exponent, std::size_t max_len = kDefaultMaxWordLength) {
    const auto n = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
    check_length(n, max_len);
    Word w;
    w.letters_.assign(n, Letter{g, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)});
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
    return w;
  }

  /// Sub-range [pos, pos+len); a factor of a reduced word is reduced.
  Word subword(std::size_t pos, std::size_t len) const {
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
  }

  /// In-place right multiplication with free cancellation.
  Word& append(const Word& other, std::size_t max_len = kDefaultMaxWordLength) {
    for (Letter l : other.letters_) push_reduced(letters_, l);
    check_length(letters_.size(), max_len);
    return *this;
  }

  Word& append(Letter l) {
    push_reduced(letters_, l);
    return *this;
  }

  friend Word operator*(const Word& u, const Word& v) {
    Word w = u;
    w.append(v);
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  static void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }

  static void check_length(std::size_t n, std::size_t max_len) {
    if (n > max_len) {
      throw ResourceExhausted("word length " + std::to_string(n) + " exceeds limit " +
                              std::to_string(max_len));
    }
  }

  std::vector<Letter> letters_;
};

/// Ordered list of distinct generator names; position is the generator id.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw PreconditionViolated("empty generator name");
      if (!index_.emplace(names_[i], i).second) {
        throw PreconditionViolated("duplicate generator name '" + names_[i] + "'");
      }
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Generator g) const { return names_.at(g.id); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Generator> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return Generator{it->second};
  }

  bool contains(Generator g) const noexcept { return g.id < names_.size(); }

  std::vector<Generator> generators() const {
    std::vector<Generator> gs;
    for (std::uint32_t i = 0; i < names_.size(); ++i) gs.push_back(Generator{i});
    return gs;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Throws UnknownGenerator if `w` uses an id outside `alphabet`.
inline void require_over(const Alphabet& alphabet, const Word& w) {
  for (Letter l : w) {
    if (!alphabet.contains(l.gen)) {
      throw UnknownGenerator("generator id " + std::to_string(l.gen.id) + " not in alphabet of size " +
                             std::to_string(alphabet.size()));
    }
  }
}

inline Word reduce(std::span<const Letter> raw) { return Word::reduce(raw); }

inline Word multiply(const Word& u, const Word& v) { return u * v; }

inline Word multiply(const Alphabet& alphabet, const Word& u, const Word& v) {
  for (const Word* w : {&u, &v}) {
    for (Letter l : *w) {
      if (!alphabet.contains(l.gen)) throw AlphabetMismatch("operand uses a generator outside the alphabet");
    }
  }
  return u * v;
}

inline Word invert(const Word& u) { return u.inverse(); }

struct CyclicDecomposition {
  Word conjugator;
  Word core;
};

/// w = conjugator · core · conjugator⁻¹ with core cyclically reduced.
inline CyclicDecomposition cyclic_reduce(const Word& w) {
  const std::size_t n = w.size();
  std::size_t k = 0;
  while (2 * k + 1 < n && w[k].cancels(w[n - 1 - k])) ++k;
  return {w.subword(0, k), w.subword(k, n - 2 * k)};
}

inline bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || !w.front().cancels(w.back());
}

namespace detail {

inline bool is_rotation_of(std::span<const Letter> u, std::span<const Letter> v) {
  const std::size_t n = u.size();
  if (n != v.size()) return false;
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = u[(i + shift) % n] == v[i];
    if (same) return true;
  }
  return false;
}

}  // namespace detail

/// True iff v is a cyclic permutation of u or of u⁻¹ (inputs cyclically reduced).
inline bool cyclically_equal_up_to_inversion(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (detail::is_rotation_of(u.letters(), v.letters())) return true;
  const Word ui = u.inverse();
  return detail::is_rotation_of(ui.letters(), v.letters());
}

inline long exponent_sum(const Word& w, Generator g) {
  long s = 0;
  for (Letter l : w) {
    if (l.gen == g) s += l.sign;
  }
  return s;
}

inline std::set<Generator> support(const Word& w) {
  std::set<Generator> gs;
  for (Letter l : w) gs.insert(l.gen);
  return gs;
}

/// Largest id used plus one (0 for the empty word).
inline std::size_t id_bound(const Word& w) {
  std::size_t m = 0;
  for (Letter l : w) m = std::max<std::size_t>(m, l.gen.id + 1);
  return m;
}

/// Image of `w` under a letter substitution g ↦ images[g.id].
inline Word substitute(const Word& w, std::span<const Word> images,
                       std::size_t max_len = kDefaultMaxWordLength) {
  Word out;
  for (Letter l : w) {
    const Word& img = images[l.gen.id];
    out.append(l.sign > 0 ? img : img.inverse(), max_len);
  }
  return out;
}

}  // namespace magnus

template <>
struct std::hash<magnus::Word> {
  std::size_t operator()(const magnus::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (magnus::Letter l : w) {
      h ^= (static_cast<std::size_t>(l.gen.id) << 1) | (l.sign < 0 ? 1u : 0u);
      h *= 1099511628211ull;
    }
    return h;
  }
};
