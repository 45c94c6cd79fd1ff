#pragma once

#include <cstdlib>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "magnus/free_words.hpp"

namespace magnus {

/// ⟨alphabet | relator⟩ with a nonempty cyclically reduced relator over the alphabet.
class OneRelatorPresentation {
 public:
  OneRelatorPresentation(Alphabet alphabet, Word relator)
      : alphabet_(std::move(alphabet)), relator_(std::move(relator)) {
    if (relator_.empty()) throw EmptyRelator();
    if (!is_cyclically_reduced(relator_)) throw PreconditionViolated("relator is not cyclically reduced");
    require_over(alphabet_, relator_);
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& relator() const noexcept { return relator_; }
  std::size_t rank() const noexcept { return alphabet_.size(); }

  friend bool operator==(const OneRelatorPresentation& a, const OneRelatorPresentation& b) {
    return a.alphabet_ == b.alphabet_ && a.relator_ == b.relator_;
  }

 private:
  Alphabet alphabet_;
  Word relator_;
};

/// Normalizes `relator_input` to its cyclically reduced core; conjugation does
/// not change the normal closure.
inline OneRelatorPresentation make_presentation(Alphabet alphabet, const Word& relator_input) {
  for (Letter l : relator_input) {
    if (!alphabet.contains(l.gen)) {
      throw UnknownGenerator("relator uses generator id " + std::to_string(l.gen.id));
    }
  }
  if (relator_input.empty()) throw EmptyRelator();
  return OneRelatorPresentation(std::move(alphabet), cyclic_reduce(relator_input).core);
}

struct FreeFactorSplit {
  std::vector<Generator> active;     // support of the relator
  std::vector<Generator> free_part;  // generators absent from the relator
};

inline FreeFactorSplit split_free_factor(const OneRelatorPresentation& p) {
  const auto used = support(p.relator());
  FreeFactorSplit split;
  for (Generator g : p.alphabet().generators()) {
    (used.count(g) ? split.active : split.free_part).push_back(g);
  }
  return split;
}

struct AbelianizationData {
  std::vector<long> exponent_vector;
  long gcd = 0;

  /// Necessary condition for w ∈ ncl(r): its exponent vector is an integer
  /// multiple of the relator's.
  bool admits(std::span<const long> word_vector) const {
    std::optional<long> scale;
    const std::size_t n = std::max(exponent_vector.size(), word_vector.size());
    for (std::size_t i = 0; i < n; ++i) {
      const long r = i < exponent_vector.size() ? exponent_vector[i] : 0;
      const long w = i < word_vector.size() ? word_vector[i] : 0;
      if (r == 0) {
        if (w != 0) return false;
        continue;
      }
      if (w % r != 0) return false;
      if (!scale) scale = w / r;
      if (*scale != w / r) return false;
    }
    return true;
  }
};

inline std::vector<long> exponent_vector(const Word& w, std::size_t rank) {
  std::vector<long> v(std::max(rank, id_bound(w)), 0);
  for (Letter l : w) v[l.gen.id] += l.sign;
  return v;
}

inline AbelianizationData abelianization(const OneRelatorPresentation& p) {
  AbelianizationData data;
  data.exponent_vector = exponent_vector(p.relator(), p.rank());
  for (long e : data.exponent_vector) data.gcd = std::gcd(data.gcd, std::labs(e));
  return data;
}

/// Identifies presentations up to cyclic permutation and inversion of the
/// relator and bijective renaming of generators.
struct CanonicalKey {
  std::size_t rank = 0;
  std::vector<std::uint32_t> code;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

namespace detail {

// Renames generators in order of first appearance; this is the least
// encoding over all renamings for a fixed letter sequence.
inline std::vector<std::uint32_t> first_appearance_code(std::span<const Letter> seq, std::size_t rotation) {
  std::vector<std::uint32_t> code;
  code.reserve(seq.size());
  std::unordered_map<std::uint32_t, std::uint32_t> rename;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Letter l = seq[(i + rotation) % seq.size()];
    auto [it, fresh] = rename.emplace(l.gen.id, static_cast<std::uint32_t>(rename.size()));
    code.push_back(2 * it->second + (l.sign < 0 ? 1u : 0u));
  }
  return code;
}

}  // namespace detail

inline CanonicalKey canonical_key(const OneRelatorPresentation& p) {
  CanonicalKey key{p.rank(), {}};
  const Word inv = p.relator().inverse();
  bool first = true;
  for (const Word* w : {&p.relator(), &inv}) {
    for (std::size_t rot = 0; rot < w->size(); ++rot) {
      auto code = detail::first_appearance_code(w->letters(), rot);
      if (first || code < key.code) {
        key.code = std::move(code);
        first = false;
      }
    }
  }
  return key;
}

/// Restriction of a presentation to the relator's support, with id maps.
struct ActiveFactor {
  OneRelatorPresentation core;
  std::vector<Generator> to_parent;                  // core id -> parent id
  std::vector<std::optional<Generator>> from_parent;  // parent id -> core id
};

inline ActiveFactor active_factor(const OneRelatorPresentation& p) {
  const auto split = split_free_factor(p);
  std::vector<std::string> names;
  std::vector<std::optional<Generator>> from(p.rank());
  for (std::uint32_t i = 0; i < split.active.size(); ++i) {
    names.push_back(p.alphabet().name(split.active[i]));
    from[split.active[i].id] = Generator{i};
  }
  std::vector<Letter> rel;
  for (Letter l : p.relator()) rel.push_back({*from[l.gen.id], l.sign});
  return ActiveFactor{OneRelatorPresentation(Alphabet(std::move(names)), Word::reduce(rel)), split.active,
                      std::move(from)};
}

}  // namespace magnus
