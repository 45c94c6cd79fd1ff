#pragma once

// One step of the Magnus hierarchy.
//
// Zero case: σ_t(r) = 0. Every other letter x at t-height i becomes the
// subscripted generator x_i = t^i x t^{-i}; the group is an HNN extension of
// L = ⟨x_i, min_x ≤ i ≤ max_x | r'⟩ with stable letter t, t x_i t⁻¹ = x_{i+1},
// between the lower subgroup ⟨x_i : i < max_x⟩ and the upper ⟨x_i : i > min_x⟩.
//
// Non-zero case: adjoin an α-th root x of b and put y = a x^β, i.e.
// a ↦ y x^{-β}, b ↦ x^α. The image relator has zero exponent sum in x.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "magnus/presentations.hpp"

namespace magnus {

struct SubscriptedGen {
  Generator base;
  int subscript = 0;

  friend constexpr auto operator<=>(SubscriptedGen, SubscriptedGen) = default;
};

struct SubscriptedLetter {
  SubscriptedGen gen;
  std::int8_t sign = 1;

  friend constexpr auto operator<=>(SubscriptedLetter, SubscriptedLetter) = default;
};

struct SubscriptRange {
  int lo = 0;
  int hi = 0;

  friend constexpr bool operator==(SubscriptRange, SubscriptRange) = default;
};

inline std::string subscripted_name(const std::string& base, int subscript) {
  return base + "_" + std::to_string(subscript);
}

struct ZeroCaseData {
  Generator stable;
  Generator pivot;
  /// L: alphabet of every x_i with i inside x's range, relator r'.
  OneRelatorPresentation base;
  std::vector<SubscriptedGen> base_gens;             // base id -> (parent generator, subscript)
  std::vector<std::optional<SubscriptRange>> ranges;  // parent id -> range (none for t or unused)

  const Word& rewritten_relator() const noexcept { return base.relator(); }

  std::optional<Generator> base_id(Generator parent, int subscript) const {
    if (parent.id >= ranges.size() || !ranges[parent.id]) return std::nullopt;
    const auto r = *ranges[parent.id];
    if (subscript < r.lo || subscript > r.hi) return std::nullopt;
    return Generator{static_cast<std::uint32_t>(base_offsets[parent.id] + (subscript - r.lo))};
  }

  /// Lower associated subgroup generators: x_i with i < max_x.
  std::vector<bool> lower_mask() const { return mask([](int i, SubscriptRange r) { return i < r.hi; }); }
  /// Upper associated subgroup generators: x_i with i > min_x.
  std::vector<bool> upper_mask() const { return mask([](int i, SubscriptRange r) { return i > r.lo; }); }

  /// shift_map applied |delta| times: x_i ↦ x_{i+delta}. The word must lie
  /// over generators whose shifts stay in range.
  Word shift(const Word& w, int delta) const {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w) {
      const auto sg = base_gens.at(l.gen.id);
      const auto id = base_id(sg.base, sg.subscript + delta);
      if (!id) throw PreconditionViolated("shift leaves the subscript range");
      out.push_back({*id, l.sign});
    }
    return Word::reduce(out);
  }

  /// Substitutes x_i ↦ t^i x t^{-i}, producing a word over the parent alphabet.
  Word lift(const Word& w, std::size_t max_len = kDefaultMaxWordLength) const {
    Word out;
    for (Letter l : w) {
      const auto sg = base_gens.at(l.gen.id);
      out.append(Word::power(stable, sg.subscript), max_len);
      out.append(Letter{sg.base, l.sign});
      out.append(Word::power(stable, -sg.subscript), max_len);
    }
    return out;
  }

  std::vector<std::size_t> base_offsets;  // parent id -> base id of x_{min_x}

 private:
  template <class Pred>
  std::vector<bool> mask(Pred pred) const {
    std::vector<bool> m(base_gens.size(), false);
    for (std::size_t i = 0; i < base_gens.size(); ++i) {
      const auto sg = base_gens[i];
      m[i] = pred(sg.subscript, *ranges[sg.base.id]);
    }
    return m;
  }
};

struct EmbeddingData {
  Generator src_a;
  Generator src_b;
  long alpha = 0;  // σ_a(r)
  long beta = 0;   // σ_b(r)
  OneRelatorPresentation image;
  Generator x;
  Generator y;
  std::vector<Word> substitution;                  // parent id -> image word (ψ on generators)
  std::vector<std::optional<Generator>> carried;   // parent id -> image id for generators other than a, b

  /// ψ(w), freely reduced.
  Word translate(const Word& w, std::size_t max_len = kDefaultMaxWordLength) const {
    return substitute(w, substitution, max_len);
  }

  /// The unique u over the parent alphabet with ψ(u) = v as reduced words, if any.
  std::optional<Word> pull_back(const Word& v) const {
    std::vector<std::optional<Letter>> back(image.rank());
    for (std::uint32_t i = 0; i < carried.size(); ++i) {
      if (carried[i]) back[carried[i]->id] = Letter{Generator{i}, 1};
    }
    std::vector<Letter> out;
    long run = 0;  // accumulated x exponent since the last non-x letter
    std::optional<Letter> prev;
    auto flush = [&](std::optional<Letter> next) -> bool {
      long rem = run;
      if (prev && prev->gen == y && prev->sign > 0) rem += beta;   // a = y x^{-β} leaves x^{-β}
      if (next && next->gen == y && next->sign < 0) rem -= beta;   // a⁻¹ = x^{β} y⁻¹ brings x^{β}
      if (rem % alpha != 0) return false;
      const long m = rem / alpha;
      for (long k = 0; k < std::labs(m); ++k) out.push_back({src_b, static_cast<std::int8_t>(m < 0 ? -1 : 1)});
      run = 0;
      return true;
    };
    for (Letter l : v) {
      if (l.gen == x) {
        run += l.sign;
        continue;
      }
      if (!flush(l)) return std::nullopt;
      if (l.gen == y) {
        out.push_back({src_a, l.sign});
      } else {
        if (l.gen.id >= back.size() || !back[l.gen.id]) return std::nullopt;
        out.push_back({back[l.gen.id]->gen, l.sign});
      }
      prev = l;
    }
    if (!flush(std::nullopt)) return std::nullopt;
    Word u = Word::reduce(out);
    if (translate(u) != v) return std::nullopt;
    return u;
  }
};

struct BaseFree {};

struct BaseSingleGen {
  Generator gen;
  long exponent = 0;  // relator = gen^exponent
};

struct BreakdownStep {
  std::variant<BaseFree, BaseSingleGen, ZeroCaseData, EmbeddingData> data;

  bool is_base() const {
    return std::holds_alternative<BaseFree>(data) || std::holds_alternative<BaseSingleGen>(data);
  }
  const ZeroCaseData* zero_case() const { return std::get_if<ZeroCaseData>(&data); }
  const EmbeddingData* embedding() const { return std::get_if<EmbeddingData>(&data); }
};

/// Scans w keeping the t-height; non-t letters become subscripted letters.
/// Identity: w = image(letters under x_i ↦ t^i x t^{-i}) · t^{t_exp}.
struct SubscriptedWord {
  long t_exp = 0;
  std::vector<SubscriptedLetter> letters;
  int lo = 0;  // subscript range used by `letters` (meaningless when empty)
  int hi = 0;
};

inline SubscriptedWord rewrite_word_to_subscripted(const Word& w, Generator t) {
  SubscriptedWord out;
  long height = 0;
  bool first = true;
  for (Letter l : w) {
    if (l.gen == t) {
      height += l.sign;
      continue;
    }
    const SubscriptedLetter sl{{l.gen, static_cast<int>(height)}, l.sign};
    if (!out.letters.empty() && out.letters.back().gen == sl.gen && out.letters.back().sign == -sl.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(sl);
    }
    if (first) {
      out.lo = out.hi = static_cast<int>(height);
      first = false;
    } else {
      out.lo = std::min(out.lo, static_cast<int>(height));
      out.hi = std::max(out.hi, static_cast<int>(height));
    }
  }
  out.t_exp = height;
  return out;
}

inline ZeroCaseData rewrite_zero_case(const OneRelatorPresentation& p, Generator t) {
  const Word& r = p.relator();
  const auto supp = support(r);
  if (!supp.count(t)) throw PreconditionViolated("stable letter does not occur in the relator");
  if (exponent_sum(r, t) != 0) throw PreconditionViolated("stable letter has nonzero exponent sum");
  if (supp.size() < 2) throw PreconditionViolated("zero case needs at least two generators in the relator");

  const auto scanned = rewrite_word_to_subscripted(r, t);

  ZeroCaseData zc{t, t, p, {}, std::vector<std::optional<SubscriptRange>>(p.rank()), {}};
  for (const auto& sl : scanned.letters) {
    auto& range = zc.ranges[sl.gen.base.id];
    if (!range) {
      range = SubscriptRange{sl.gen.subscript, sl.gen.subscript};
    } else {
      range->lo = std::min(range->lo, sl.gen.subscript);
      range->hi = std::max(range->hi, sl.gen.subscript);
    }
  }
  for (Generator g : supp) {
    if (g != t) {
      zc.pivot = g;
      break;
    }
  }

  std::vector<std::string> names;
  zc.base_offsets.assign(p.rank(), 0);
  for (std::uint32_t g = 0; g < p.rank(); ++g) {
    zc.base_offsets[g] = zc.base_gens.size();
    if (!zc.ranges[g]) continue;
    for (int i = zc.ranges[g]->lo; i <= zc.ranges[g]->hi; ++i) {
      zc.base_gens.push_back({Generator{g}, i});
      names.push_back(subscripted_name(p.alphabet().name(Generator{g}), i));
    }
  }
  std::vector<Letter> rel;
  for (const auto& sl : scanned.letters) rel.push_back({*zc.base_id(sl.gen.base, sl.gen.subscript), sl.sign});
  zc.base = OneRelatorPresentation(Alphabet(std::move(names)), Word::reduce(rel));
  return zc;
}

namespace detail {

inline std::string fresh_name(const Alphabet& taken, const std::vector<std::string>& also, std::string stem) {
  auto used = [&](const std::string& n) {
    return taken.find(n).has_value() || std::find(also.begin(), also.end(), n) != also.end();
  };
  std::string name = stem;
  while (used(name)) name += "'";
  return name;
}

}  // namespace detail

inline EmbeddingData embed_nonzero_case(const OneRelatorPresentation& p, Generator a, Generator b,
                                        std::size_t max_len = kDefaultMaxWordLength) {
  const Word& r = p.relator();
  const long alpha = exponent_sum(r, a);
  const long beta = exponent_sum(r, b);
  if (a == b || alpha == 0 || beta == 0 || !p.alphabet().contains(a) || !p.alphabet().contains(b)) {
    throw PreconditionViolated("embedding needs two distinct generators with nonzero exponent sums");
  }

  std::vector<std::string> names;
  std::vector<std::optional<Generator>> carried(p.rank());
  for (Generator g : p.alphabet().generators()) {
    if (g == a || g == b) continue;
    carried[g.id] = Generator{static_cast<std::uint32_t>(names.size())};
    names.push_back(p.alphabet().name(g));
  }
  const Generator x{static_cast<std::uint32_t>(names.size())};
  names.push_back(detail::fresh_name(p.alphabet(), names, "x"));
  const Generator y{static_cast<std::uint32_t>(names.size())};
  names.push_back(detail::fresh_name(p.alphabet(), names, "y"));

  std::vector<Word> subst(p.rank());
  for (Generator g : p.alphabet().generators()) {
    if (carried[g.id]) subst[g.id] = Word::letter(*carried[g.id]);
  }
  subst[a.id] = Word::letter(y) * Word::power(x, -beta, max_len);
  subst[b.id] = Word::power(x, alpha, max_len);

  Word image_rel = cyclic_reduce(substitute(r, subst, max_len)).core;
  return EmbeddingData{a,
                       b,
                       alpha,
                       beta,
                       OneRelatorPresentation(Alphabet(std::move(names)), std::move(image_rel)),
                       x,
                       y,
                       std::move(subst),
                       std::move(carried)};
}

/// Deterministic classification; every alphabet generator must occur in r.
inline BreakdownStep classify(const OneRelatorPresentation& p) {
  const Word& r = p.relator();
  const auto supp = support(r);
  if (supp.size() != p.rank()) {
    throw PreconditionViolated("classify needs every generator to occur in the relator");
  }
  if (supp.empty()) return {BaseFree{}};
  if (supp.size() == 1) {
    const Generator g = *supp.begin();
    return {BaseSingleGen{g, exponent_sum(r, g)}};
  }
  for (Generator g : supp) {
    if (exponent_sum(r, g) == 0) return {rewrite_zero_case(p, g)};
  }
  auto it = supp.begin();
  const Generator a = *it++;
  const Generator b = *it;
  return {embed_nonzero_case(p, a, b)};
}

}  // namespace magnus
