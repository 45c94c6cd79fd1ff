#pragma once

// Word problem and Magnus-subgroup membership for one-relator groups.
//
// Everything funnels through express(P, w, S): the reduced word over S equal
// to w in P, or nothing if w ∉ ⟨S⟩. The word problem is S = ∅. When S omits a
// letter of the relator, ⟨S⟩ is free on S, so the returned word is the unique
// reduced expression; the HNN case relies on that uniqueness to split
// witnesses over a union of two subsets.

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "magnus/breakdown.hpp"

namespace magnus {

struct SolverLimits {
  std::size_t max_depth = 32;
  std::size_t max_word_len = kDefaultMaxWordLength;
  int max_subscript_span = 4096;
};

struct MembershipWitness {
  Word expression;  // support ⊆ queried subset
};

enum class VerdictKind { Trivial, NonTrivial, Member, NotMember };

struct Verdict {
  VerdictKind kind;
  std::optional<MembershipWitness> witness;

  bool trivial() const { return kind == VerdictKind::Trivial; }
  bool member() const { return kind == VerdictKind::Member; }
};

/// g_0 t^{s_1} g_1 ... t^{s_n} g_n over the base group of a zero-case step,
/// with every s_i = ±1.
struct HnnQueryForm {
  std::vector<Word> pieces{Word{}};
  std::vector<std::int8_t> signs;

  bool has_stable_letter() const { return !signs.empty(); }
};

struct SolverStats {
  std::size_t depth_reached = 0;
  std::size_t memo_hits = 0;
  std::size_t memo_misses = 0;
  std::size_t words_allocated = 0;
  std::size_t membership_calls = 0;
};

/// A breakdown step on the active part of a presentation and its children.
struct HierarchyNode {
  OneRelatorPresentation presentation;
  std::vector<std::string> free_generators;  // split off before classifying
  BreakdownStep step;
  std::size_t level = 0;  // composite descent steps from the root
  std::vector<HierarchyNode> children;

  std::size_t depth() const {
    std::size_t d = level;
    for (const auto& c : children) d = std::max(d, c.depth());
    return d;
  }
};

class Solver {
 public:
  using Mask = std::vector<bool>;

  explicit Solver(SolverLimits limits = {}, bool memoize = true) : limits_(limits), memoize_(memoize) {}

  const SolverLimits& limits() const noexcept { return limits_; }
  const SolverStats& stats() const noexcept { return stats_; }
  void reset_stats() { stats_ = {}; }

  Verdict word_problem(const OneRelatorPresentation& p, const Word& w) {
    require_over(p.alphabet(), w);
    const bool trivial = express(p, w, Mask(p.rank(), false), 0).has_value();
    return {trivial ? VerdictKind::Trivial : VerdictKind::NonTrivial, std::nullopt};
  }

  Verdict magnus_membership(const OneRelatorPresentation& p, const Word& w, const std::set<Generator>& subset) {
    require_over(p.alphabet(), w);
    Mask s(p.rank(), false);
    for (Generator g : subset) {
      if (!p.alphabet().contains(g)) throw UnknownGenerator("subset generator id " + std::to_string(g.id));
      s[g.id] = true;
    }
    auto witness = express(p, w, s, 0);
    if (!witness) return {VerdictKind::NotMember, std::nullopt};
    return {VerdictKind::Member, MembershipWitness{std::move(*witness)}};
  }

  /// Pinch reduction of `q` in the HNN extension described by `zc`.
  HnnQueryForm britton_reduce(const ZeroCaseData& zc, const HnnQueryForm& q) {
    const auto entry = zero_entry_for(zc);
    BrittonStack st(*this, *entry, 0);
    for (std::size_t i = 0; i < q.pieces.size(); ++i) {
      for (Letter l : q.pieces[i]) st.push_base(l);
      if (i < q.signs.size()) st.push_stable(q.signs[i]);
    }
    return st.finish();
  }

  /// Britton-reduced form of a word over the parent alphabet of `zc`.
  HnnQueryForm hnn_form(const ZeroCaseData& zc, const Word& w) {
    auto entry = zero_entry_for(zc);
    return hnn_reduce(*entry, w, 0);
  }

  HierarchyNode hierarchy_tree(const OneRelatorPresentation& p) { return build_tree(p, 0, 0); }

 private:
  struct ZeroEntry {
    std::shared_ptr<const ZeroCaseData> zc;
    Mask lower;
    Mask upper;
  };

  struct NodeEntry {
    std::shared_ptr<const ActiveFactor> active;
    AbelianizationData abelian;
    std::map<std::uint32_t, std::shared_ptr<const ZeroEntry>> zero;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const EmbeddingData>> embed;
  };

  struct NodeKey {
    std::size_t rank;
    Word relator;
    friend bool operator==(const NodeKey&, const NodeKey&) = default;
  };

  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const noexcept { return std::hash<Word>{}(k.relator) ^ (k.rank * 0x9e3779b97f4a7c15ull); }
  };

  // Stack-based pinch reduction: tokens arrive left to right and each
  // t^{-e} g t^{e} candidate is tested when its closing letter arrives.
  class BrittonStack {
   public:
    BrittonStack(Solver& s, const ZeroEntry& entry, std::size_t depth) : solver_(s), entry_(entry), depth_(depth) {}

    void push_base(Letter l) {
      form_.pieces.back().append(l);
      if (form_.pieces.back().size() > solver_.limits_.max_word_len) {
        throw ResourceExhausted("HNN piece exceeds word length limit");
      }
    }

    void push_stable(int e) {
      if (!form_.signs.empty() && form_.signs.back() == -e) {
        const int s = form_.signs.back();
        const Mask& associated = s > 0 ? entry_.lower : entry_.upper;
        if (auto wit = solver_.in_subgroup(entry_.zc->base, form_.pieces.back(), associated, depth_ + 1)) {
          Word shifted = entry_.zc->shift(*wit, s);
          form_.pieces.pop_back();
          form_.signs.pop_back();
          form_.pieces.back().append(shifted, solver_.limits_.max_word_len);
          ++solver_.stats_.words_allocated;
          return;
        }
      }
      form_.signs.push_back(static_cast<std::int8_t>(e));
      form_.pieces.emplace_back();
    }

    HnnQueryForm finish() { return std::move(form_); }

   private:
    Solver& solver_;
    const ZeroEntry& entry_;
    std::size_t depth_;
    HnnQueryForm form_;
  };

  static bool covers(const Mask& s) {
    return std::all_of(s.begin(), s.end(), [](bool b) { return b; });
  }
  static bool none(const Mask& s) {
    return std::none_of(s.begin(), s.end(), [](bool b) { return b; });
  }
  static bool over(const Word& w, const Mask& s) {
    return std::all_of(w.begin(), w.end(), [&](Letter l) { return s[l.gen.id]; });
  }

  std::shared_ptr<NodeEntry> node(const OneRelatorPresentation& p) {
    if (memoize_) {
      NodeKey key{p.rank(), p.relator()};
      auto it = cache_.find(key);
      if (it != cache_.end()) {
        ++stats_.memo_hits;
        return it->second;
      }
      ++stats_.memo_misses;
      auto entry = make_node(p);
      cache_.emplace(std::move(key), entry);
      return entry;
    }
    ++stats_.memo_misses;
    return make_node(p);
  }

  static std::shared_ptr<NodeEntry> make_node(const OneRelatorPresentation& p) {
    auto entry = std::make_shared<NodeEntry>();
    entry->active = std::make_shared<const ActiveFactor>(active_factor(p));
    entry->abelian = abelianization(p);
    return entry;
  }

  // The core presentation of an entry is the active factor's.
  std::shared_ptr<const ZeroEntry> zero_entry(NodeEntry& n, Generator t) {
    auto it = n.zero.find(t.id);
    if (it != n.zero.end()) return it->second;
    auto zc = std::make_shared<const ZeroCaseData>(rewrite_zero_case(n.active->core, t));
    for (const auto& r : zc->ranges) {
      if (r && r->hi - r->lo > limits_.max_subscript_span) {
        throw ResourceExhausted("subscript span exceeds limit");
      }
    }
    auto ze = std::make_shared<const ZeroEntry>(ZeroEntry{zc, zc->lower_mask(), zc->upper_mask()});
    n.zero.emplace(t.id, ze);
    return ze;
  }

  std::shared_ptr<const ZeroEntry> zero_entry_for(const ZeroCaseData& zc) {
    auto zcp = std::make_shared<const ZeroCaseData>(zc);
    return std::make_shared<const ZeroEntry>(ZeroEntry{zcp, zcp->lower_mask(), zcp->upper_mask()});
  }

  std::shared_ptr<const EmbeddingData> embedding(NodeEntry& n, Generator a, Generator b) {
    auto key = std::make_pair(a.id, b.id);
    auto it = n.embed.find(key);
    if (it != n.embed.end()) return it->second;
    auto e = std::make_shared<const EmbeddingData>(embed_nonzero_case(n.active->core, a, b, limits_.max_word_len));
    n.embed.emplace(key, e);
    return e;
  }

  std::optional<Word> in_subgroup(const OneRelatorPresentation& p, const Word& u, const Mask& s, std::size_t depth) {
    if (u.empty()) return Word{};
    if (over(u, s)) return u;
    return express(p, u, s, depth);
  }

  std::optional<Word> express(const OneRelatorPresentation& p, const Word& w, const Mask& s, std::size_t depth) {
    if (depth > limits_.max_depth) {
      throw ResourceExhausted("hierarchy depth exceeds limit " + std::to_string(limits_.max_depth));
    }
    stats_.depth_reached = std::max(stats_.depth_reached, depth);
    ++stats_.membership_calls;
    if (w.size() > limits_.max_word_len) throw ResourceExhausted("query word exceeds word length limit");
    if (covers(s) || over(w, s)) return w;

    auto entry = node(p);
    if (none(s) && !entry->abelian.admits(exponent_vector(w, p.rank()))) return std::nullopt;

    const ActiveFactor& af = *entry->active;
    if (af.to_parent.size() == p.rank()) return express_core(*entry, w, s, depth);
    return express_free_product(*entry, w, s, depth);
  }

  // G = H * F(free part): normal form with nontrivial H-syllables and
  // nonempty free syllables; membership is syllable-wise.
  std::optional<Word> express_free_product(const NodeEntry& entry, const Word& w, const Mask& s, std::size_t depth) {
    const ActiveFactor& af = *entry.active;
    const Mask none_mask(af.core.rank(), false);
    auto to_core = [&](const Word& h) {
      std::vector<Letter> out;
      for (Letter l : h) out.push_back({*af.from_parent[l.gen.id], l.sign});
      return Word::reduce(out);
    };
    auto to_parent = [&](const Word& h) {
      std::vector<Letter> out;
      for (Letter l : h) out.push_back({af.to_parent[l.gen.id], l.sign});
      return Word::reduce(out);
    };
    const auto core_entry = node(af.core);
    NodeEntry& core = *core_entry;
    auto trivial_in_core = [&](const Word& h) { return express_core(core, to_core(h), none_mask, depth).has_value(); };

    struct Syllable {
      bool active;
      Word word;
    };
    std::vector<Syllable> stack;
    auto push = [&](bool active, Word piece) {
      if (piece.empty()) return;
      if (!stack.empty() && stack.back().active == active) {
        piece = stack.back().word * piece;
        stack.pop_back();
      }
      if (piece.empty() || (active && trivial_in_core(piece))) return;
      stack.push_back({active, std::move(piece)});
    };

    std::vector<Letter> run;
    bool run_active = false;
    for (Letter l : w) {
      const bool a = af.from_parent[l.gen.id].has_value();
      if (!run.empty() && a != run_active) {
        push(run_active, Word::reduce(run));
        run.clear();
      }
      run_active = a;
      run.push_back(l);
    }
    if (!run.empty()) push(run_active, Word::reduce(run));

    Mask core_s(af.core.rank(), false);
    for (std::size_t i = 0; i < af.to_parent.size(); ++i) core_s[i] = s[af.to_parent[i].id];

    Word witness;
    for (const auto& syl : stack) {
      if (!syl.active) {
        if (!over(syl.word, s)) return std::nullopt;
        witness.append(syl.word, limits_.max_word_len);
        continue;
      }
      auto v = express_core(core, to_core(syl.word), core_s, depth);
      if (!v) return std::nullopt;
      witness.append(to_parent(*v), limits_.max_word_len);
    }
    return witness;
  }

  // Presentation whose relator uses every generator.
  std::optional<Word> express_core(NodeEntry& entry, const Word& w, const Mask& s, std::size_t depth) {
    const OneRelatorPresentation& p = entry.active->core;
    const Word& r = p.relator();
    if (w.empty()) return Word{};
    if (covers(s) || over(w, s)) return w;

    if (p.rank() == 1) {
      const long n = exponent_sum(r, Generator{0});
      return exponent_sum(w, Generator{0}) % n == 0 ? std::optional<Word>(Word{}) : std::nullopt;
    }
    if (none(s) && !entry.abelian.admits(exponent_vector(w, p.rank()))) return std::nullopt;

    std::vector<Generator> zero_sum;
    for (Generator g : p.alphabet().generators()) {
      if (exponent_sum(r, g) == 0) zero_sum.push_back(g);
    }
    for (Generator t : zero_sum) {
      if (s[t.id]) return express_stable_in_subset(entry, w, s, t, depth);
    }
    if (!zero_sum.empty()) {
      const Generator t = zero_sum.front();
      if (none(s)) return word_problem_hnn(entry, w, t, depth);
      if (auto d = common_subscript(entry, s, t)) return express_conjugated(entry, w, s, t, *d, depth);
      Mask with_t = s;
      with_t[t.id] = true;
      if (!covers(with_t)) {
        auto v = express_stable_in_subset(entry, w, with_t, t, depth);
        if (!v || support(*v).count(t)) return std::nullopt;
        return v;
      }
    }
    return express_embedded(entry, w, s, depth);
  }

  // Britton-reduces t^conj · w · t^{-conj}; each x_h is fed as
  // t^{h-c} x_c t^{c-h} with c the nearest subscript inside x's range.
  HnnQueryForm hnn_reduce(const ZeroEntry& ze, const Word& w, std::size_t depth, int conj = 0) {
    const ZeroCaseData& zc = *ze.zc;
    const auto sub = rewrite_word_to_subscripted(w, zc.stable);
    if (!sub.letters.empty() && sub.hi - sub.lo > limits_.max_subscript_span) {
      throw ResourceExhausted("query subscript span exceeds limit");
    }
    BrittonStack st(*this, ze, depth);
    auto push_power = [&](long k) {
      for (long i = 0; i < std::labs(k); ++i) st.push_stable(k > 0 ? 1 : -1);
    };
    long pending = 0;  // t-power separating the previous base letter from height 0
    for (const auto& sl : sub.letters) {
      const auto& range = zc.ranges[sl.gen.base.id];
      if (!range) throw PreconditionViolated("query uses a generator outside the relator");
      const int h = sl.gen.subscript + conj;
      const int c = std::clamp(h, range->lo, range->hi);
      push_power(static_cast<long>(h - c) - pending);
      pending = h - c;
      st.push_base({*zc.base_id(sl.gen.base, c), sl.sign});
    }
    push_power(sub.t_exp - pending);
    ++stats_.words_allocated;
    return st.finish();
  }

  std::optional<Word> word_problem_hnn(NodeEntry& entry, const Word& w, Generator t, std::size_t depth) {
    auto ze = zero_entry(entry, t);
    auto form = hnn_reduce(*ze, w, depth);
    if (form.has_stable_letter()) return std::nullopt;
    const Mask none_mask(ze->zc->base.rank(), false);
    if (!in_subgroup(ze->zc->base, form.pieces[0], none_mask, depth + 1)) return std::nullopt;
    return Word{};
  }

  // t ∈ S: ⟨S⟩ is the HNN extension of K = ⟨x_i : x ∈ S⟩ ≤ L. Peel the reduced
  // form g_0 t^{e_1} g_1 ... from the left; g ∈ K·C is decided through the
  // unique witness of g over K ∪ C (free, since the union omits an endpoint
  // subscript of some generator outside S).
  std::optional<Word> express_stable_in_subset(NodeEntry& entry, const Word& w, const Mask& s, Generator t,
                                               std::size_t depth) {
    auto ze = zero_entry(entry, t);
    const ZeroCaseData& zc = *ze->zc;
    Mask k_mask(zc.base.rank(), false);
    for (std::size_t i = 0; i < zc.base_gens.size(); ++i) k_mask[i] = s[zc.base_gens[i].base.id];

    const auto form = hnn_reduce(*ze, w, depth);
    Word witness;
    Word cur = form.pieces[0];
    for (std::size_t i = 0; i < form.signs.size(); ++i) {
      const int e = form.signs[i];
      const Mask& c_mask = e > 0 ? ze->upper : ze->lower;
      Mask u_mask = k_mask;
      for (std::size_t j = 0; j < u_mask.size(); ++j) u_mask[j] = u_mask[j] || c_mask[j];
      auto v = in_subgroup(zc.base, cur, u_mask, depth + 1);
      if (!v) return std::nullopt;
      std::size_t split = v->size();
      while (split > 0 && c_mask[(*v)[split - 1].gen.id]) --split;
      Word k_part = v->subword(0, split);
      if (!over(k_part, k_mask)) return std::nullopt;
      witness.append(zc.lift(k_part, limits_.max_word_len), limits_.max_word_len);
      witness.append(Letter{t, static_cast<std::int8_t>(e)});
      cur = zc.shift(v->subword(split, v->size() - split), -e);
      cur.append(form.pieces[i + 1], limits_.max_word_len);
    }
    auto v = in_subgroup(zc.base, cur, k_mask, depth + 1);
    if (!v) return std::nullopt;
    witness.append(zc.lift(*v, limits_.max_word_len), limits_.max_word_len);
    return witness;
  }

  // A subscript shared by the ranges of every generator in S (t ∉ S).
  std::optional<int> common_subscript(NodeEntry& entry, const Mask& s, Generator t) {
    auto ze = zero_entry(entry, t);
    int lo = std::numeric_limits<int>::min();
    int hi = std::numeric_limits<int>::max();
    for (std::size_t g = 0; g < s.size(); ++g) {
      if (!s[g]) continue;
      const auto r = *ze->zc->ranges[g];
      lo = std::max(lo, r.lo);
      hi = std::min(hi, r.hi);
    }
    if (lo > hi) return std::nullopt;
    return lo;
  }

  // ⟨S⟩ = t^{-d} ⟨x_d : x ∈ S⟩ t^{d} with ⟨x_d⟩ ≤ L.
  std::optional<Word> express_conjugated(NodeEntry& entry, const Word& w, const Mask& s, Generator t, int d,
                                         std::size_t depth) {
    auto ze = zero_entry(entry, t);
    const ZeroCaseData& zc = *ze->zc;
    const auto form = hnn_reduce(*ze, w, depth, d);
    if (form.has_stable_letter()) return std::nullopt;
    Mask kd(zc.base.rank(), false);
    for (std::size_t g = 0; g < s.size(); ++g) {
      if (s[g]) kd[zc.base_id(Generator{static_cast<std::uint32_t>(g)}, d)->id] = true;
    }
    auto v = in_subgroup(zc.base, form.pieces[0], kd, depth + 1);
    if (!v) return std::nullopt;
    std::vector<Letter> out;
    for (Letter l : *v) out.push_back({zc.base_gens[l.gen.id].base, l.sign});
    return Word::reduce(out);
  }

  // Adjoin a root of b ∈ S; ⟨S, x⟩ ∩ G = ⟨S⟩ in the amalgam G *_{b = x^α} ⟨x⟩.
  std::optional<Word> express_embedded(NodeEntry& entry, const Word& w, const Mask& s, std::size_t depth) {
    const OneRelatorPresentation& p = entry.active->core;
    Generator a{0};
    Generator b{1};
    if (!none(s)) {
      std::vector<Generator> in_s;
      std::vector<Generator> rest;
      for (Generator g : p.alphabet().generators()) {
        if (exponent_sum(p.relator(), g) == 0) continue;
        (s[g.id] ? in_s : rest).push_back(g);
      }
      b = in_s.at(0);
      a = in_s.size() > 1 ? in_s[1] : rest.at(0);
    }
    auto emb = embedding(entry, a, b);
    Mask image_s(emb->image.rank(), false);
    for (std::size_t g = 0; g < s.size(); ++g) {
      if (s[g] && emb->carried[g]) image_s[emb->carried[g]->id] = true;
    }
    if (s[b.id]) image_s[emb->x.id] = true;
    if (s[b.id] && s[a.id]) image_s[emb->y.id] = true;

    const bool x_survives = support(emb->image.relator()).count(emb->x) > 0;
    ++stats_.words_allocated;
    auto v = express(emb->image, emb->translate(w, limits_.max_word_len), image_s, x_survives ? depth : depth + 1);
    if (!v) return std::nullopt;
    if (none(s)) return Word{};
    auto u = emb->pull_back(*v);
    if (!u) throw InvariantViolation("membership witness does not pull back through the embedding");
    return u;
  }

  HierarchyNode build_tree(const OneRelatorPresentation& p, std::size_t level, std::size_t depth) {
    if (depth > limits_.max_depth) throw ResourceExhausted("hierarchy depth exceeds limit");
    const auto split = split_free_factor(p);
    auto af = active_factor(p);
    std::vector<std::string> free_names;
    for (Generator g : split.free_part) free_names.push_back(p.alphabet().name(g));
    HierarchyNode node{af.core, std::move(free_names), classify(af.core), level, {}};
    if (const auto* zc = node.step.zero_case()) {
      node.children.push_back(build_tree(zc->base, level + 1, depth + 1));
    } else if (const auto* emb = node.step.embedding()) {
      const bool x_survives = support(emb->image.relator()).count(emb->x) > 0;
      node.children.push_back(build_tree(emb->image, x_survives ? level : level + 1, depth + 1));
    }
    return node;
  }

  SolverLimits limits_;
  bool memoize_;
  SolverStats stats_;
  std::unordered_map<NodeKey, std::shared_ptr<NodeEntry>, NodeKeyHash> cache_;
};

/// s is a root of r iff r lies in the normal closure of s.
inline bool is_root(const Word& s, const Word& r, const Alphabet& alphabet, Solver& solver) {
  const auto p = make_presentation(alphabet, s);
  return solver.word_problem(p, r).trivial();
}

inline bool is_root(const Word& s, const Word& r, const Alphabet& alphabet, const SolverLimits& limits = {}) {
  Solver solver(limits);
  return is_root(s, r, alphabet, solver);
}

}  // namespace magnus
