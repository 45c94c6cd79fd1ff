#pragma once

// Ground truth that does not go through the hierarchy: normal-closure
// enumeration, faithful linear and affine representations, Smith form,
// rank-2 primitivity, and the check suites assembled from them.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "magnus/text.hpp"

namespace magnus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Normal closure enumeration

struct NclFactor {
  Word conjugator;
  int exponent = 1;  // ±1
};

struct NclCertificate {
  std::vector<NclFactor> factors;
};

/// Product of conjugator · r^exponent · conjugator⁻¹ over the factors.
inline Word ncl_product(const Word& r, const NclCertificate& cert) {
  Word out;
  for (const auto& f : cert.factors) {
    out.append(f.conjugator);
    out.append(f.exponent > 0 ? r : r.inverse());
    out.append(f.conjugator.inverse());
  }
  return out;
}

/// All reduced words of length ≤ max_len over `rank` generators, shortlex.
inline std::vector<Word> reduced_words_up_to(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::uint32_t g = 0; g < rank; ++g) {
        for (int s : {1, -1}) {
          const Letter l{Generator{g}, static_cast<std::int8_t>(s)};
          if (!out[i].empty() && out[i].back().cancels(l)) continue;
          Word w = out[i];
          w.append(l);
          out.push_back(std::move(w));
        }
      }
    }
    begin = end;
  }
  return out;
}

/// Breadth-first search for w as a product of at most `max_factors`
/// conjugates g r^{±1} g⁻¹ with |g| ≤ conj_len. nullopt means Unknown.
inline std::optional<NclCertificate> ncl_semidecide(const OneRelatorPresentation& p, const Word& w,
                                                    std::size_t conj_len, std::size_t max_factors) {
  if (w.empty()) return NclCertificate{};
  const Word& r = p.relator();
  struct Move {
    NclFactor factor;
    Word value;
  };
  std::vector<Move> moves;
  for (const Word& g : reduced_words_up_to(p.rank(), conj_len)) {
    for (int e : {1, -1}) moves.push_back({{g, e}, g * (e > 0 ? r : r.inverse()) * g.inverse()});
  }
  const std::size_t step = r.size() + 2 * conj_len;

  struct State {
    Word value;
    std::size_t parent;
    std::size_t move;
  };
  std::vector<State> states{{Word{}, 0, 0}};
  std::unordered_set<Word> seen{Word{}};
  std::size_t begin = 0;
  for (std::size_t level = 1; level <= max_factors; ++level) {
    const std::size_t end = states.size();
    const std::size_t slack = (max_factors - level) * step;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t m = 0; m < moves.size(); ++m) {
        Word next = states[i].value * moves[m].value;
        // the remaining factors can change the length by at most `slack`
        if (next.size() > w.size() + slack) continue;
        if (!seen.insert(next).second) continue;
        const bool hit = next == w;
        states.push_back({std::move(next), i, m});
        if (!hit) continue;
        NclCertificate cert;
        for (std::size_t s = states.size() - 1; s != 0; s = states[s].parent) {
          cert.factors.push_back(moves[states[s].move].factor);
        }
        std::reverse(cert.factors.begin(), cert.factors.end());
        if (ncl_product(r, cert) != w) throw InvariantViolation("normal closure certificate does not reproduce its target");
        return cert;
      }
    }
    begin = end;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// PSL2(Z)

/// Element of PSL2(Z); the sign is fixed so the first nonzero entry is positive.
class ProjectiveMatrix {
 public:
  ProjectiveMatrix() : ProjectiveMatrix(1, 0, 0, 1) {}
  ProjectiveMatrix(BigInt a, BigInt b, BigInt c, BigInt d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (e_[0] * e_[3] - e_[1] * e_[2] != 1) throw PreconditionViolated("matrix does not have determinant 1");
    canonicalize();
  }

  static ProjectiveMatrix identity() { return {}; }

  const BigInt& operator()(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }
  bool is_identity() const { return *this == identity(); }

  ProjectiveMatrix inverse() const { return {e_[3], -e_[1], -e_[2], e_[0]}; }

  friend ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return {x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
            x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]};
  }

  friend bool operator==(const ProjectiveMatrix& x, const ProjectiveMatrix& y) { return x.e_ == y.e_; }

  std::string str() const {
    return "(" + e_[0].str() + "," + e_[1].str() + ";" + e_[2].str() + "," + e_[3].str() + ")";
  }

 private:
  void canonicalize() {
    for (const auto& v : e_) {
      if (v == 0) continue;
      if (v < 0) {
        for (auto& u : e_) u = -u;
      }
      return;
    }
  }

  std::array<BigInt, 4> e_;
};

/// Images of the order-2 and order-3 generators.
inline const ProjectiveMatrix& psl2_generator_a() {
  static const ProjectiveMatrix m(0, -1, 1, 0);
  return m;
}
inline const ProjectiveMatrix& psl2_generator_b() {
  static const ProjectiveMatrix m(0, -1, 1, 1);
  return m;
}

/// Generator id 0 ↦ M_a, id 1 ↦ M_b; eval(uv) = eval(u)·eval(v).
inline ProjectiveMatrix psl2_eval(const Word& w) {
  const ProjectiveMatrix images[2][2] = {{psl2_generator_a(), psl2_generator_a().inverse()},
                                         {psl2_generator_b(), psl2_generator_b().inverse()}};
  ProjectiveMatrix m;
  for (Letter l : w) {
    if (l.gen.id > 1) throw PreconditionViolated("psl2_eval expects a word over two generators");
    m = m * images[l.gen.id][l.sign > 0 ? 0 : 1];
  }
  return m;
}

/// True iff no nonempty reduced word of length ≤ max_len in m1, m2 is the identity.
inline bool free_at_length(const ProjectiveMatrix& m1, const ProjectiveMatrix& m2, std::size_t max_len) {
  const std::array<ProjectiveMatrix, 4> gens{m1, m1.inverse(), m2, m2.inverse()};
  // index k and k^1 are mutually inverse letters
  std::function<bool(const ProjectiveMatrix&, int, std::size_t)> walk = [&](const ProjectiveMatrix& m, int last,
                                                                           std::size_t len) {
    if (len > 0 && m.is_identity()) return false;
    if (len == max_len) return true;
    for (int k = 0; k < 4; ++k) {
      if (last >= 0 && k == (last ^ 1)) continue;
      if (!walk(m * gens[static_cast<std::size_t>(k)], k, len + 1)) return false;
    }
    return true;
  };
  return walk(ProjectiveMatrix::identity(), -1, 0);
}

// ---------------------------------------------------------------------------
// Smith normal form

/// Invariant factors d1 | d2 | ... (min(rows, cols) entries, zeros last).
inline std::vector<BigInt> smith_invariants(const std::vector<std::vector<long>>& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  if (rows > 8 || cols > 8) throw PreconditionViolated("smith_invariants is limited to 8x8 matrices");
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (input[i].size() != cols) throw PreconditionViolated("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = input[i][j];
  }
  const std::size_t n = std::min(rows, cols);
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // smallest nonzero entry of the remaining block goes to (k, k)
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = k; i < rows; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          if (m[i][j] != 0 && (!piv || abs(m[i][j]) < abs(m[piv->first][piv->second]))) piv = {{i, j}};
        }
      }
      if (!piv) break;
      std::swap(m[k], m[piv->first]);
      for (auto& row : m) std::swap(row[k], row[piv->second]);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        const BigInt q = m[i][k] / m[k][k];
        for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        clean = clean && m[i][k] == 0;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        const BigInt q = m[k][j] / m[k][k];
        for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        clean = clean && m[k][j] == 0;
      }
      if (!clean) continue;
      // divisibility: fold a non-multiple from the block into row k
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i) {
        for (std::size_t j = k + 1; j < cols && divides; ++j) {
          if (m[i][j] % m[k][k] != 0) {
            for (std::size_t c = k; c < cols; ++c) m[k][c] += m[i][c];
            divides = false;
          }
        }
      }
      if (divides) break;
    }
  }
  std::vector<BigInt> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = abs(m[k][k]);
  return d;
}

// ---------------------------------------------------------------------------
// Rank-2 primitivity

namespace detail {

inline std::size_t cyclic_length(const Word& w) { return cyclic_reduce(w).core.size(); }

// Rank-2 Whitehead automorphisms up to permutations: fix one letter and
// multiply the other by it (or its inverse) on the right, on the left, or
// conjugate by it.
inline const std::vector<std::array<Word, 2>>& rank2_whitehead_moves() {
  static const std::vector<std::array<Word, 2>> moves = [] {
    const Word a = Word::letter(Generator{0});
    const Word b = Word::letter(Generator{1});
    std::vector<std::array<Word, 2>> out;
    for (const Word& u : {b, b.inverse()}) {
      out.push_back({a * u, b});
      out.push_back({u * a, b});
      out.push_back({u.inverse() * a * u, b});
    }
    for (const Word& u : {a, a.inverse()}) {
      out.push_back({a, b * u});
      out.push_back({a, u * b});
      out.push_back({a, u.inverse() * b * u});
    }
    return out;
  }();
  return moves;
}

}  // namespace detail

/// True iff w extends to a free basis of F(a, b).
inline bool is_primitive_rank2(const Word& w) {
  for (Letter l : w) {
    if (l.gen.id > 1) throw PreconditionViolated("is_primitive_rank2 expects a word over two generators");
  }
  const long p = exponent_sum(w, Generator{0});
  const long q = exponent_sum(w, Generator{1});
  if (std::gcd(p, q) != 1) return false;
  Word cur = cyclic_reduce(w).core;
  while (cur.size() > 1) {
    bool shorter = false;
    for (const auto& images : detail::rank2_whitehead_moves()) {
      Word next = cyclic_reduce(substitute(cur, images)).core;
      if (next.size() < cur.size()) {
        cur = std::move(next);
        shorter = true;
        break;
      }
    }
    if (!shorter) return false;
  }
  return cur.size() == 1;
}

// ---------------------------------------------------------------------------
// BS(1, n)

/// x ↦ scale·x + offset over the rationals.
struct AffineMap {
  Rational scale{1};
  Rational offset{0};

  Rational operator()(const Rational& x) const { return scale * x + offset; }
  bool is_identity() const { return scale == 1 && offset == 0; }
  AffineMap inverse() const { return {1 / scale, -offset / scale}; }

  /// (f ∘ g)(x) = f(g(x)).
  friend AffineMap operator*(const AffineMap& f, const AffineMap& g) {
    return {f.scale * g.scale, f.scale * g.offset + f.offset};
  }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// a ↦ (x ↦ n·x), b ↦ (x ↦ x+1); eval(uv) = eval(u) ∘ eval(v). Faithful on
/// ⟨a, b | a b a⁻¹ b⁻ⁿ⟩.
inline AffineMap affine_eval_bs1n(const Word& w, long n) {
  if (n == 0) throw PreconditionViolated("affine_eval_bs1n needs n != 0");
  const AffineMap a{Rational(n), Rational(0)};
  const AffineMap b{Rational(1), Rational(1)};
  const AffineMap images[2][2] = {{a, a.inverse()}, {b, b.inverse()}};
  AffineMap m;
  for (Letter l : w) {
    if (l.gen.id > 1) throw PreconditionViolated("affine_eval_bs1n expects a word over two generators");
    m = m * images[l.gen.id][l.sign > 0 ? 0 : 1];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Check suites

struct CheckReport {
  std::string name;
  std::vector<std::string> lines;       // human-readable progress and findings
  std::vector<std::string> violations;  // counterexamples
  std::vector<std::string> exhausted;   // inputs that hit a budget
  std::map<std::string, std::size_t> counts;

  bool passed() const { return violations.empty() && exhausted.empty(); }

  void write(std::ostream& os) const {
    for (const auto& l : lines) os << l << '\n';
    for (const auto& [k, v] : counts) os << k << ": " << v << '\n';
    for (const auto& v : violations) os << "violation: " << v << '\n';
    for (const auto& e : exhausted) os << "exhausted: " << e << '\n';
    os << (passed() ? "PASS" : "FAIL") << '\n';
  }

  nlohmann::json to_json() const {
    return {{"check", name},
            {"passed", passed()},
            {"counts", counts},
            {"violations", violations},
            {"exhausted", exhausted}};
  }
};

/// Nonempty cyclically reduced words of length ≤ max_len over `rank` generators.
inline std::vector<Word> cyclically_reduced_words(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out;
  for (Word& w : reduced_words_up_to(rank, max_len)) {
    if (!w.empty() && is_cyclically_reduced(w)) out.push_back(std::move(w));
  }
  return out;
}

namespace detail {

/// Runs body(i, solver) for i in [0, n) on `jobs` threads, each with its own
/// solver. Results must be written to per-index slots by the caller.
template <class Body>
void sharded(std::size_t n, std::size_t jobs, const SolverLimits& limits, Body body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    Solver solver(limits);
    for (std::size_t i = 0; i < n; ++i) body(i, solver);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        Solver solver(limits);
        for (std::size_t i = j; i < n; i += jobs) body(i, solver);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline const Alphabet& ab_alphabet() {
  static const Alphabet a({"a", "b"});
  return a;
}

}  // namespace detail

/// Mutual roots among short relators over {a, b} must agree up to cyclic
/// permutation and inversion.
inline CheckReport check_conjugacy_theorem(std::size_t max_len, const SolverLimits& limits = {}, std::size_t jobs = 1) {
  if (max_len > 5) throw PreconditionViolated("check_conjugacy_theorem is limited to max_len <= 5");
  CheckReport rep;
  rep.name = "conjugacy";
  const auto& A = detail::ab_alphabet();
  const auto words = cyclically_reduced_words(2, max_len);
  const std::size_t n = words.size();
  // root[i][j]: words[i] is a root of words[j]; -1 marks an exhausted budget
  std::vector<std::vector<int>> root(n, std::vector<int>(n, 0));
  detail::sharded(n, jobs, limits, [&](std::size_t i, Solver& solver) {
    const auto p = make_presentation(A, words[i]);
    for (std::size_t j = 0; j < n; ++j) {
      try {
        root[i][j] = solver.word_problem(p, words[j]).trivial() ? 1 : 0;
      } catch (const ResourceExhausted&) {
        root[i][j] = -1;
      }
    }
  });
  std::size_t mutual = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (root[i][j] < 0 || root[j][i] < 0) {
        rep.exhausted.push_back(format_word(words[i], A) + " / " + format_word(words[j], A));
        continue;
      }
      if (!(root[i][j] && root[j][i])) continue;
      ++mutual;
      if (!cyclically_equal_up_to_inversion(words[i], words[j])) {
        rep.violations.push_back(format_word(words[i], A) + " and " + format_word(words[j], A) +
                                 " are mutual roots but not conjugate up to inversion");
      }
    }
  }
  rep.lines.push_back("relators: " + std::to_string(n) + " cyclically reduced words of length <= " +
                      std::to_string(max_len));
  rep.counts["relators"] = n;
  rep.counts["pairs"] = n * (n + 1) / 2;
  rep.counts["mutual_roots"] = mutual;
  return rep;
}

/// Every short root of the commutator is primitive or a conjugate of it.
inline CheckReport check_commutator_roots(std::size_t max_len, const SolverLimits& limits = {}, std::size_t jobs = 1) {
  if (max_len > 5) throw PreconditionViolated("check_commutator_roots is limited to max_len <= 5");
  CheckReport rep;
  rep.name = "commutator-roots";
  const auto& A = detail::ab_alphabet();
  const Word r = Word::reduce({pos(0), pos(1), neg(0), neg(1)});
  const auto words = cyclically_reduced_words(2, max_len);
  std::vector<int> is_root_of(words.size(), 0);
  detail::sharded(words.size(), jobs, limits, [&](std::size_t i, Solver& solver) {
    try {
      is_root_of[i] = is_root(words[i], r, A, solver) ? 1 : 0;
    } catch (const ResourceExhausted&) {
      is_root_of[i] = -1;
    }
  });
  std::size_t roots = 0, primitive = 0, conjugate = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string s = format_word(words[i], A);
    if (is_root_of[i] < 0) {
      rep.exhausted.push_back(s);
      continue;
    }
    if (!is_root_of[i]) continue;
    ++roots;
    const bool prim = is_primitive_rank2(words[i]);
    const bool conj = cyclically_equal_up_to_inversion(words[i], r);
    primitive += prim;
    conjugate += conj;
    rep.lines.push_back("root " + s + (prim ? " primitive" : "") + (conj ? " conjugate" : ""));
    if (!prim && !conj) rep.violations.push_back(s + " is a root but neither primitive nor conjugate");
  }
  rep.counts["candidates"] = words.size();
  rep.counts["roots"] = roots;
  rep.counts["primitive"] = primitive;
  rep.counts["conjugate"] = conjugate;
  return rep;
}

/// A uniformly chosen reduced word of length exactly `len`.
inline Word random_reduced_word(std::mt19937_64& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank) - 1);
  std::bernoulli_distribution sign;
  std::vector<Letter> out;
  while (out.size() < len) {
    const Letter l{Generator{gen(rng)}, static_cast<std::int8_t>(sign(rng) ? 1 : -1)};
    if (!out.empty() && out.back().cancels(l)) continue;
    out.push_back(l);
  }
  return Word::reduce(out);
}

/// Random cyclically reduced word of length in [1, max_len] whose support is
/// every one of `rank` generators (rejection sampling).
inline Word random_full_support_relator(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  if (max_len < rank) throw PreconditionViolated("relator too short to use every generator");
  std::uniform_int_distribution<std::size_t> length(rank, max_len);
  while (true) {
    Word w = random_reduced_word(rng, rank, length(rng));
    if (is_cyclically_reduced(w) && support(w).size() == rank) return w;
  }
}

struct FreiheitssatzParams {
  std::size_t relators = 200;
  std::size_t relator_len = 6;
  std::size_t words = 50;
  std::size_t max_len = 10;  // query word length
  std::uint64_t seed = 1;
};

/// Over {a, b, c} with r using all three letters, a word over {a, b} is
/// trivial iff it is freely trivial, and lies in ⟨a, b⟩ as itself.
inline CheckReport check_freiheitssatz(const FreiheitssatzParams& params, const SolverLimits& limits = {},
                                       std::size_t jobs = 1) {
  CheckReport rep;
  rep.name = "freiheitssatz";
  const Alphabet A({"a", "b", "c"});
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::size_t> word_len(0, params.max_len);
  struct Case {
    OneRelatorPresentation p;
    std::vector<Word> words;
  };
  std::vector<Case> cases;
  for (std::size_t i = 0; i < params.relators; ++i) {
    Case c{OneRelatorPresentation(A, random_full_support_relator(rng, 3, params.relator_len)), {}};
    for (std::size_t k = 0; k < params.words; ++k) {
      // raw random letters so that freely trivial words also occur
      std::vector<Letter> raw;
      const std::size_t n = word_len(rng);
      for (std::size_t j = 0; j < n; ++j) {
        raw.push_back({Generator{static_cast<std::uint32_t>(rng() % 2)}, static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
      }
      c.words.push_back(Word::reduce(raw));
    }
    cases.push_back(std::move(c));
  }
  const std::set<Generator> ab{Generator{0}, Generator{1}};
  std::vector<std::vector<std::string>> bad(cases.size()), exhausted(cases.size());
  std::vector<std::size_t> trivial(cases.size(), 0);
  detail::sharded(cases.size(), jobs, limits, [&](std::size_t i, Solver& solver) {
    const auto& c = cases[i];
    for (const Word& w : c.words) {
      const std::string tag = format_presentation(c.p) + " : " + format_word(w, A);
      try {
        const bool t = solver.word_problem(c.p, w).trivial();
        trivial[i] += t;
        if (t != w.empty()) bad[i].push_back(tag + (t ? " declared trivial" : " declared nontrivial"));
        const auto m = solver.magnus_membership(c.p, w, ab);
        if (!m.member() || m.witness->expression != w) bad[i].push_back(tag + " membership witness differs");
      } catch (const ResourceExhausted&) {
        exhausted[i].push_back(tag);
      }
    }
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    rep.violations.insert(rep.violations.end(), bad[i].begin(), bad[i].end());
    rep.exhausted.insert(rep.exhausted.end(), exhausted[i].begin(), exhausted[i].end());
  }
  rep.counts["relators"] = cases.size();
  rep.counts["queries"] = cases.size() * params.words;
  rep.counts["trivial"] = std::accumulate(trivial.begin(), trivial.end(), std::size_t{0});
  rep.lines.push_back("seed " + std::to_string(params.seed));
  return rep;
}

/// The PSL2(Z) facts: defining relations, the commutator matrices,
/// freeness of the commutator subgroup at a length bound, and the order-6
/// abelianization.
inline CheckReport check_modular_group(std::size_t free_len = 12) {
  CheckReport rep;
  rep.name = "modular-group";
  const auto& Ma = psl2_generator_a();
  const auto& Mb = psl2_generator_b();
  auto item = [&](const std::string& what, bool ok) {
    rep.lines.push_back((ok ? "ok    " : "FAIL  ") + what);
    if (!ok) rep.violations.push_back(what);
  };
  item("M_a^2 = 1", (Ma * Ma).is_identity());
  item("M_b^3 = 1", (Mb * Mb * Mb).is_identity());

  const Word abAB = Word::reduce({pos(0), pos(1), neg(0), neg(1)});
  const Word baBA = Word::reduce({pos(1), pos(0), neg(1), neg(0)});
  const auto e0 = psl2_eval(abAB);
  const auto e1 = psl2_eval(baBA);
  const ProjectiveMatrix p(2, 1, 1, 1);
  const ProjectiveMatrix q(1, -1, -1, 2);
  rep.lines.push_back("eval(abAB) = " + e0.str() + ", eval(baBA) = " + e1.str());
  item("{eval(abAB), eval(baBA)} = {(2,1;1,1), (1,-1;-1,2)}", (e0 == p && e1 == q) || (e0 == q && e1 == p));
  item("eval(abAB) * eval(baBA) = 1", (e0 * e1).is_identity());

  // [a, b^-1] completes the basis of the commutator subgroup
  const auto e2 = psl2_eval(Word::reduce({pos(0), neg(1), neg(0), pos(1)}));
  item("no relation of length <= " + std::to_string(free_len) + " between eval(abAB) and eval(aBAb)",
       free_at_length(e0, e2, free_len));

  const auto d = smith_invariants({{2, 0}, {0, 3}});
  item("smith_invariants(diag(2,3)) = (1,6)", d.size() == 2 && d[0] == 1 && d[1] == 6);
  return rep;
}

}  // namespace magnus
