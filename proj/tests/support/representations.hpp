#pragma once

// Faithful representations used as test oracles.
//
// Klein bottle ⟨a,b | abab⁻¹⟩: deck transformations of the plane,
//   a: (x, y) ↦ (x + 1, y),  b: (x, y) ↦ (−x, y + 1).
// Trefoil ⟨a,b | a²b⁻³⟩ ≅ B₃: reduced Burau matrices over ℤ[t, t⁻¹],
//   a ↦ σ1σ2σ1, b ↦ σ1σ2, with σ1 = [[−t, 1], [0, 1]], σ2 = [[1, 0], [t, −t]].
// Both use eval(uv) = eval(u) · eval(v).

#include <array>
#include <map>

#include "magnus/free_words.hpp"

namespace magnus::testing {

/// (x, y) ↦ (flip·x + dx, y + dy), flip = ±1.
struct PlaneMap {
  long flip = 1;
  long dx = 0;
  long dy = 0;

  friend PlaneMap operator*(const PlaneMap& f, const PlaneMap& g) {  // f ∘ g
    return {f.flip * g.flip, f.flip * g.dx + f.dx, f.dy + g.dy};
  }
  PlaneMap inverse() const { return {flip, -flip * dx, -dy}; }
  bool is_identity() const { return flip == 1 && dx == 0 && dy == 0; }
  friend bool operator==(const PlaneMap&, const PlaneMap&) = default;
};

inline PlaneMap klein_eval(const Word& w) {
  const PlaneMap a{1, 1, 0};
  const PlaneMap b{-1, 0, 1};
  PlaneMap m;
  for (Letter l : w) {
    const PlaneMap& g = l.gen.id == 0 ? a : b;
    m = m * (l.sign > 0 ? g : g.inverse());
  }
  return m;
}

/// Laurent polynomial: exponent -> coefficient, zero coefficients erased.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c, int e = 0) {
    if (c != 0) terms_[e] = c;
  }

  friend Laurent operator+(const Laurent& p, const Laurent& q) {
    Laurent r = p;
    for (const auto& [e, c] : q.terms_) r.add(e, c);
    return r;
  }
  friend Laurent operator-(const Laurent& p) {
    Laurent r;
    for (const auto& [e, c] : p.terms_) r.terms_[e] = -c;
    return r;
  }
  friend Laurent operator*(const Laurent& p, const Laurent& q) {
    Laurent r;
    for (const auto& [e1, c1] : p.terms_) {
      for (const auto& [e2, c2] : q.terms_) r.add(e1 + e2, c1 * c2);
    }
    return r;
  }
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Inverse of a unit ±t^k.
  Laurent unit_inverse() const {
    if (terms_.size() != 1 || (terms_.begin()->second != 1 && terms_.begin()->second != -1)) {
      throw std::logic_error("not a unit");
    }
    return Laurent(terms_.begin()->second, -terms_.begin()->first);
  }

 private:
  void add(int e, long c) {
    if ((terms_[e] += c) == 0) terms_.erase(e);
  }
  std::map<int, long> terms_;
};

struct Burau {
  std::array<Laurent, 4> m{Laurent(1), Laurent(), Laurent(), Laurent(1)};

  friend Burau operator*(const Burau& x, const Burau& y) {
    return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3], x.m[2] * y.m[0] + x.m[3] * y.m[2],
             x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
  }
  Burau inverse() const {
    const Laurent det = m[0] * m[3] + -(m[1] * m[2]);
    const Laurent inv = det.unit_inverse();
    return {{m[3] * inv, -m[1] * inv, -m[2] * inv, m[0] * inv}};
  }
  bool is_identity() const { return *this == Burau{}; }
  friend bool operator==(const Burau&, const Burau&) = default;
};

inline Burau burau_sigma1() { return {{Laurent(-1, 1), Laurent(1), Laurent(), Laurent(1)}}; }
inline Burau burau_sigma2() { return {{Laurent(1), Laurent(), Laurent(1, 1), Laurent(-1, 1)}}; }

inline Burau trefoil_eval(const Word& w) {
  const Burau a = burau_sigma1() * burau_sigma2() * burau_sigma1();
  const Burau b = burau_sigma1() * burau_sigma2();
  const std::array<Burau, 2> pos{a, b};
  const std::array<Burau, 2> neg{a.inverse(), b.inverse()};
  Burau m;
  for (Letter l : w) m = m * (l.sign > 0 ? pos[l.gen.id] : neg[l.gen.id]);
  return m;
}

}  // namespace magnus::testing
