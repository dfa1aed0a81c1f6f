#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oddakh/scalar.hpp"

namespace oddakh::exterior {

/// Wedge basis element a_S, S stored as a bitmask over ordered vectors a_0, a_1, ...
using Mask = std::uint32_t;

inline int degree(Mask s) { return std::popcount(s); }

/// Number of elements of s strictly greater than index c.
inline int count_above(Mask s, unsigned c) {
  const Mask above = (c + 1 >= 32) ? Mask{0} : ~((Mask{1} << (c + 1)) - 1);
  return std::popcount(s & above);
}

/// a_S ∧ a_T = wedge_sign(S, T) a_{S ∪ T}; zero when S and T overlap.
inline int wedge_sign(Mask s, Mask t) {
  if (s & t) return 0;
  int inversions = 0;
  for (Mask rest = t; rest; rest &= rest - 1) inversions += count_above(s, static_cast<unsigned>(std::countr_zero(rest)));
  return (inversions % 2) ? -1 : 1;
}

/// a_c ⌐ a_S for orthonormal vectors: (-1)^(p-1) a_{S \ c} where p is the 1-based
/// position of c in S; zero if c is not in S.
inline int interior_sign(Mask s, unsigned c) {
  if (!((s >> c) & 1u)) return 0;
  const int before = std::popcount(s & ((Mask{1} << c) - 1));
  return (before % 2) ? -1 : 1;
}

/// Right-handed contraction a_S ⌐' a_c = (-1)^(|S|-1) a_c ⌐ a_S.
inline int right_interior_sign(Mask s, unsigned c) {
  const int base = interior_sign(s, c);
  return ((degree(s) - 1) % 2) ? -base : base;
}

/// Image of a_S under the algebra map induced by a_i -> a_{target[i]}. Returns the
/// sign and mask, or std::nullopt when two factors land on the same vector.
inline std::optional<std::pair<int, Mask>> substitute(Mask s, std::span<const std::size_t> target) {
  Mask out = 0;
  int sign = 1;
  // Wedge the images left to right: (prefix) ∧ a_t.
  for (Mask rest = s; rest; rest &= rest - 1) {
    const auto i = static_cast<unsigned>(std::countr_zero(rest));
    const auto t = static_cast<unsigned>(target[i]);
    if ((out >> t) & 1u) return std::nullopt;
    if (count_above(out, t) % 2) sign = -sign;
    out |= Mask{1} << t;
  }
  return std::pair{sign, out};
}

/// Sparse element of an exterior algebra.
using Element = std::map<Mask, Rational>;

inline void add_term(Element& x, Mask s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = x.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) x.erase(it);
  }
}

inline Element wedge(const Element& x, const Element& y) {
  Element out;
  for (const auto& [s, a] : x)
    for (const auto& [t, b] : y)
      if (int sg = wedge_sign(s, t)) add_term(out, s | t, sg * a * b);
  return out;
}

}  // namespace oddakh::exterior
