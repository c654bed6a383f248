#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nearring/params.hpp"

// Coordinate arithmetic in the additively written group G(p^m, p^n, p^d):
//   a*p^m = b*p^n = c*p^d = 0,  -b + a + b = a + c,  c central.

namespace nearring {

/// Sorted ranks of a set of elements.
using ElementSet = std::vector<Rank>;

/// r(r-1)/2 over the integers. Exact for |r| < 2^62.
__int128 binom2(__int128 r);

/// Reduce v into [0, mod).
inline Residue reduce(__int128 v, Residue mod) {
  auto r = static_cast<Residue>(v % mod);
  return r < 0 ? r + mod : r;
}

bool is_canonical(const GroupParams& g, const Element& x);
Element canonicalize(const GroupParams& g, const Element& x);

/// (x1+y1, x2+y2, x3+y3 - x2*y1), reduced.
Element add(const GroupParams& g, const Element& x, const Element& y);
Element neg(const GroupParams& g, const Element& x);
Element sub(const GroupParams& g, const Element& x, const Element& y);

/// r-fold sum x + ... + x; (x1 r, x2 r, x3 r - x1 x2 C(r,2)).
Element scalar(const GroupParams& g, const Element& x, std::uint64_t r);

/// -x - y + x + y.
Element commutator(const GroupParams& g, const Element& x, const Element& y);

/// Least r >= 1 with r*x = 0; a divisor of p^m.
std::uint64_t element_order(const GroupParams& g, const Element& x);

/// Rank order (x1 * p^n + x2) * p^d + x3.
Rank rank(const GroupParams& g, const Element& x);
Element unrank(const GroupParams& g, std::uint64_t k);

/// All elements in rank order.
std::vector<Element> all_elements(const GroupParams& g);

/// Smallest subgroup containing the generators.
ElementSet subgroup_closure(const GroupParams& g, std::span<const Element> generators);

}  // namespace nearring
