#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.

#include <algorithm>
#include <vector>

#include "nearring/analyzer.hpp"
#include "nearring/maps.hpp"
#include "nearring/pgroup.hpp"
#include "nearring/verifier.hpp"

namespace nearring::oracle {

inline bool depends_only_on_x1(const MapTriple& maps) {
  const auto& g = maps.params();
  for (const auto& x : all_elements(g)) {
    if (maps.row(rank(g, x)) != maps.row(rank(g, {x.x1, 0, 0}))) return false;
  }
  return true;
}

inline bool json_less(const MapTriple& l, const MapTriple& r) { return to_json(l) < to_json(r); }

/// Every triple whose rows depend only on x1, kept when it defines a
/// zero-symmetric local nearring with identity a. Sorted by JSON text.
inline std::vector<MapTriple> x1_family(const GroupParams& g) {
  std::vector<Element> rows;
  for (Residue a = 0; a < g.mod1(); ++a)
    for (Residue b = 0; b < g.mod2(); ++b)
      for (Residue c = 0; c < g.mod3(); ++c) rows.push_back({a, b, c});
  const auto n = static_cast<std::size_t>(g.mod1());
  const auto elems = all_elements(g);
  std::vector<std::size_t> choice(n, 0);
  std::vector<MapTriple> found;
  VerifyOptions vo;
  vo.threads = 1;
  while (true) {
    std::vector<Residue> al, be, ga;
    for (const auto& x : elems) {
      const auto& r = rows[choice[static_cast<std::size_t>(x.x1)]];
      al.push_back(r.x1);
      be.push_back(r.x2);
      ga.push_back(r.x3);
    }
    MapTriple maps(g, al, be, ga);
    if (verify_identity(maps).passed() && verify_zero_symmetric(maps).passed() &&
        verify_axioms(maps, vo).passed() && is_local(maps)) {
      found.push_back(maps);
    }
    std::size_t i = 0;
    while (i < n && ++choice[i] == rows.size()) choice[i++] = 0;
    if (i == n) break;
  }
  std::sort(found.begin(), found.end(), json_less);
  return found;
}

/// x*y by left distributivity alone: y = a*y1 + b*y2 + c*y3, x*a = x,
/// x*b from the maps and x*c = x*(-a - b + a + b).
inline Element distributive_mul(const MapTriple& maps, const Element& x, const Element& y) {
  const auto& g = maps.params();
  const Element xbv = xb(maps, x);
  const Element xc = add(g, add(g, add(g, neg(g, x), neg(g, xbv)), x), xbv);
  Element acc = kZero;
  for (Residue i = 0; i < y.x1; ++i) acc = add(g, acc, x);
  for (Residue i = 0; i < y.x2; ++i) acc = add(g, acc, xbv);
  for (Residue i = 0; i < y.x3; ++i) acc = add(g, acc, xc);
  return acc;
}

/// Nearring axioms with identity a and zero symmetry, by direct loops over a
/// product table built with distributive_mul.
inline bool axioms_hold_directly(const MapTriple& maps) {
  const auto& g = maps.params();
  const auto elems = all_elements(g);
  const auto n = elems.size();
  std::vector<Rank> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = rank(g, distributive_mul(maps, elems[i], elems[j]));
  const Rank ra = rank(g, kGenA);
  for (std::size_t x = 0; x < n; ++x) {
    if (t[ra * n + x] != x || t[x * n + ra] != x || t[x] != 0) return false;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Rank yz = rank(g, add(g, elems[y], elems[z]));
        if (t[x * n + yz] != rank(g, add(g, elems[t[x * n + y]], elems[t[x * n + z]]))) return false;
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
      }
  }
  return true;
}

}  // namespace nearring::oracle
