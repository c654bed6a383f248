#include "nearring/pgroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace nearring {

__int128 binom2(__int128 r) { return r * (r - 1) / 2; }

bool is_canonical(const GroupParams& g, const Element& x) {
  return x.x1 >= 0 && x.x1 < g.mod1() && x.x2 >= 0 && x.x2 < g.mod2() && x.x3 >= 0 &&
         x.x3 < g.mod3();
}

Element canonicalize(const GroupParams& g, const Element& x) {
  return {reduce(x.x1, g.mod1()), reduce(x.x2, g.mod2()), reduce(x.x3, g.mod3())};
}

Element add(const GroupParams& g, const Element& x, const Element& y) {
  return {
      reduce(x.x1 + y.x1, g.mod1()),
      reduce(x.x2 + y.x2, g.mod2()),
      reduce(static_cast<__int128>(x.x3) + y.x3 - static_cast<__int128>(x.x2) * y.x1, g.mod3()),
  };
}

Element neg(const GroupParams& g, const Element& x) {
  return {
      reduce(-x.x1, g.mod1()),
      reduce(-x.x2, g.mod2()),
      reduce(-static_cast<__int128>(x.x3) - static_cast<__int128>(x.x1) * x.x2, g.mod3()),
  };
}

Element sub(const GroupParams& g, const Element& x, const Element& y) { return add(g, x, neg(g, y)); }

Element scalar(const GroupParams& g, const Element& x, std::uint64_t r) {
  // C(r,2) mod p^d from the exact integer r(r-1)/2.
  unsigned __int128 big = static_cast<unsigned __int128>(r);
  unsigned __int128 pairs = r == 0 ? 0 : big * (big - 1) / 2;
  const auto m3 = static_cast<unsigned __int128>(g.mod3());
  const auto pairs_mod = static_cast<__int128>(pairs % m3);
  const auto r1 = static_cast<__int128>(big % static_cast<unsigned __int128>(g.mod1()));
  const auto r2 = static_cast<__int128>(big % static_cast<unsigned __int128>(g.mod2()));
  const auto r3 = static_cast<__int128>(big % m3);
  const __int128 cross = reduce(static_cast<__int128>(x.x1) * x.x2, g.mod3());
  return {
      reduce(x.x1 * r1, g.mod1()),
      reduce(x.x2 * r2, g.mod2()),
      reduce(x.x3 * r3 - cross * pairs_mod, g.mod3()),
  };
}

Element commutator(const GroupParams& g, const Element& x, const Element& y) {
  return add(g, add(g, neg(g, x), neg(g, y)), add(g, x, y));
}

std::uint64_t element_order(const GroupParams& g, const Element& x) {
  // The order divides p^m, so walk the powers of p.
  std::uint64_t r = 1;
  while (scalar(g, x, r) != kZero) r *= static_cast<std::uint64_t>(g.p());
  return r;
}

Rank rank(const GroupParams& g, const Element& x) {
  return static_cast<Rank>((x.x1 * g.mod2() + x.x2) * g.mod3() + x.x3);
}

Element unrank(const GroupParams& g, std::uint64_t k) {
  if (k >= g.order()) {
    throw Error("rank " + std::to_string(k) + " out of range for group of order " +
                std::to_string(g.order()));
  }
  const auto k3 = static_cast<Residue>(k);
  return {k3 / (g.mod2() * g.mod3()), (k3 / g.mod3()) % g.mod2(), k3 % g.mod3()};
}

std::vector<Element> all_elements(const GroupParams& g) {
  std::vector<Element> out;
  out.reserve(g.order());
  for (Residue a = 0; a < g.mod1(); ++a)
    for (Residue b = 0; b < g.mod2(); ++b)
      for (Residue c = 0; c < g.mod3(); ++c) out.push_back({a, b, c});
  return out;
}

ElementSet subgroup_closure(const GroupParams& g, std::span<const Element> generators) {
  std::unordered_set<Rank> seen{rank(g, kZero)};
  std::vector<Element> frontier{kZero};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& s : frontier) {
      for (const auto& gen : generators) {
        const Element t = add(g, s, gen);
        if (seen.insert(rank(g, t)).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  ElementSet out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nearring
