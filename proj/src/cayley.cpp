#include "nearring/cayley.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nearring/pgroup.hpp"

namespace nearring {

CayleyGroup::CayleyGroup(OperationTable table, Rank identity, std::size_t bound)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t n = table_.order();
  if (n == 0) throw Error("group must be non-empty");
  check_table_bound(n, bound, "Cayley group");
  if (identity_ >= n) throw Error("identity index out of range");
  for (Rank x = 0; x < n; ++x) {
    if (op(identity_, x) != x || op(x, identity_) != x) {
      throw Error("index " + std::to_string(identity_) + " is not a two-sided identity");
    }
  }
  inverse_.assign(n, 0);
  for (Rank x = 0; x < n; ++x) {
    const auto row = table_.row(x);
    const auto it = std::find(row.begin(), row.end(), identity_);
    if (it == row.end()) throw Error("element " + std::to_string(x) + " has no inverse");
    const Rank y = static_cast<Rank>(it - row.begin());
    if (op(y, x) != identity_) throw Error("element " + std::to_string(x) + " has no two-sided inverse");
    inverse_[x] = y;
  }
}

CayleyGroup CayleyGroup::from_params(const GroupParams& g, std::size_t bound) {
  return CayleyGroup(addition_table(g, bound), rank(g, kZero), bound);
}

CayleyGroup CayleyGroup::cyclic(std::size_t n) {
  std::vector<Rank> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = static_cast<Rank>((i + j) % n);
  return CayleyGroup(OperationTable(n, std::move(cells)), 0);
}

Rank CayleyGroup::power(Rank x, std::uint64_t k) const {
  Rank acc = identity_;
  Rank base = x;
  while (k > 0) {
    if (k & 1) acc = op(acc, base);
    base = op(base, base);
    k >>= 1;
  }
  return acc;
}

Rank CayleyGroup::commutator(Rank x, Rank y) const {
  return op(op(inverse(x), inverse(y)), op(x, y));
}

std::optional<std::array<Rank, 3>> CayleyGroup::find_nonassociative() const {
  const auto n = static_cast<Rank>(order());
  for (Rank x = 0; x < n; ++x)
    for (Rank y = 0; y < n; ++y) {
      const Rank xy = op(x, y);
      for (Rank z = 0; z < n; ++z) {
        if (op(xy, z) != op(x, op(y, z))) return std::array<Rank, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

bool CayleyGroup::is_abelian() const {
  const auto n = static_cast<Rank>(order());
  for (Rank x = 0; x < n; ++x)
    for (Rank y = x + 1; y < n; ++y)
      if (op(x, y) != op(y, x)) return false;
  return true;
}

std::vector<Rank> CayleyGroup::closure(std::span<const Rank> generators) const {
  std::vector<char> seen(order(), 0);
  std::vector<Rank> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Rank> members{identity_};
  seen[identity_] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Rank g : gens) {
      const Rank t = op(members[i], g);
      if (!seen[t]) {
        seen[t] = 1;
        members.push_back(t);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::optional<std::int64_t> prime_of_power(std::uint64_t order) {
  if (order < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (order % p != 0) ++p;
  while (order % p == 0) order /= p;
  if (order != 1) return std::nullopt;
  return static_cast<std::int64_t>(p);
}

std::vector<Rank> frattini_pgroup(const CayleyGroup& group) {
  if (group.order() == 1) return {group.identity()};
  const auto p = prime_of_power(group.order());
  if (!p) throw Error("Frattini computation needs a p-group; order " +
                      std::to_string(group.order()) + " is not a prime power");
  const auto n = static_cast<Rank>(group.order());
  std::vector<char> is_gen(n, 0);
  for (Rank x = 0; x < n; ++x) {
    is_gen[group.power(x, static_cast<std::uint64_t>(*p))] = 1;
    for (Rank y = 0; y < n; ++y) is_gen[group.commutator(x, y)] = 1;
  }
  std::vector<Rank> gens;
  for (Rank x = 0; x < n; ++x)
    if (is_gen[x]) gens.push_back(x);
  return group.closure(gens);
}

namespace {

/// Value table of the homomorphism to Z_p sending generators[i] to values[i],
/// or nullopt when that assignment does not extend.
std::optional<std::vector<std::int64_t>> extend_to_hom(const CayleyGroup& group,
                                                       std::span<const Rank> generators,
                                                       std::span<const std::int64_t> values,
                                                       std::int64_t p) {
  std::vector<std::int64_t> f(group.order(), -1);
  f[group.identity()] = 0;
  std::vector<Rank> queue{group.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Rank x = queue[i];
    for (std::size_t k = 0; k < generators.size(); ++k) {
      const Rank y = group.op(x, generators[k]);
      const std::int64_t v = (f[x] + values[k]) % p;
      if (f[y] < 0) {
        f[y] = v;
        queue.push_back(y);
      } else if (f[y] != v) {
        return std::nullopt;
      }
    }
  }
  return f;
}

}  // namespace

std::vector<Rank> frattini_by_maximal_subgroups(const CayleyGroup& group) {
  const std::size_t n = group.order();
  if (n == 1) return {group.identity()};
  const auto p = prime_of_power(n);
  if (!p) throw Error("maximal-subgroup Frattini oracle needs a p-group");

  // Greedy generating set in index order.
  std::vector<Rank> gens;
  std::vector<Rank> span{group.identity()};
  for (Rank x = 0; x < n && span.size() < n; ++x) {
    if (!std::binary_search(span.begin(), span.end(), x)) {
      gens.push_back(x);
      span = group.closure(gens);
    }
  }

  std::vector<char> in_all(n, 1);
  std::vector<std::int64_t> values(gens.size(), 0);
  // Odometer over Z_p^k, skipping the zero assignment.
  while (true) {
    std::size_t k = 0;
    while (k < values.size() && ++values[k] == *p) values[k++] = 0;
    if (k == values.size()) break;
    const auto hom = extend_to_hom(group, gens, values, *p);
    if (!hom) continue;
    std::size_t kernel_size = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if ((*hom)[x] == 0) ++kernel_size;
      else in_all[x] = 0;
    }
    if (kernel_size * static_cast<std::size_t>(*p) != n) {
      throw Error("internal: nonzero homomorphism to C_p with kernel of wrong index");
    }
  }
  std::vector<Rank> out;
  for (Rank x = 0; x < n; ++x)
    if (in_all[x]) out.push_back(x);
  return out;
}

bool is_automorphism(const CayleyGroup& group, const Permutation& map) {
  const std::size_t n = group.order();
  if (map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Rank v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (Rank x = 0; x < n; ++x)
    for (Rank y = 0; y < n; ++y)
      if (map[group.op(x, y)] != group.op(map[x], map[y])) return false;
  return true;
}

CayleyGroup semidirect_product(const CayleyGroup& carrier, std::span<const Permutation> actors,
                               std::size_t bound) {
  const std::size_t nr = carrier.order();
  const std::size_t na = actors.size();
  if (na == 0) throw Error("semidirect product needs at least one actor");
  check_table_bound(nr * na, bound, "semidirect product");

  std::map<Permutation, Rank> index;
  for (std::size_t u = 0; u < na; ++u) {
    if (!is_automorphism(carrier, actors[u])) {
      throw Error("actor " + std::to_string(u) + " is not an automorphism of the carrier");
    }
    if (!index.emplace(actors[u], static_cast<Rank>(u)).second) {
      throw Error("actor " + std::to_string(u) + " is listed twice");
    }
  }
  // compose[u1 * na + u2] = position of u1 o u2
  std::vector<Rank> compose(na * na);
  Permutation tmp(nr);
  for (std::size_t u1 = 0; u1 < na; ++u1) {
    for (std::size_t u2 = 0; u2 < na; ++u2) {
      for (std::size_t x = 0; x < nr; ++x) tmp[x] = actors[u1][actors[u2][x]];
      const auto it = index.find(tmp);
      if (it == index.end()) throw Error("actor set is not closed under composition");
      compose[u1 * na + u2] = it->second;
    }
  }
  Permutation identity_map(nr);
  for (std::size_t x = 0; x < nr; ++x) identity_map[x] = static_cast<Rank>(x);
  const auto id_actor = index.find(identity_map);
  if (id_actor == index.end()) throw Error("actor set lacks the identity map");

  const std::size_t n = nr * na;
  std::vector<Rank> cells(n * n);
  for (std::size_t r1 = 0; r1 < nr; ++r1)
    for (std::size_t u1 = 0; u1 < na; ++u1)
      for (std::size_t r2 = 0; r2 < nr; ++r2)
        for (std::size_t u2 = 0; u2 < na; ++u2) {
          const Rank r = carrier.op(static_cast<Rank>(r1), actors[u1][r2]);
          const Rank u = compose[u1 * na + u2];
          cells[(r1 * na + u1) * n + (r2 * na + u2)] = static_cast<Rank>(r * na + u);
        }
  const auto identity = static_cast<Rank>(carrier.identity() * na + id_actor->second);
  return CayleyGroup(OperationTable(n, std::move(cells)), identity, bound);
}

}  // namespace nearring
