#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nearring/params.hpp"
#include "nearring/table.hpp"

namespace nearring {

/// An automorphism (or any self-map) given as a table over indices.
using Permutation = std::vector<Rank>;

/// A finite group carried by its full operation table.
class CayleyGroup {
 public:
  /// Validates that `identity` is two-sided neutral and that every element
  /// has a two-sided inverse. Associativity is checked separately by
  /// find_nonassociative().
  CayleyGroup(OperationTable table, Rank identity, std::size_t bound = kDefaultTableBound);

  /// The additive group R+ = G(p^m, p^n, p^d) indexed by rank.
  static CayleyGroup from_params(const GroupParams& g, std::size_t bound = kDefaultTableBound);
  static CayleyGroup cyclic(std::size_t n);

  std::size_t order() const { return table_.order(); }
  Rank identity() const { return identity_; }
  Rank op(Rank x, Rank y) const { return table_.at(x, y); }
  Rank inverse(Rank x) const { return inverse_[x]; }
  Rank power(Rank x, std::uint64_t k) const;
  Rank commutator(Rank x, Rank y) const;
  const OperationTable& table() const { return table_; }

  /// First (x, y, z) in lexicographic order with (xy)z != x(yz).
  std::optional<std::array<Rank, 3>> find_nonassociative() const;

  bool is_abelian() const;

  /// Sorted indices of the subgroup generated by `generators`.
  std::vector<Rank> closure(std::span<const Rank> generators) const;

 private:
  OperationTable table_;
  Rank identity_ = 0;
  std::vector<Rank> inverse_;
};

/// The prime p when order = p^k with k >= 1.
std::optional<std::int64_t> prime_of_power(std::uint64_t order);

/// Frattini subgroup of a finite p-group, generated by all p-th powers and all
/// commutators. Throws Error when the order is not a prime power. The trivial
/// group has trivial Frattini subgroup.
std::vector<Rank> frattini_pgroup(const CayleyGroup& group);

/// Independent route: intersection of all maximal subgroups, which in a
/// p-group are the kernels of the epimorphisms onto C_p. Cost grows like
/// p^k * |G| for a k-element generating set.
std::vector<Rank> frattini_by_maximal_subgroups(const CayleyGroup& group);

bool is_automorphism(const CayleyGroup& group, const Permutation& map);

/// Group on pairs (r, u) with (r1, u1)(r2, u2) = (r1 + u1(r2), u1 o u2).
/// The pair (r, u) has index r * |actors| + u, u being the position in
/// `actors`. Throws Error when an actor is not an automorphism or the actor
/// set is not closed under composition.
CayleyGroup semidirect_product(const CayleyGroup& carrier, std::span<const Permutation> actors,
                               std::size_t bound = kDefaultTableBound);

}  // namespace nearring
