#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nearring/cayley.hpp"
#include "nearring/params.hpp"
#include "nearring/report.hpp"

namespace nearring {

inline constexpr std::size_t kDefaultAutBound = 729;

/// An automorphism, fixed by the images of the generators a and b.
struct Automorphism {
  Element a_image;
  Element b_image;

  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

struct AutOptions {
  std::size_t max_order = kDefaultAutBound;
  /// Also test phi(x + y) = phi(x) + phi(y) on all pairs, not just generators.
  bool full_audit = false;
  unsigned threads = 0;
};

struct AutRecord {
  GroupParams params;
  std::uint64_t brute_order = 0;
  std::uint64_t formula_order = 0;
  bool match = false;
  std::vector<Automorphism> automorphisms;  // ascending by (rank a', rank b')
  std::uint64_t candidates_examined = 0;
  double elapsed_seconds = 0.0;
};

/// Closed form: p^(2d+4m-5)(p^2-1)(p-1) when m = n,
/// p^(2d+3n+m-2)(p-1)^2 when m > n. Throws Error on 64-bit overflow.
std::uint64_t aut_order_formula(const GroupParams& g);

/// The map a^x1 b^x2 c^x3 -> x1*a' + x2*b' + x3*[a', b'], by rank.
Permutation automorphism_table(const GroupParams& g, const Automorphism& phi);

/// Enumerates all automorphisms by their generator images. Throws SizeError
/// when the order exceeds options.max_order.
AutRecord aut_brute(const GroupParams& g, const AutOptions& options = {});

/// Identity present, closure under composition and inversion, preservation
/// of element orders, and c -> [a', b']. Checks "contains_identity",
/// "closed_composition", "closed_inverse", "preserves_orders", "commutator_image".
Report audit_automorphisms(const GroupParams& g, std::span<const Automorphism> autos);

/// For every x of order p^m, look for y with <x, y> = G satisfying the
/// defining relations in the roles of a and b. Checks "companion_exists".
Report check_lemma6(const GroupParams& g, std::size_t max_order = kDefaultAutBound);

Json to_json(const AutRecord& record, bool with_witnesses = true);

}  // namespace nearring
