#pragma once

#include <cstdint>

#include "nearring/maps.hpp"
#include "nearring/report.hpp"
#include "nearring/table.hpp"

namespace nearring {

/// Orders up to this are verified exhaustively by default.
inline constexpr std::uint64_t kExhaustiveOrderLimit = 243;
inline constexpr std::uint64_t kDefaultSamples = 1'000'000;

struct VerifyMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static VerifyMode exhaustive() { return {}; }
  /// k pseudo-random triples from `seed`, plus every triple (x, y, z) with
  /// z in {b, c}.
  static VerifyMode sampled(std::uint64_t k, std::uint64_t seed) { return {Kind::Sampled, k, seed}; }
};

/// Exhaustive up to kExhaustiveOrderLimit, otherwise kDefaultSamples samples.
VerifyMode default_mode(const GroupParams& g, std::uint64_t seed);

struct VerifyOptions {
  VerifyMode mode;
  unsigned threads = 0;
  std::size_t table_bound = kDefaultTableBound;
};

/// Addition and multiplication tables of a candidate nearring, by rank.
struct NearringTables {
  GroupParams params;
  OperationTable add;
  OperationTable mul;
};

NearringTables build_tables(const MapTriple& maps, std::size_t bound = kDefaultTableBound);

/// x(y+z) = xy + xz. Check "left_distributive".
Report verify_left_distributive(const MapTriple& maps, const VerifyOptions& options = {});
/// (xy)z = x(yz). Check "associative".
Report verify_associative(const MapTriple& maps, const VerifyOptions& options = {});
/// a*y = y and x*a = x. Checks "identity_left", "identity_right".
Report verify_identity(const MapTriple& maps);
/// alpha(0) = beta(0) = gamma(0) = 0, and 0*x = 0 for all x.
/// Checks "zero_rows", "zero_absorbing".
Report verify_zero_symmetric(const MapTriple& maps);
/// Locality and row conditions, checks "cond0" .. "cond5":
///   (0) zero rows <=> 0*x = 0 for all x
///   (1) alpha(x) = 0 mod p
///   (2) beta(x) = 0 mod p implies x1 = 0 mod p
///   (3)-(5) row of xy equals product_row(x, y) in the alpha, beta, gamma slot
Report check_conditions(const MapTriple& maps);

/// Left distributivity, associativity, two-sided identity a and zero symmetry.
Report verify_axioms(const MapTriple& maps, const VerifyOptions& options = {});

/// verify_axioms plus check_conditions. The row conditions are read in the
/// given coordinates, so (1) and (2) can fail for a local nearring whose L
/// does not contain b. Also records in metrics whether conditions (3)-(5)
/// holding coincided with full associativity on this input.
Report verify_all(const MapTriple& maps, const VerifyOptions& options = {});

/// Same table-based checks, for callers that already built the tables.
Report verify_left_distributive(const NearringTables& t, const VerifyOptions& options);
Report verify_associative(const NearringTables& t, const VerifyOptions& options);

}  // namespace nearring
