#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nearring/maps.hpp"
#include "nearring/report.hpp"
#include "nearring/table.hpp"

namespace nearring {

inline constexpr Rank kNoInverse = static_cast<Rank>(-1);

/// The maximal-subgroup cross-check of Phi(H) runs only up to this order.
inline constexpr std::size_t kExhaustiveFrattiniOracleOrder = 243;

/// Invariants of the multiplicative group R*.
struct MultGroupInfo {
  std::uint64_t order = 0;
  bool abelian = true;
  /// multiplicative order -> number of units with that order
  std::map<std::uint64_t, std::uint64_t> order_histogram;
};

struct StructureProfile {
  GroupParams params;
  std::vector<Rank> units;       // R*, ascending ranks
  std::vector<Rank> non_units;   // L, ascending ranks
  std::vector<Rank> inverse;     // inverse[k] for units, kNoInverse otherwise
  bool l_is_subgroup = false;    // the nearring is local iff this holds
  std::uint64_t index = 0;       // |R+ : L| when L is a subgroup, else 0
  bool index_is_p = false;
  bool x1_criterion_holds = false;
  std::uint64_t identity_order = 0;
  std::uint64_t exponent = 0;
  MultGroupInfo mult;

  bool local() const { return l_is_subgroup; }
};

/// Units by exhaustive two-sided inverse search, plus the locality
/// classification. The caller is expected to have verified the axioms.
StructureProfile invertible_set(const MapTriple& maps, std::size_t bound = kDefaultTableBound);

/// Index-p subgroup of non-units, unit count p^(m+n+d-1)(p-1), the x1 criterion
/// and L = <a*p> + <b> + <c>. Checks "L_subgroup", "index_p", "unit_count",
/// "x1_criterion", "L_generated".
Report check_theorem1(const MapTriple& maps, const StructureProfile& profile);

/// Additive order of i equals the exponent p^m, and so does that of every
/// unit. Checks "identity_order", "unit_orders".
Report check_identity_order(const MapTriple& maps, const StructureProfile& profile);

/// Left multiplications by units are additive automorphisms, u -> lambda_u is
/// injective and multiplicative, and the orbit of i under them is R*.
/// Checks "lambda_automorphisms", "lambda_injective", "lambda_multiplicative",
/// "identity_orbit".
Report lambda_embedding(const MapTriple& maps, const StructureProfile& profile);

/// Builds H = R+ x| (i + L) under left multiplication and checks
/// L = R+ n Phi(H) and Phi(R+) <= L. Orders above `bound` are skipped with
/// metrics["status"] = "skipped".
Report check_frattini_theorem(const MapTriple& maps, const StructureProfile& profile,
                              std::size_t bound = kDefaultTableBound);

MultGroupInfo mult_group_structure(const MapTriple& maps, const StructureProfile& profile);

/// invertible_set plus every flag and the multiplicative group descriptors.
StructureProfile analyze(const MapTriple& maps, std::size_t bound = kDefaultTableBound);

/// Locality classification alone.
bool is_local(const MapTriple& maps, std::size_t bound = kDefaultTableBound);

Json to_json(const StructureProfile& profile);
/// Fixed-column text layout for terminals.
std::string format_profile(const StructureProfile& profile);

}  // namespace nearring
