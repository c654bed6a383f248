#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nearring/aut.hpp"
#include "nearring/mapdsl.hpp"
#include "nearring/maps.hpp"
#include "nearring/report.hpp"

namespace nearring {

inline constexpr std::size_t kDefaultEnumerationBound = 81;

/// Optional per-component restriction of rows to expression values.
struct RowConstraint {
  std::optional<MapExpr> alpha;
  std::optional<MapExpr> beta;
  std::optional<MapExpr> gamma;
};

struct EnumerateOptions {
  std::size_t max_order = kDefaultEnumerationBound;
  std::optional<std::uint64_t> max_solutions;
  unsigned threads = 0;
  /// Search separately for each candidate L_k = {y : y1 = k*y2 mod p}, the
  /// maximal subgroups not containing a, and restrict rows by
  ///   x*(b + k*a) in L_k                      (R L <= L)
  ///   x not in L_k  =>  x1 beta(x) - x2 alpha(x) != 0 mod p   (x*c has order p^d)
  /// For k = 0 these are alpha(x) = 0 mod p and beta(x) = 0 mod p => x1 = 0 mod p.
  bool pointwise_pruning = true;
  /// Force the row at 0 to (0,0,0).
  bool zero_symmetric = true;
  RowConstraint subfamily;
  /// Branching decisions made sequentially before work is split into tasks.
  std::size_t split_depth = 2;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t conflicts = 0;        // propagation found two different rows
  std::uint64_t pointwise_prunes = 0; // a derived row violated the row restrictions
  void merge(const SearchStats& o) {
    nodes += o.nodes;
    conflicts += o.conflicts;
    pointwise_prunes += o.pointwise_prunes;
  }
};

/// Partial assignment of rows with a trail for undo. Rows of products are
/// derived from assigned rows: if rows of x and y are known, xy is computed by
/// the coordinate formula and its row must be x*(y*b).
class SearchState {
 public:
  /// Assigns and propagates the forced rows (a, and 0 when zero-symmetric).
  /// conflicted() reports whether that already failed. With pointwise pruning
  /// the state assumes L = L_slope.
  SearchState(const GroupParams& g, const EnumerateOptions& options, Residue slope = 0);
  const GroupParams& params() const { return params_; }
  Residue slope() const { return slope_; }
  /// y1 = slope * y2 mod p.
  bool in_l(const Element& y) const;
  bool conflicted() const { return conflicted_; }
  bool assigned(Rank x) const { return assigned_[x] != 0; }
  Element row(Rank x) const { return rows_[x]; }
  std::size_t assigned_count() const { return trail_.size(); }
  bool complete() const { return trail_.size() == rows_.size(); }

  /// Whether `row` is allowed at x by the pointwise restrictions.
  bool admissible(Rank x, const Element& row) const;
  /// Admissible rows at x in ascending (alpha, beta, gamma) order.
  std::vector<Element> candidates(Rank x) const;
  std::uint64_t candidate_count(Rank x) const;

  /// Assign x := row and propagate to a fixpoint. Returns false on conflict;
  /// the state must then be rolled back with undo().
  bool assign(Rank x, const Element& row);

  /// Derive or check the row of xy from the rows of x and y. Returns false on
  /// conflict. Newly derived rows are queued; call propagate() to drain.
  bool propagate_pair(Rank x, Rank y);
  bool propagate();

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

  /// Unassigned element with fewest candidates, lowest rank on ties.
  std::optional<Rank> choose_branch() const;

  MapTriple to_maps() const;

  SearchStats stats;

 private:
  bool set_row(Rank x, const Element& row);

  GroupParams params_;
  const EnumerateOptions* options_;
  Residue slope_ = 0;
  std::vector<Element> elems_;
  std::vector<Element> rows_;
  std::vector<char> assigned_;
  std::vector<Rank> trail_;
  std::size_t processed_ = 0;
  bool conflicted_ = false;
};

struct EnumerationSummary {
  std::uint64_t count = 0;
  SearchStats stats;
  std::uint64_t complete_assignments = 0;
  std::uint64_t rejected_by_verifier = 0;
  std::uint64_t rejected_non_local = 0;
  std::uint64_t rejected_other_branch = 0;  // local, but L differs from the branch's L_k
  std::uint64_t tasks = 0;
  bool truncated = false;
  double wall_seconds = 0.0;
};

struct EnumerationResult {
  std::vector<MapTriple> solutions;
  EnumerationSummary summary;
};

/// Every zero-symmetric local nearring multiplication on G(p^m, p^n, p^d) with
/// identity a, in a fixed order that does not depend on the worker count:
/// by L_k, then by decision sequence. Every complete assignment is re-verified
/// exhaustively before emission.
EnumerationResult enumerate_local(const GroupParams& g, const EnumerateOptions& options = {});

struct DedupResult {
  std::vector<std::size_t> representatives;  // indices into the solution list
  std::vector<std::uint64_t> orbit_sizes;
  std::uint64_t excluded_automorphisms = 0;  // phi(a) != a, no row form
  std::uint64_t foreign_images = 0;          // transported triple not in the list
};

/// Triple transported by phi: x o' y = phi(phi^-1(x) * phi^-1(y)). Returns
/// nullopt when phi(a) != a.
std::optional<MapTriple> transport(const MapTriple& maps, const Automorphism& phi);

/// Orbits of the solutions under the automorphisms fixing a.
DedupResult dedup_up_to_aut(const GroupParams& g, std::span<const MapTriple> solutions,
                            std::span<const Automorphism> automorphisms);

Json to_json(const EnumerationSummary& summary);

}  // namespace nearring
