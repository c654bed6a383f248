#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nearring/params.hpp"

namespace nearring {

/// Default bound on the order of any materialized N x N table.
inline constexpr std::size_t kDefaultTableBound = 4096;

/// Dense N x N operation table over indices 0..N-1, row-major.
class OperationTable {
 public:
  OperationTable() = default;
  OperationTable(std::size_t order, std::vector<Rank> cells);

  std::size_t order() const { return order_; }
  Rank at(std::size_t i, std::size_t j) const { return cells_[i * order_ + j]; }
  std::span<const Rank> row(std::size_t i) const {
    return {cells_.data() + i * order_, order_};
  }
  const std::vector<Rank>& cells() const { return cells_; }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Rank> cells_;
};

/// Throws SizeError when order exceeds bound.
void check_table_bound(std::uint64_t order, std::size_t bound, const char* what);

/// Addition table of G(p^m, p^n, p^d) indexed by rank.
OperationTable addition_table(const GroupParams& g, std::size_t bound = kDefaultTableBound);

}  // namespace nearring
