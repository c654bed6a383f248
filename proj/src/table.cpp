#include "nearring/table.hpp"

#include <string>

#include "nearring/pgroup.hpp"

namespace nearring {

OperationTable::OperationTable(std::size_t order, std::vector<Rank> cells)
    : order_(order), cells_(std::move(cells)) {
  if (cells_.size() != order_ * order_) throw Error("operation table is not square");
  for (Rank v : cells_) {
    if (v >= order_) throw Error("operation table entry out of range");
  }
}

void check_table_bound(std::uint64_t order, std::size_t bound, const char* what) {
  if (order > bound) {
    throw SizeError(std::string(what) + ": order " + std::to_string(order) +
                    " exceeds the configured bound " + std::to_string(bound));
  }
}

OperationTable addition_table(const GroupParams& g, std::size_t bound) {
  check_table_bound(g.order(), bound, "addition table");
  const auto elems = all_elements(g);
  const std::size_t n = elems.size();
  std::vector<Rank> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = rank(g, add(g, elems[i], elems[j]));
  return OperationTable(n, std::move(cells));
}

}  // namespace nearring
