#pragma once

#include <span>
#include <vector>

#include "zred/types.hpp"

namespace zred {

/// Square Z2 matrix of a filtered cell complex, stored column-wise.
///
/// Column j holds the strictly ascending row indices of the facets of cell j.
/// Every instance satisfies: rows of column j are < j, and each row i of
/// column j has dim(i) == dim(j) - 1. Construction validates both and throws
/// InvariantError naming the first offending column.
class BoundaryMatrix {
 public:
  BoundaryMatrix() = default;
  BoundaryMatrix(std::vector<Dim> dims, std::vector<Column> columns);

  std::size_t size() const noexcept { return columns_.size(); }
  bool empty() const noexcept { return columns_.empty(); }

  Dim dim(Index j) const { return dims_[j]; }
  const std::vector<Dim>& dims() const noexcept { return dims_; }
  std::span<const Index> column(Index j) const { return columns_[j]; }
  const std::vector<Column>& columns() const noexcept { return columns_; }

  Dim max_dim() const noexcept;
  std::size_t num_entries() const noexcept;

  /// True iff every column has either zero or dim + 1 entries.
  bool has_simplicial_cardinality() const noexcept;

  friend bool operator==(const BoundaryMatrix&, const BoundaryMatrix&) = default;

 private:
  std::vector<Dim> dims_;
  std::vector<Column> columns_;
};

/// Entry (i, j) of the result is entry (N-1-j, N-1-i) of the input; dimensions
/// become max_dim - d so the result is again dimension-consistent.
BoundaryMatrix anti_transpose(const BoundaryMatrix& m);

}  // namespace zred
