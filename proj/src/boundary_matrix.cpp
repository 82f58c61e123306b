#include "zred/boundary_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace zred {

BoundaryMatrix::BoundaryMatrix(std::vector<Dim> dims, std::vector<Column> columns)
    : dims_(std::move(dims)), columns_(std::move(columns)) {
  if (dims_.size() != columns_.size())
    throw std::invalid_argument("dimension vector and column vector differ in length");
  for (Index j = 0; j < columns_.size(); ++j) {
    if (dims_[j] < 0) throw InvariantError(j, "negative dimension");
    const Column& col = columns_[j];
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (k > 0 && col[k] <= col[k - 1])
        throw InvariantError(j, "row indices not strictly ascending");
      if (col[k] >= j)
        throw InvariantError(j, "row index " + std::to_string(col[k] + 1) +
                                    " not above the diagonal");
      if (dims_[col[k]] != dims_[j] - 1)
        throw InvariantError(j, "row " + std::to_string(col[k] + 1) + " has dimension " +
                                    std::to_string(dims_[col[k]]) + ", expected " +
                                    std::to_string(dims_[j] - 1));
    }
  }
}

Dim BoundaryMatrix::max_dim() const noexcept {
  if (dims_.empty()) return 0;
  return *std::max_element(dims_.begin(), dims_.end());
}

std::size_t BoundaryMatrix::num_entries() const noexcept {
  return std::accumulate(columns_.begin(), columns_.end(), std::size_t{0},
                         [](std::size_t acc, const Column& c) { return acc + c.size(); });
}

bool BoundaryMatrix::has_simplicial_cardinality() const noexcept {
  for (Index j = 0; j < columns_.size(); ++j) {
    auto sz = columns_[j].size();
    if (sz != 0 && sz != static_cast<std::size_t>(dims_[j]) + 1) return false;
  }
  return true;
}

BoundaryMatrix anti_transpose(const BoundaryMatrix& m) {
  const auto n = static_cast<Index>(m.size());
  const Dim top = m.max_dim();
  std::vector<Dim> dims(n);
  std::vector<Column> cols(n);
  for (Index k = 0; k < n; ++k) dims[k] = top - m.dim(n - 1 - k);
  // Walking input columns in descending order emits each output column's rows
  // in ascending order, so no sort is needed.
  for (Index c = n; c-- > 0;) {
    for (Index r : m.column(c)) cols[n - 1 - r].push_back(n - 1 - c);
  }
  return BoundaryMatrix(std::move(dims), std::move(cols));
}

}  // namespace zred
