#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zred/boundary_matrix.hpp"

namespace zred {

/// N slots, each a Z2 column over row indices. Every representation exposes
/// the same semantic state: a finite set of rows per slot. Queries that may
/// need to canonicalize lazy state (pivot, size_exact, entries_sorted) are
/// therefore non-const.
class ColumnStore {
 public:
  virtual ~ColumnStore() = default;

  virtual std::size_t num_columns() const noexcept = 0;

  /// dst <- dst xor src. Returns the number of flipped entries, i.e. |src|.
  virtual std::size_t add_into(Index src, Index dst) = 0;

  /// Largest row of slot j, if any.
  virtual std::optional<Index> pivot(Index j) = 0;
  virtual std::size_t size_exact(Index j) = 0;

  /// Exchanges two slots without copying entries.
  virtual void swap_slots(Index a, Index b) = 0;

  virtual void clear_slot(Index j) = 0;
  /// `rows` must be strictly ascending.
  virtual void set_entries(Index j, std::span<const Index> rows) = 0;
  /// Replaces `out` with slot j's rows in ascending order.
  virtual void entries_sorted(Index j, std::vector<Index>& out) = 0;
  /// Removes every listed row that is present; `rows` ascending. Returns the removed count.
  virtual std::size_t remove_entries(Index j, std::span<const Index> rows) = 0;

  std::vector<Index> entries_sorted(Index j) {
    std::vector<Index> out;
    entries_sorted(j, out);
    return out;
  }
  bool is_zero(Index j) { return !pivot(j).has_value(); }
};

enum class BaseRepresentation { list, vector, set, heap, bitmap };

/// A base column representation, optionally behind the pivot-cache adapter
/// (names prefixed "p-").
struct Representation {
  BaseRepresentation base = BaseRepresentation::vector;
  bool pivot_cache = false;

  std::string name() const;
  /// Throws std::invalid_argument listing the valid names.
  static Representation parse(std::string_view name);
  static std::vector<std::string> valid_names();

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Every base representation, each with and without the adapter.
std::vector<Representation> all_representations();

/// Slot j starts out holding m.column(j).
std::unique_ptr<ColumnStore> make_store(const BoundaryMatrix& m, Representation rep);

}  // namespace zred
