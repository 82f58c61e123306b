#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "zred/boundary_matrix.hpp"
#include "zred/column_store.hpp"
#include "zred/instrumentation.hpp"
#include "zred/pairing.hpp"

namespace zred {

enum class Algorithm { standard, twist, swap, exhaustive, retrospective, mix };

/// CLI name: standard, twist, swap, exhaustive, retro, mix.
std::string_view algorithm_name(Algorithm a);
/// Throws std::invalid_argument listing the valid names.
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> all_algorithms();

struct ReduceOptions {
  // Only twist and swap clear; only exhaustive, retrospective and mix compress.
  // Turning either off exists for the neutrality tests.
  bool clearing = true;
  bool compression = true;
  bool record_trace = false;
};

struct ReductionResult {
  PersistencePairing pairing;
  ReductionStats stats;
  Trace trace;  // empty unless record_trace
};

/// Reduces `store` in place. The store must have been built from `m`.
ReductionResult reduce(const BoundaryMatrix& m, ColumnStore& store, Algorithm algorithm,
                       const ReduceOptions& options = {});

/// Convenience overload that builds the store.
ReductionResult reduce(const BoundaryMatrix& m, Algorithm algorithm, Representation rep,
                       const ReduceOptions& options = {});

/// Reduces the anti-transpose of `m` and maps the pairing back to the
/// indexing of `m`. Stats and trace refer to the dual matrix.
ReductionResult reduce_dualized(const BoundaryMatrix& m, Algorithm algorithm, Representation rep,
                                const ReduceOptions& options = {});

/// Removes every row of column j flagged in `negative`. Returns the removed count.
std::size_t compress_column(ColumnStore& store, Index j, const std::vector<bool>& negative,
                            Recorder* recorder = nullptr, Index outer_step = kNoIndex);

/// Empties column i.
void clear_column(ColumnStore& store, Index i, Recorder* recorder = nullptr,
                  Index outer_step = kNoIndex);

}  // namespace zred
