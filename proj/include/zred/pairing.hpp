#pragma once

#include <utility>
#include <vector>

#include "zred/types.hpp"

namespace zred {

struct PersistencePair {
  Index birth;
  Index death;
  friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

/// Algorithm-independent reduction output: pivot pairs plus essential indices.
/// Kept in canonical form (pairs sorted by birth, essentials ascending) so two
/// pairings compare equal iff they describe the same barcode.
struct PersistencePairing {
  std::vector<PersistencePair> pairs;
  std::vector<Index> essential;

  void canonicalize();
  friend bool operator==(const PersistencePairing&, const PersistencePairing&) = default;
};

/// Builds a canonical pairing from a pivot table (pivot_of[col] = row or kNoIndex).
/// Essential indices are all indices that occur in no pair.
PersistencePairing pairing_from_pivots(const std::vector<Index>& pivot_of_column);

/// Throws std::logic_error when an index occurs twice or a pair has birth >= death.
void validate_pairing(const PersistencePairing& p, std::size_t n);

/// Maps a pairing of the anti-transposed matrix back to the original indexing:
/// (i, j) -> (n-1-j, n-1-i), essential i -> n-1-i.
PersistencePairing map_dual_pairs(const PersistencePairing& p, std::size_t n);

}  // namespace zred
