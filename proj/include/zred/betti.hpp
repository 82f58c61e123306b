#pragma once

#include <vector>

#include "zred/pairing.hpp"

namespace zred {

/// Betti numbers derived from a pairing over n indices.
///
/// Essential indices are treated as pairs (i, n), i.e. the sentinel death one
/// past the last index. beta(k) counts pairs with birth <= k < death.
/// persistent(k, l) counts pairs born by k that are still alive after l
/// (birth <= k and death > l); see README for why the strict "death > l"
/// reading is used.
class BettiProfile {
 public:
  BettiProfile(const PersistencePairing& p, std::size_t n);

  std::size_t size() const noexcept { return betti_.size(); }
  std::size_t beta(Index k) const { return betti_[k]; }
  const std::vector<std::size_t>& betti() const noexcept { return betti_; }

  /// O(#pairs) per query; nothing quadratic is materialized.
  std::size_t persistent(Index k, Index l) const;

  /// persistent(q.first, q.second) for every query, in O((P + Q) log n).
  std::vector<std::size_t> persistent_batch(const std::vector<std::pair<Index, Index>>& queries) const;

  /// Extended pairs: the pairing plus (e, n) for every essential e, sorted by birth.
  const std::vector<PersistencePair>& extended_pairs() const noexcept { return extended_; }

 private:
  std::vector<std::size_t> betti_;
  std::vector<PersistencePair> extended_;
};

}  // namespace zred
