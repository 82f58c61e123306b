#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "zred/types.hpp"

namespace zred {

/// Dense bitset over [0, n) with a 64-ary summary tree for fast max queries.
///
/// Level 0 holds the bits. A bit in level L+1 is set iff the corresponding
/// 64-bit word of level L is nonzero; the top level is a single word. max()
/// and toggle() cost O(log_64 n).
class HierarchicalBitset {
 public:
  HierarchicalBitset() = default;
  explicit HierarchicalBitset(std::size_t n);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t count() const noexcept { return count_; }
  bool none() const noexcept { return count_ == 0; }

  bool test(Index i) const { return (levels_[0][i >> 6] >> (i & 63)) & 1u; }
  /// Flips bit i; returns the new value.
  bool toggle(Index i);
  void set(Index i) {
    if (!test(i)) toggle(i);
  }
  void reset(Index i) {
    if (test(i)) toggle(i);
  }

  /// Largest set bit, or kNoIndex when empty.
  Index max() const;

  /// Appends set bits in ascending order to `out` and clears them.
  void drain_sorted(std::vector<Index>& out);
  void clear();

 private:
  std::vector<std::vector<std::uint64_t>> levels_;
  std::size_t capacity_ = 0;
  std::size_t count_ = 0;

  void drain_word(std::size_t level, std::size_t word, std::vector<Index>& out);
};

}  // namespace zred
