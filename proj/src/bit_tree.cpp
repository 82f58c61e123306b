#include "zred/bit_tree.hpp"

namespace zred {

HierarchicalBitset::HierarchicalBitset(std::size_t n) : capacity_(n) {
  std::size_t words = (n + 63) / 64;
  if (words == 0) words = 1;
  levels_.emplace_back(words, 0);
  while (words > 1) {
    words = (words + 63) / 64;
    levels_.emplace_back(words, 0);
  }
}

bool HierarchicalBitset::toggle(Index i) {
  std::size_t pos = i;
  auto& base = levels_[0][pos >> 6];
  const bool was_zero = base == 0;
  base ^= std::uint64_t{1} << (pos & 63);
  const bool now_set = (base >> (pos & 63)) & 1u;
  count_ += now_set ? 1 : std::size_t(-1);
  const bool is_zero = base == 0;
  if (was_zero == is_zero) return now_set;
  // The word changed between zero and nonzero: propagate up the summary.
  for (std::size_t level = 1; level < levels_.size(); ++level) {
    pos >>= 6;
    auto& word = levels_[level][pos >> 6];
    const bool parent_was_zero = word == 0;
    word ^= std::uint64_t{1} << (pos & 63);
    if (parent_was_zero == (word == 0)) break;
  }
  return now_set;
}

Index HierarchicalBitset::max() const {
  if (count_ == 0) return kNoIndex;
  std::size_t pos = 0;
  for (std::size_t level = levels_.size(); level-- > 0;) {
    const std::uint64_t word = levels_[level][pos];
    pos = (pos << 6) | static_cast<std::size_t>(63 - std::countl_zero(word));
  }
  return static_cast<Index>(pos);
}

void HierarchicalBitset::drain_word(std::size_t level, std::size_t word, std::vector<Index>& out) {
  std::uint64_t bits = levels_[level][word];
  levels_[level][word] = 0;
  while (bits != 0) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
    bits &= bits - 1;
    const std::size_t child = (word << 6) | bit;
    if (level == 0)
      out.push_back(static_cast<Index>(child));
    else
      drain_word(level - 1, child, out);
  }
}

void HierarchicalBitset::drain_sorted(std::vector<Index>& out) {
  if (count_ == 0) return;
  drain_word(levels_.size() - 1, 0, out);
  count_ = 0;
}

void HierarchicalBitset::clear() {
  std::vector<Index> sink;
  drain_sorted(sink);
}

}  // namespace zred
