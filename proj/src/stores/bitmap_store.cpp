#include <algorithm>
#include <bit>

#include "stores.hpp"

namespace zred::stores {
namespace {

struct Block {
  Index index;          // rows [64 * index, 64 * index + 64)
  std::uint64_t bits;   // never zero while stored
};

using BlockColumn = std::vector<Block>;

// Each column is a bitmap cut into 64-row blocks; only nonzero blocks are
// kept, sorted by block index. Additions XOR matching blocks word-wise.
class BitmapStore final : public ColumnStore {
 public:
  explicit BitmapStore(const BoundaryMatrix& m) : cols_(m.size()), sizes_(m.size(), 0) {
    for (Index j = 0; j < m.size(); ++j) assign(j, m.column(j));
  }

  std::size_t num_columns() const noexcept override { return cols_.size(); }

  std::size_t add_into(Index src, Index dst) override {
    const BlockColumn& s = cols_[src];
    const BlockColumn& d = cols_[dst];
    scratch_.clear();
    std::size_t count = 0;
    auto a = d.begin();
    auto b = s.begin();
    auto emit = [&](Index idx, std::uint64_t bits) {
      if (bits == 0) return;
      scratch_.push_back({idx, bits});
      count += static_cast<std::size_t>(std::popcount(bits));
    };
    while (a != d.end() && b != s.end()) {
      if (a->index < b->index) {
        emit(a->index, a->bits);
        ++a;
      } else if (b->index < a->index) {
        emit(b->index, b->bits);
        ++b;
      } else {
        emit(a->index, a->bits ^ b->bits);
        ++a;
        ++b;
      }
    }
    for (; a != d.end(); ++a) emit(a->index, a->bits);
    for (; b != s.end(); ++b) emit(b->index, b->bits);
    cols_[dst].swap(scratch_);
    sizes_[dst] = count;
    return sizes_[src];
  }

  std::optional<Index> pivot(Index j) override {
    if (cols_[j].empty()) return std::nullopt;
    const Block& top = cols_[j].back();
    return static_cast<Index>(top.index * 64u + 63u - std::countl_zero(top.bits));
  }

  std::size_t size_exact(Index j) override { return sizes_[j]; }

  void swap_slots(Index a, Index b) override {
    cols_[a].swap(cols_[b]);
    std::swap(sizes_[a], sizes_[b]);
  }

  void clear_slot(Index j) override {
    cols_[j].clear();
    sizes_[j] = 0;
  }

  void set_entries(Index j, std::span<const Index> rows) override { assign(j, rows); }

  void entries_sorted(Index j, std::vector<Index>& out) override {
    out.clear();
    out.reserve(sizes_[j]);
    for (const Block& blk : cols_[j]) {
      std::uint64_t bits = blk.bits;
      while (bits != 0) {
        out.push_back(blk.index * 64u + static_cast<Index>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t remove_entries(Index j, std::span<const Index> rows) override {
    BlockColumn& c = cols_[j];
    std::size_t removed = 0;
    auto it = c.begin();
    for (Index r : rows) {
      const Index idx = r / 64;
      while (it != c.end() && it->index < idx) ++it;
      if (it == c.end()) break;
      if (it->index != idx) continue;
      const std::uint64_t mask = std::uint64_t{1} << (r % 64);
      if (it->bits & mask) {
        it->bits &= ~mask;
        ++removed;
      }
    }
    std::erase_if(c, [](const Block& blk) { return blk.bits == 0; });
    sizes_[j] -= removed;
    return removed;
  }

 private:
  std::vector<BlockColumn> cols_;
  std::vector<std::size_t> sizes_;
  BlockColumn scratch_;

  void assign(Index j, std::span<const Index> rows) {
    BlockColumn& c = cols_[j];
    c.clear();
    for (Index r : rows) {
      const Index idx = r / 64;
      if (c.empty() || c.back().index != idx) c.push_back({idx, 0});
      c.back().bits |= std::uint64_t{1} << (r % 64);
    }
    sizes_[j] = rows.size();
  }
};

}  // namespace

std::unique_ptr<ColumnStore> make_bitmap_store(const BoundaryMatrix& m) {
  return std::make_unique<BitmapStore>(m);
}

}  // namespace zred::stores
