#include "zred/bit_tree.hpp"
#include "stores.hpp"

namespace zred::stores {
namespace {

// Adapter that keeps the most recent addition target ("active" slot) in a
// dense hierarchical bitset. Additions into the active slot toggle bits in
// place and pivot queries on it are a bit-tree max lookup. The base slot of
// the active column is stale until the column is written back, which happens
// whenever another slot becomes active or the active slot is accessed through
// an operation the scratch does not serve.
class PivotCacheStore final : public ColumnStore {
 public:
  explicit PivotCacheStore(std::unique_ptr<ColumnStore> base)
      : base_(std::move(base)), scratch_(base_->num_columns()) {}

  std::size_t num_columns() const noexcept override { return base_->num_columns(); }

  std::size_t add_into(Index src, Index dst) override {
    if (src == active_) flush();
    activate(dst);
    base_->entries_sorted(src, buffer_);
    for (Index r : buffer_) scratch_.toggle(r);
    return buffer_.size();
  }

  std::optional<Index> pivot(Index j) override {
    if (j != active_) return base_->pivot(j);
    const Index top = scratch_.max();
    if (top == kNoIndex) return std::nullopt;
    return top;
  }

  std::size_t size_exact(Index j) override {
    return j == active_ ? scratch_.count() : base_->size_exact(j);
  }

  void swap_slots(Index a, Index b) override {
    base_->swap_slots(a, b);
    if (active_ == a)
      active_ = b;
    else if (active_ == b)
      active_ = a;
  }

  void clear_slot(Index j) override {
    if (j == active_) {
      scratch_.clear();
      active_ = kNoIndex;
    }
    base_->clear_slot(j);
  }

  void set_entries(Index j, std::span<const Index> rows) override {
    if (j == active_) flush();
    base_->set_entries(j, rows);
  }

  void entries_sorted(Index j, std::vector<Index>& out) override {
    if (j == active_) flush();
    base_->entries_sorted(j, out);
  }

  std::size_t remove_entries(Index j, std::span<const Index> rows) override {
    if (j == active_) flush();
    return base_->remove_entries(j, rows);
  }

 private:
  std::unique_ptr<ColumnStore> base_;
  HierarchicalBitset scratch_;
  Index active_ = kNoIndex;
  std::vector<Index> buffer_;

  void activate(Index j) {
    if (j == active_) return;
    flush();
    base_->entries_sorted(j, buffer_);
    for (Index r : buffer_) scratch_.set(r);
    active_ = j;
  }

  void flush() {
    if (active_ == kNoIndex) return;
    buffer_.clear();
    scratch_.drain_sorted(buffer_);
    base_->set_entries(active_, buffer_);
    active_ = kNoIndex;
  }
};

}  // namespace

std::unique_ptr<ColumnStore> make_pivot_cache(std::unique_ptr<ColumnStore> base) {
  return std::make_unique<PivotCacheStore>(std::move(base));
}

}  // namespace zred::stores
