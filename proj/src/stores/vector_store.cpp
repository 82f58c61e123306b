#include <algorithm>
#include <iterator>

#include "stores.hpp"

namespace zred::stores {
namespace {

// Sorted std::vector per column; additions are a linear merge.
class VectorStore final : public ColumnStore {
 public:
  explicit VectorStore(const BoundaryMatrix& m) : cols_(m.columns()) {}

  std::size_t num_columns() const noexcept override { return cols_.size(); }

  std::size_t add_into(Index src, Index dst) override {
    const Column& s = cols_[src];
    Column& d = cols_[dst];
    scratch_.clear();
    std::set_symmetric_difference(d.begin(), d.end(), s.begin(), s.end(),
                                  std::back_inserter(scratch_));
    d.swap(scratch_);
    return s.size();
  }

  std::optional<Index> pivot(Index j) override {
    if (cols_[j].empty()) return std::nullopt;
    return cols_[j].back();
  }

  std::size_t size_exact(Index j) override { return cols_[j].size(); }
  void swap_slots(Index a, Index b) override { cols_[a].swap(cols_[b]); }
  void clear_slot(Index j) override { Column().swap(cols_[j]); }

  void set_entries(Index j, std::span<const Index> rows) override {
    cols_[j].assign(rows.begin(), rows.end());
  }

  void entries_sorted(Index j, std::vector<Index>& out) override { out = cols_[j]; }

  std::size_t remove_entries(Index j, std::span<const Index> rows) override {
    Column& c = cols_[j];
    const std::size_t before = c.size();
    scratch_.clear();
    std::set_difference(c.begin(), c.end(), rows.begin(), rows.end(),
                        std::back_inserter(scratch_));
    c.swap(scratch_);
    return before - c.size();
  }

 private:
  std::vector<Column> cols_;
  Column scratch_;
};

}  // namespace

std::unique_ptr<ColumnStore> make_vector_store(const BoundaryMatrix& m) {
  return std::make_unique<VectorStore>(m);
}

}  // namespace zred::stores
