#include <set>

#include "stores.hpp"

namespace zred::stores {
namespace {

// Balanced search tree per column: each source entry is looked up in the
// destination and inserted or erased, so an addition costs O(|src| log |dst|).
class SetStore final : public ColumnStore {
 public:
  explicit SetStore(const BoundaryMatrix& m) : cols_(m.size()) {
    for (Index j = 0; j < m.size(); ++j) cols_[j].insert(m.column(j).begin(), m.column(j).end());
  }

  std::size_t num_columns() const noexcept override { return cols_.size(); }

  std::size_t add_into(Index src, Index dst) override {
    const auto& s = cols_[src];
    auto& d = cols_[dst];
    for (Index r : s) {
      auto [it, inserted] = d.insert(r);
      if (!inserted) d.erase(it);
    }
    return s.size();
  }

  std::optional<Index> pivot(Index j) override {
    if (cols_[j].empty()) return std::nullopt;
    return *cols_[j].rbegin();
  }

  std::size_t size_exact(Index j) override { return cols_[j].size(); }
  void swap_slots(Index a, Index b) override { cols_[a].swap(cols_[b]); }
  void clear_slot(Index j) override { cols_[j].clear(); }

  void set_entries(Index j, std::span<const Index> rows) override {
    cols_[j] = std::set<Index>(rows.begin(), rows.end());
  }

  void entries_sorted(Index j, std::vector<Index>& out) override {
    out.assign(cols_[j].begin(), cols_[j].end());
  }

  std::size_t remove_entries(Index j, std::span<const Index> rows) override {
    std::size_t removed = 0;
    for (Index r : rows) removed += cols_[j].erase(r);
    return removed;
  }

 private:
  std::vector<std::set<Index>> cols_;
};

}  // namespace

std::unique_ptr<ColumnStore> make_set_store(const BoundaryMatrix& m) {
  return std::make_unique<SetStore>(m);
}

}  // namespace zred::stores
