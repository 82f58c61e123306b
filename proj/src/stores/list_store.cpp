#include <list>

#include "stores.hpp"

namespace zred::stores {
namespace {

// Sorted linked list per column; additions merge in place, cancelling
// double occurrences.
class ListStore final : public ColumnStore {
 public:
  explicit ListStore(const BoundaryMatrix& m) : cols_(m.size()) {
    for (Index j = 0; j < m.size(); ++j) cols_[j].assign(m.column(j).begin(), m.column(j).end());
  }

  std::size_t num_columns() const noexcept override { return cols_.size(); }

  std::size_t add_into(Index src, Index dst) override {
    const auto& s = cols_[src];
    auto& d = cols_[dst];
    auto it = d.begin();
    for (Index r : s) {
      while (it != d.end() && *it < r) ++it;
      if (it != d.end() && *it == r)
        it = d.erase(it);
      else
        d.insert(it, r);
    }
    return s.size();
  }

  std::optional<Index> pivot(Index j) override {
    if (cols_[j].empty()) return std::nullopt;
    return cols_[j].back();
  }

  std::size_t size_exact(Index j) override { return cols_[j].size(); }
  void swap_slots(Index a, Index b) override { cols_[a].swap(cols_[b]); }
  void clear_slot(Index j) override { cols_[j].clear(); }

  void set_entries(Index j, std::span<const Index> rows) override {
    cols_[j].assign(rows.begin(), rows.end());
  }

  void entries_sorted(Index j, std::vector<Index>& out) override {
    out.assign(cols_[j].begin(), cols_[j].end());
  }

  std::size_t remove_entries(Index j, std::span<const Index> rows) override {
    auto& c = cols_[j];
    std::size_t removed = 0;
    auto it = c.begin();
    for (Index r : rows) {
      while (it != c.end() && *it < r) ++it;
      if (it != c.end() && *it == r) {
        it = c.erase(it);
        ++removed;
      }
    }
    return removed;
  }

 private:
  std::vector<std::list<Index>> cols_;
};

}  // namespace

std::unique_ptr<ColumnStore> make_list_store(const BoundaryMatrix& m) {
  return std::make_unique<ListStore>(m);
}

}  // namespace zred::stores
