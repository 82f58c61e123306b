#include <algorithm>
#include <functional>

#include "stores.hpp"

namespace zred::stores {
namespace {

// Lazy max-heap per column. Additions push the source rows without looking
// for matches; a row present an even number of times is absent. Pivot
// queries cancel equal pairs at the top, and a full canonicalization runs on
// size/entry queries or when the heap grows past twice its last clean size.
class HeapStore final : public ColumnStore {
 public:
  explicit HeapStore(const BoundaryMatrix& m) : heaps_(m.size()), clean_size_(m.size()) {
    for (Index j = 0; j < m.size(); ++j) assign_sorted(j, m.column(j));
  }

  std::size_t num_columns() const noexcept override { return heaps_.size(); }

  std::size_t add_into(Index src, Index dst) override {
    canonicalize(src);
    const auto& s = heaps_[src];
    auto& d = heaps_[dst];
    for (Index r : s) {
      d.push_back(r);
      std::push_heap(d.begin(), d.end());
    }
    if (d.size() > 2 * clean_size_[dst] + 32) canonicalize(dst);
    return s.size();
  }

  std::optional<Index> pivot(Index j) override {
    auto& h = heaps_[j];
    while (!h.empty()) {
      const Index top = h.front();
      std::pop_heap(h.begin(), h.end());
      h.pop_back();
      if (!h.empty() && h.front() == top) {
        std::pop_heap(h.begin(), h.end());
        h.pop_back();
        continue;
      }
      h.push_back(top);
      std::push_heap(h.begin(), h.end());
      return top;
    }
    return std::nullopt;
  }

  std::size_t size_exact(Index j) override {
    canonicalize(j);
    return heaps_[j].size();
  }

  void swap_slots(Index a, Index b) override {
    heaps_[a].swap(heaps_[b]);
    std::swap(clean_size_[a], clean_size_[b]);
  }

  void clear_slot(Index j) override {
    heaps_[j].clear();
    clean_size_[j] = 0;
  }

  void set_entries(Index j, std::span<const Index> rows) override { assign_sorted(j, rows); }

  void entries_sorted(Index j, std::vector<Index>& out) override {
    canonicalize(j);
    out.assign(heaps_[j].rbegin(), heaps_[j].rend());
  }

  std::size_t remove_entries(Index j, std::span<const Index> rows) override {
    canonicalize(j);
    auto& h = heaps_[j];  // descending
    const std::size_t before = h.size();
    std::erase_if(h, [&](Index r) { return std::binary_search(rows.begin(), rows.end(), r); });
    clean_size_[j] = h.size();
    return before - h.size();
  }

 private:
  std::vector<std::vector<Index>> heaps_;
  std::vector<std::size_t> clean_size_;

  void assign_sorted(Index j, std::span<const Index> ascending) {
    // A descending array is a valid max-heap.
    heaps_[j].assign(ascending.rbegin(), ascending.rend());
    clean_size_[j] = heaps_[j].size();
  }

  void canonicalize(Index j) {
    auto& h = heaps_[j];
    std::sort(h.begin(), h.end(), std::greater<>());
    std::size_t out = 0;
    for (std::size_t k = 0; k < h.size();) {
      std::size_t run = k;
      while (run < h.size() && h[run] == h[k]) ++run;
      if ((run - k) % 2 == 1) h[out++] = h[k];
      k = run;
    }
    h.resize(out);
    clean_size_[j] = out;
  }
};

}  // namespace

std::unique_ptr<ColumnStore> make_heap_store(const BoundaryMatrix& m) {
  return std::make_unique<HeapStore>(m);
}

}  // namespace zred::stores
