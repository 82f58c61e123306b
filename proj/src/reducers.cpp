#include "zred/reducers.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace zred {

namespace {

constexpr std::pair<Algorithm, std::string_view> kNames[] = {
    {Algorithm::standard, "standard"},     {Algorithm::twist, "twist"},
    {Algorithm::swap, "swap"},             {Algorithm::exhaustive, "exhaustive"},
    {Algorithm::retrospective, "retro"},   {Algorithm::mix, "mix"},
};

// Shared state of one reduction run. `owner_[r]` is the slot whose pivot is
// row r; `negative_[j]` marks columns registered with
// a pivot, which are exactly the rows compression may remove.
class Reduction {
 public:
  Reduction(const BoundaryMatrix& m, ColumnStore& store, const ReduceOptions& opts)
      : m_(m),
        store_(store),
        opts_(opts),
        rec_(opts.record_trace),
        owner_(m.size(), kNoIndex),
        negative_(m.size(), false) {
    if (store.num_columns() != m.size())
      throw std::invalid_argument("store size does not match matrix size");
    for (Index j = 0; j < m.size(); ++j) rec_.note_initial_size(store_.size_exact(j));
  }

  void run(Algorithm a) {
    switch (a) {
      case Algorithm::standard:
        for (Index j = 0; j < m_.size(); ++j) {
          left_to_right(j, false);
          settle(j, j);
        }
        break;
      case Algorithm::twist: by_dimension(false); break;
      case Algorithm::swap: by_dimension(true); break;
      case Algorithm::exhaustive: exhaustive(false); break;
      case Algorithm::mix: exhaustive(true); break;
      case Algorithm::retrospective: retrospective(); break;
    }
  }

  ReductionResult finish() {
    std::vector<Index> pivot_of(m_.size(), kNoIndex);
    for (Index r = 0; r < m_.size(); ++r)
      if (owner_[r] != kNoIndex) pivot_of[owner_[r]] = r;
    ReductionResult out;
    out.pairing = pairing_from_pivots(pivot_of);
    out.stats = rec_.counters();
    out.stats.fill_up = fill_up(store_);
    out.trace = rec_.take_trace();
    return out;
  }

 private:
  const BoundaryMatrix& m_;
  ColumnStore& store_;
  ReduceOptions opts_;
  Recorder rec_;
  std::vector<Index> owner_;
  std::vector<bool> negative_;
  std::vector<Index> scratch_;

  void add(Index src, Index dst, Phase phase, Index outer) {
    std::vector<Index> rows;
    if (rec_.keeps_trace()) store_.entries_sorted(src, rows);
    const std::size_t flips = store_.add_into(src, dst);
    rec_.addition(src, dst, flips, store_.size_exact(dst), phase, outer, std::move(rows));
  }

  // Adds earlier columns sharing the pivot until the pivot of j is new or j is zero.
  void left_to_right(Index j, bool allow_swap) {
    for (auto p = store_.pivot(j); p && owner_[*p] != kNoIndex; p = store_.pivot(j)) {
      const Index k = owner_[*p];
      if (allow_swap && store_.size_exact(j) < store_.size_exact(k)) {
        store_.swap_slots(j, k);
        rec_.column_event(ColumnEventKind::swap, j, k, 0, j, {});
      }
      add(k, j, Phase::pivot_search, j);
    }
  }

  // Registers the pivot of a reduced column j, if it has one.
  std::optional<Index> settle(Index j, Index outer) {
    const auto p = store_.pivot(j);
    if (!p) return std::nullopt;
    owner_[*p] = j;
    negative_[j] = true;
    rec_.column_event(ColumnEventKind::pivot, j, *p, store_.size_exact(j), outer, {});
    return p;
  }

  void by_dimension(bool allow_swap) {
    std::vector<Index> order(m_.size());
    for (Index j = 0; j < m_.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return m_.dim(a) > m_.dim(b); });
    std::vector<bool> cleared(m_.size(), false);
    for (Index j : order) {
      if (cleared[j]) continue;
      left_to_right(j, allow_swap);
      const auto p = settle(j, j);
      if (p && opts_.clearing) {
        clear_column(store_, *p, &rec_, j);
        cleared[*p] = true;
      }
    }
  }

  void compress(Index j) {
    if (opts_.compression) compress_column(store_, j, negative_, &rec_, j);
  }

  // Largest row of `rows` below `bound` that is some other column's pivot.
  Index actionable_below(const std::vector<Index>& rows, Index bound, Index self) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), bound);
    while (it != rows.begin()) {
      --it;
      const Index owner = owner_[*it];
      if (owner != kNoIndex && owner != self) return *it;
    }
    return kNoIndex;
  }

  void exhaustive(bool keep_smallest) {
    std::vector<Index> best;
    for (Index j = 0; j < m_.size(); ++j) {
      compress(j);
      left_to_right(j, false);
      const auto p = settle(j, j);
      if (!p) continue;
      std::size_t best_size = store_.size_exact(j);
      if (keep_smallest) store_.entries_sorted(j, best);
      Index bound = *p;
      for (;;) {
        store_.entries_sorted(j, scratch_);
        const Index row = actionable_below(scratch_, bound, j);
        if (row == kNoIndex) break;
        add(owner_[row], j, Phase::post_pivot, j);
        bound = row;
        if (keep_smallest) {
          const std::size_t size = store_.size_exact(j);
          if (size < best_size) {
            best_size = size;
            store_.entries_sorted(j, best);
          }
        }
      }
      if (keep_smallest && store_.size_exact(j) != best_size) {
        store_.set_entries(j, best);
        rec_.column_event(ColumnEventKind::restore, j, kNoIndex, best_size, j,
                          rec_.keeps_trace() ? best : std::vector<Index>{});
      }
    }
  }

  // Recursive Reduce(k) with an explicit stack. A frame resumes its scan below
  // `bound`, since entries above the last eliminated row never change.
  // stamp_[k] == j means Reduce(k) already ran to completion during outer
  // step j, so re-running it would add nothing.
  void retrospective() {
    struct Frame {
      Index col;
      Index bound;
    };
    std::vector<Index> stamp(m_.size(), kNoIndex);
    std::vector<Frame> stack;
    for (Index j = 0; j < m_.size(); ++j) {
      compress(j);
      stack.push_back({j, kNoIndex});
      while (!stack.empty()) {
        Frame& f = stack.back();
        store_.entries_sorted(f.col, scratch_);
        const Index row = actionable_below(scratch_, f.bound, f.col);
        if (row == kNoIndex) {
          stamp[f.col] = j;
          stack.pop_back();
          continue;
        }
        const Index src = owner_[row];
        if (stamp[src] != j) {
          stack.push_back({src, kNoIndex});
          continue;
        }
        const Index dst = f.col;
        f.bound = row;
        Phase phase = Phase::post_pivot;
        if (src > dst)
          phase = Phase::backward;
        else if (row == scratch_.back())
          phase = Phase::pivot_search;
        add(src, dst, phase, j);
      }
      settle(j, j);
    }
  }
};

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  for (auto [id, name] : kNames)
    if (id == a) return name;
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto [id, n] : kNames)
    if (n == name) return id;
  std::string msg = "unknown algorithm '" + std::string(name) + "'; valid names:";
  for (auto [id, n] : kNames) msg += " " + std::string(n);
  throw std::invalid_argument(msg);
}

std::vector<Algorithm> all_algorithms() {
  std::vector<Algorithm> out;
  for (auto [id, name] : kNames) out.push_back(id);
  return out;
}

std::size_t compress_column(ColumnStore& store, Index j, const std::vector<bool>& negative,
                            Recorder* recorder, Index outer_step) {
  std::vector<Index> rows = store.entries_sorted(j);
  std::erase_if(rows, [&](Index r) { return !negative[r]; });
  if (rows.empty()) return 0;
  const std::size_t removed = store.remove_entries(j, rows);
  if (recorder)
    recorder->column_event(ColumnEventKind::compress, j, kNoIndex, removed, outer_step,
                           recorder->keeps_trace() ? std::move(rows) : std::vector<Index>{});
  return removed;
}

void clear_column(ColumnStore& store, Index i, Recorder* recorder, Index outer_step) {
  std::vector<Index> rows;
  if (recorder) store.entries_sorted(i, rows);
  store.clear_slot(i);
  if (recorder)
    recorder->column_event(ColumnEventKind::clear, i, kNoIndex, rows.size(), outer_step,
                           recorder->keeps_trace() ? std::move(rows) : std::vector<Index>{});
}

ReductionResult reduce(const BoundaryMatrix& m, ColumnStore& store, Algorithm algorithm,
                       const ReduceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Reduction r(m, store, options);
  r.run(algorithm);
  ReductionResult out = r.finish();
  out.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ReductionResult reduce(const BoundaryMatrix& m, Algorithm algorithm, Representation rep,
                       const ReduceOptions& options) {
  auto store = make_store(m, rep);
  return reduce(m, *store, algorithm, options);
}

ReductionResult reduce_dualized(const BoundaryMatrix& m, Algorithm algorithm, Representation rep,
                                const ReduceOptions& options) {
  const BoundaryMatrix dual = anti_transpose(m);
  ReductionResult out = reduce(dual, algorithm, rep, options);
  out.pairing = map_dual_pairs(out.pairing, m.size());
  return out;
}

}  // namespace zred
