#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zred/column_store.hpp"
#include "zred/pairing.hpp"

namespace zred {

enum class Phase { pivot_search, post_pivot, backward };
std::string_view to_string(Phase p);

/// One column addition R_dst += R_src.
struct AdditionEvent {
  std::uint64_t seq = 0;
  Index src = kNoIndex;
  Index dst = kNoIndex;
  std::size_t bitflips = 0;  // |R_src| at addition time
  Phase phase = Phase::pivot_search;
  Index outer_step = kNoIndex;  // column being processed by the main loop
  std::size_t dst_size_after = 0;
  std::vector<Index> flipped_rows;  // rows of R_src; only filled when tracing
};

enum class ColumnEventKind {
  compress,  // rows removed from `column`
  clear,     // `column` zeroed; rows are its former entries
  swap,      // slots `column` and `other` exchanged
  pivot,     // `column` registered with pivot row `other`; size = |column|
  restore,   // `column` overwritten with a smaller earlier snapshot (mix)
};
std::string_view to_string(ColumnEventKind k);

/// A non-addition event. None of these count as bitflips.
struct ColumnEvent {
  std::uint64_t seq = 0;
  ColumnEventKind kind = ColumnEventKind::compress;
  Index column = kNoIndex;
  Index other = kNoIndex;
  std::size_t size = 0;
  Index outer_step = kNoIndex;
  std::vector<Index> rows;
};

/// Both streams share one sequence counter, so they can be merged in order.
struct Trace {
  std::vector<AdditionEvent> additions;
  std::vector<ColumnEvent> column_events;
};

struct ReductionStats {
  std::size_t fill_up = 0;
  std::size_t col_ops = 0;
  std::size_t bitflips = 0;
  std::size_t forward_bitflips = 0;
  std::size_t backward_bitflips = 0;
  std::size_t peak_column_size = 0;
  std::size_t swaps = 0;
  std::size_t cleared_columns = 0;
  std::size_t compressed_entries = 0;
  double wall_ms = 0.0;

  /// Every field except wall time.
  bool same_counts(const ReductionStats& o) const noexcept;
};

/// Counters are always maintained; the full event log only when requested,
/// since it costs memory proportional to the number of bitflips.
class Recorder {
 public:
  explicit Recorder(bool keep_trace) : keep_trace_(keep_trace) {}

  bool keeps_trace() const noexcept { return keep_trace_; }

  void note_initial_size(std::size_t size);
  void addition(Index src, Index dst, std::size_t bitflips, std::size_t dst_size_after, Phase phase,
                Index outer_step, std::vector<Index> flipped_rows);
  void column_event(ColumnEventKind kind, Index column, Index other, std::size_t size,
                    Index outer_step, std::vector<Index> rows);

  const ReductionStats& counters() const noexcept { return stats_; }
  const Trace& trace() const noexcept { return trace_; }
  Trace take_trace() { return std::move(trace_); }

 private:
  bool keep_trace_;
  std::uint64_t next_seq_ = 0;
  ReductionStats stats_;
  Trace trace_;
};

/// Aggregates counters from a full trace of a run on `initial` and measures
/// fill-up on the final store.
ReductionStats finalize_stats(const BoundaryMatrix& initial, const Trace& trace, ColumnStore& store);

/// Sum of size_exact over all slots.
std::size_t fill_up(ColumnStore& store);

/// Interval/forward classification of a single flipped entry.
struct BitflipClass {
  bool interval = false;
  bool forward = false;
  friend bool operator==(const BitflipClass&, const BitflipClass&) = default;
};

/// death_of(i) for every birth i of the extended pairing (essential deaths are n).
class ExtendedPairLookup {
 public:
  ExtendedPairLookup(const PersistencePairing& p, std::size_t n);
  /// kNoIndex for negative indices.
  Index death_of(Index birth) const { return death_[birth]; }
  std::size_t size() const noexcept { return death_.size(); }

 private:
  std::vector<Index> death_;
};

/// A flip of row i during R_dst += R_src is interval iff both src and dst lie
/// in (i, death(i)]. Throws std::invalid_argument when i has no extended pair.
BitflipClass classify_bitflip(const AdditionEvent& event, Index flipped_row,
                              const ExtendedPairLookup& pairs);

std::string stats_to_json(const ReductionStats& s);
/// One JSON object per line: additions carry seq/src/dst/bitflips/phase,
/// column events carry seq/event/column. Indices are 1-based.
void write_trace_jsonl(const Trace& trace, std::ostream& out);

}  // namespace zred
