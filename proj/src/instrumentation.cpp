#include "zred/instrumentation.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace zred {

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::pivot_search: return "pivot_search";
    case Phase::post_pivot: return "post_pivot";
    case Phase::backward: return "backward";
  }
  return "?";
}

std::string_view to_string(ColumnEventKind k) {
  switch (k) {
    case ColumnEventKind::compress: return "compress";
    case ColumnEventKind::clear: return "clear";
    case ColumnEventKind::swap: return "swap";
    case ColumnEventKind::pivot: return "pivot";
    case ColumnEventKind::restore: return "restore";
  }
  return "?";
}

bool ReductionStats::same_counts(const ReductionStats& o) const noexcept {
  return fill_up == o.fill_up && col_ops == o.col_ops && bitflips == o.bitflips &&
         forward_bitflips == o.forward_bitflips && backward_bitflips == o.backward_bitflips &&
         peak_column_size == o.peak_column_size && swaps == o.swaps &&
         cleared_columns == o.cleared_columns && compressed_entries == o.compressed_entries;
}

void Recorder::note_initial_size(std::size_t size) {
  stats_.peak_column_size = std::max(stats_.peak_column_size, size);
}

void Recorder::addition(Index src, Index dst, std::size_t bitflips, std::size_t dst_size_after,
                        Phase phase, Index outer_step, std::vector<Index> flipped_rows) {
  ++stats_.col_ops;
  stats_.bitflips += bitflips;
  (src < dst ? stats_.forward_bitflips : stats_.backward_bitflips) += bitflips;
  stats_.peak_column_size = std::max(stats_.peak_column_size, dst_size_after);
  const std::uint64_t seq = next_seq_++;
  if (!keep_trace_) return;
  trace_.additions.push_back(
      {seq, src, dst, bitflips, phase, outer_step, dst_size_after, std::move(flipped_rows)});
}

void Recorder::column_event(ColumnEventKind kind, Index column, Index other, std::size_t size,
                            Index outer_step, std::vector<Index> rows) {
  switch (kind) {
    case ColumnEventKind::swap: ++stats_.swaps; break;
    case ColumnEventKind::clear: ++stats_.cleared_columns; break;
    case ColumnEventKind::compress: stats_.compressed_entries += size; break;
    default: break;
  }
  const std::uint64_t seq = next_seq_++;
  if (!keep_trace_) return;
  trace_.column_events.push_back({seq, kind, column, other, size, outer_step, std::move(rows)});
}

std::size_t fill_up(ColumnStore& store) {
  std::size_t total = 0;
  for (Index j = 0; j < store.num_columns(); ++j) total += store.size_exact(j);
  return total;
}

ReductionStats finalize_stats(const BoundaryMatrix& initial, const Trace& trace,
                              ColumnStore& store) {
  ReductionStats s;
  for (Index j = 0; j < initial.size(); ++j)
    s.peak_column_size = std::max(s.peak_column_size, initial.column(j).size());
  for (const auto& a : trace.additions) {
    ++s.col_ops;
    s.bitflips += a.bitflips;
    (a.src < a.dst ? s.forward_bitflips : s.backward_bitflips) += a.bitflips;
    s.peak_column_size = std::max(s.peak_column_size, a.dst_size_after);
  }
  for (const auto& e : trace.column_events) {
    switch (e.kind) {
      case ColumnEventKind::swap: ++s.swaps; break;
      case ColumnEventKind::clear: ++s.cleared_columns; break;
      case ColumnEventKind::compress: s.compressed_entries += e.size; break;
      default: break;
    }
  }
  s.fill_up = fill_up(store);
  return s;
}

ExtendedPairLookup::ExtendedPairLookup(const PersistencePairing& p, std::size_t n)
    : death_(n, kNoIndex) {
  for (const auto& pr : p.pairs) death_.at(pr.birth) = pr.death;
  for (Index e : p.essential) death_.at(e) = static_cast<Index>(n);
}

BitflipClass classify_bitflip(const AdditionEvent& event, Index flipped_row,
                              const ExtendedPairLookup& pairs) {
  if (flipped_row >= pairs.size() || pairs.death_of(flipped_row) == kNoIndex)
    throw std::invalid_argument("row " + std::to_string(flipped_row + 1) +
                                " is not a birth of the extended pairing");
  const Index death = pairs.death_of(flipped_row);
  auto inside = [&](Index c) { return flipped_row < c && c <= death; };
  return {inside(event.src) && inside(event.dst), event.src < event.dst};
}

std::string stats_to_json(const ReductionStats& s) {
  nlohmann::ordered_json j;
  j["fill_up"] = s.fill_up;
  j["col_ops"] = s.col_ops;
  j["bitflips"] = s.bitflips;
  j["forward_bitflips"] = s.forward_bitflips;
  j["backward_bitflips"] = s.backward_bitflips;
  j["peak_column_size"] = s.peak_column_size;
  j["swaps"] = s.swaps;
  j["cleared_columns"] = s.cleared_columns;
  j["compressed_entries"] = s.compressed_entries;
  j["wall_ms"] = s.wall_ms;
  return j.dump();
}

void write_trace_jsonl(const Trace& trace, std::ostream& out) {
  auto one_based = [](const std::vector<Index>& rows) {
    std::vector<Index> r(rows);
    for (auto& x : r) ++x;
    return r;
  };
  auto a = trace.additions.begin();
  auto c = trace.column_events.begin();
  while (a != trace.additions.end() || c != trace.column_events.end()) {
    nlohmann::ordered_json j;
    const bool take_addition =
        c == trace.column_events.end() || (a != trace.additions.end() && a->seq < c->seq);
    if (take_addition) {
      j["seq"] = a->seq;
      j["src"] = a->src + 1;
      j["dst"] = a->dst + 1;
      j["bitflips"] = a->bitflips;
      j["phase"] = to_string(a->phase);
      j["outer_step"] = a->outer_step + 1;
      j["dst_size_after"] = a->dst_size_after;
      if (!a->flipped_rows.empty()) j["rows"] = one_based(a->flipped_rows);
      ++a;
    } else {
      j["seq"] = c->seq;
      j["event"] = to_string(c->kind);
      j["column"] = c->column + 1;
      if (c->other != kNoIndex) j["other"] = c->other + 1;
      j["size"] = c->size;
      if (c->outer_step != kNoIndex) j["outer_step"] = c->outer_step + 1;
      if (!c->rows.empty()) j["rows"] = one_based(c->rows);
      ++c;
    }
    out << j.dump() << '\n';
  }
}

}  // namespace zred
