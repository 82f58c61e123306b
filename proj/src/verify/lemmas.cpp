#include <set>
#include <stdexcept>
#include <string>

#include "zred/betti.hpp"
#include "zred/verify.hpp"

namespace zred {

namespace {

std::string one_based(Index k) { return std::to_string(k + 1); }

}  // namespace

LemmaReport check_trace_lemmas(const Trace& trace, const PersistencePairing& p,
                               const std::vector<std::size_t>& counts) {
  const std::size_t n = counts.size();
  const BettiProfile betti(p, n);
  const ExtendedPairLookup lookup(p, n);

  // Bound on |R_j| once pivoted, indexed by j.
  std::vector<std::size_t> pivoted_cap(n, 0);
  {
    std::vector<std::pair<Index, Index>> queries;
    for (const auto& pr : p.pairs) queries.emplace_back(pr.birth, pr.death);
    const auto pers = betti.persistent_batch(queries);
    for (std::size_t k = 0; k < p.pairs.size(); ++k) pivoted_cap[p.pairs[k].death] = 1 + pers[k];
  }

  std::vector<std::uint64_t> pivot_seq(n, UINT64_MAX);
  for (const auto& e : trace.column_events)
    if (e.kind == ColumnEventKind::pivot) pivot_seq[e.column] = e.seq;

  LemmaReport report;
  auto fail = [&](bool& flag, const char* check, std::uint64_t seq, std::string detail) {
    if (!flag) return;
    flag = false;
    report.violations.push_back({check, seq, std::move(detail)});
  };

  std::set<std::pair<Index, Index>> seen;
  for (const auto& a : trace.additions) {
    ++report.additions;
    const bool forward = a.src < a.dst;
    const std::string where = one_based(a.src) + "->" + one_based(a.dst);

    if (!seen.insert({a.src, a.dst}).second)
      fail(report.pairs_added_once, "pairs_added_once", a.seq, "repeated addition " + where);

    std::size_t non_interval = 0;
    for (Index row : a.flipped_rows) {
      BitflipClass c;
      try {
        c = classify_bitflip(a, row, lookup);
      } catch (const std::invalid_argument&) {
        fail(report.backward_flips_interval, "backward_flips_interval", a.seq,
             "row " + one_based(row) + " has no extended pair");
        continue;
      }
      if (c.interval) {
        ++report.interval_flips;
      } else {
        ++report.non_interval_flips;
        ++non_interval;
        if (!forward)
          fail(report.backward_flips_interval, "backward_flips_interval", a.seq,
               "non-interval flip of row " + one_based(row) + " in " + where);
      }
    }
    if (forward && non_interval > 1)
      fail(report.forward_single_non_interval, "forward_single_non_interval", a.seq,
           std::to_string(non_interval) + " non-interval flips in " + where);

    const bool pivoted = pivot_seq[a.dst] < a.seq;
    if (pivoted && a.dst_size_after > pivoted_cap[a.dst])
      fail(report.pivoted_size_bounded, "pivoted_size_bounded", a.seq,
           "column " + one_based(a.dst) + " has " + std::to_string(a.dst_size_after) +
               " entries, cap " + std::to_string(pivoted_cap[a.dst]));
    const std::size_t peak_cap = counts[a.dst] + betti.beta(a.dst);
    if (a.dst_size_after > peak_cap)
      fail(report.peak_size_bounded, "peak_size_bounded", a.seq,
           "column " + one_based(a.dst) + " has " + std::to_string(a.dst_size_after) +
               " entries, cap " + std::to_string(peak_cap));
    if (pivoted == forward)
      fail(report.pivot_search_then_backward, "pivot_search_then_backward", a.seq,
           (pivoted ? "forward addition after pivot: " : "backward addition before pivot: ") +
               where);
  }
  return report;
}

}  // namespace zred
