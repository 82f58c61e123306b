#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "support.hpp"
#include "zred/reducers.hpp"

using namespace zred;
using zred::testing::triangle;

namespace {

// Replays a trace on plain std::set columns, checking every event against
// the replayed state. Returns the final columns.
std::vector<std::set<Index>> replay(const BoundaryMatrix& m, const Trace& t) {
  std::vector<std::set<Index>> cols;
  for (Index j = 0; j < m.size(); ++j) cols.emplace_back(m.column(j).begin(), m.column(j).end());
  auto a = t.additions.begin();
  auto c = t.column_events.begin();
  std::uint64_t expect_seq = 0;
  while (a != t.additions.end() || c != t.column_events.end()) {
    const bool addition =
        c == t.column_events.end() || (a != t.additions.end() && a->seq < c->seq);
    if (addition) {
      REQUIRE(a->seq == expect_seq);
      auto& dst = cols[a->dst];
      const auto& src = cols[a->src];
      REQUIRE(a->flipped_rows == std::vector<Index>(src.begin(), src.end()));
      REQUIRE(a->bitflips == src.size());
      for (Index r : src)
        if (!dst.erase(r)) dst.insert(r);
      REQUIRE(a->dst_size_after == dst.size());
      ++a;
    } else {
      REQUIRE(c->seq == expect_seq);
      auto& col = cols[c->column];
      switch (c->kind) {
        case ColumnEventKind::compress:
          REQUIRE(c->size == c->rows.size());
          for (Index r : c->rows) REQUIRE(col.erase(r) == 1);
          break;
        case ColumnEventKind::clear:
          REQUIRE(c->rows == std::vector<Index>(col.begin(), col.end()));
          col.clear();
          break;
        case ColumnEventKind::swap: std::swap(col, cols[c->other]); break;
        case ColumnEventKind::pivot:
          REQUIRE(!col.empty());
          REQUIRE(*col.rbegin() == c->other);
          REQUIRE(c->size == col.size());
          break;
        case ColumnEventKind::restore:
          REQUIRE(c->size == c->rows.size());
          REQUIRE(c->size < col.size());
          col = {c->rows.begin(), c->rows.end()};
          break;
      }
      ++c;
    }
    ++expect_seq;
  }
  return cols;
}

}  // namespace

TEST_CASE("traces replay to the final store on every algorithm") {
  ReduceOptions opts;
  opts.record_trace = true;
  for (const auto& m : zred::testing::small_corpus())
    for (Algorithm a : all_algorithms()) {
      CAPTURE(algorithm_name(a));
      auto store = make_store(m, Representation::parse("list"));
      const auto r = reduce(m, *store, a, opts);
      const auto cols = replay(m, r.trace);
      for (Index j = 0; j < m.size(); ++j)
        REQUIRE(store->entries_sorted(j) == std::vector<Index>(cols[j].begin(), cols[j].end()));

      const auto agg = finalize_stats(m, r.trace, *store);
      CHECK(agg.same_counts(r.stats));
      std::size_t peak = 0;
      for (Index j = 0; j < m.size(); ++j) peak = std::max(peak, m.column(j).size());
      for (const auto& e : r.trace.additions) peak = std::max(peak, e.dst_size_after);
      CHECK(r.stats.peak_column_size == peak);
      CHECK(r.stats.forward_bitflips + r.stats.backward_bitflips == r.stats.bitflips);
    }
}

TEST_CASE("counters do not depend on tracing") {
  ReduceOptions traced;
  traced.record_trace = true;
  for (const auto& m : zred::testing::small_corpus())
    for (Algorithm a : all_algorithms()) {
      const auto with = reduce(m, a, {}, traced);
      const auto without = reduce(m, a, {});
      CHECK(with.stats.same_counts(without.stats));
      CHECK(without.trace.additions.empty());
      CHECK(without.trace.column_events.empty());
    }
}

TEST_CASE("bitflip classification") {
  const PersistencePairing p{{{1, 3}, {2, 4}, {5, 6}}, {0}};
  const ExtendedPairLookup lookup(p, 7);
  CHECK(lookup.death_of(0) == 7);
  CHECK(lookup.death_of(5) == 6);
  CHECK(lookup.death_of(3) == kNoIndex);

  AdditionEvent e;
  // Row 6 (pair 6-7) flipped by adding column 5 into column 6.
  e.src = 4;
  e.dst = 5;
  CHECK(classify_bitflip(e, 5, lookup) == BitflipClass{false, true});
  // Row 1 (essential, death 8) flipped by adding column 3 into column 6.
  e.src = 2;
  CHECK(classify_bitflip(e, 0, lookup) == BitflipClass{true, true});
  // Backward addition 6 -> 3 inside pair 2-4.
  e.src = 5;
  e.dst = 2;
  CHECK(classify_bitflip(e, 1, lookup) == BitflipClass{false, false});
  e.src = 3;
  e.dst = 2;
  CHECK(classify_bitflip(e, 1, lookup) == BitflipClass{true, false});
  // Upper end of the interval is inclusive, the lower end is not.
  e.src = 1;
  e.dst = 3;
  CHECK_FALSE(classify_bitflip(e, 1, lookup).interval);

  CHECK_THROWS_AS(classify_bitflip(e, 3, lookup), std::invalid_argument);
  CHECK_THROWS_AS(classify_bitflip(e, 9, lookup), std::invalid_argument);
}

TEST_CASE("phase names") {
  CHECK(to_string(Phase::pivot_search) == "pivot_search");
  CHECK(to_string(Phase::post_pivot) == "post_pivot");
  CHECK(to_string(Phase::backward) == "backward");
  CHECK(to_string(ColumnEventKind::restore) == "restore");
}

TEST_CASE("stats json") {
  const auto r = reduce(triangle(), Algorithm::retrospective, {});
  const auto j = nlohmann::json::parse(stats_to_json(r.stats));
  CHECK(j.at("bitflips") == 4);
  CHECK(j.at("col_ops") == 2);
  CHECK(j.at("fill_up") == 5);
  CHECK(j.at("backward_bitflips") == 0);
  CHECK(j.at("wall_ms").is_number());
}

TEST_CASE("trace jsonl is ordered and 1-based") {
  ReduceOptions opts;
  opts.record_trace = true;
  const auto r = reduce(triangle(), Algorithm::retrospective, {}, opts);
  std::stringstream out;
  write_trace_jsonl(r.trace, out);
  std::vector<nlohmann::json> lines;
  for (std::string line; std::getline(out, line);) lines.push_back(nlohmann::json::parse(line));
  REQUIRE(lines.size() == r.trace.additions.size() + r.trace.column_events.size());
  for (std::size_t k = 0; k < lines.size(); ++k) CHECK(lines[k].at("seq") == k);

  // Vertex columns emit nothing; edge 4 registers pivot 2 first.
  bool saw_addition = false;
  for (const auto& j : lines) {
    if (j.contains("src")) {
      saw_addition = true;
      CHECK(j.at("dst") == 6);
      CHECK(j.at("phase") == "pivot_search");
      CHECK(j.at("bitflips") == 2);
    }
  }
  CHECK(saw_addition);
  CHECK(lines.front().at("event") == "pivot");
  CHECK(lines.front().at("column") == 4);
  CHECK(lines.front().at("other") == 2);
}
