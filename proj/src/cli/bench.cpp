#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "zred/cli.hpp"

namespace zred::cli {

namespace {

struct Instance {
  std::string name;
  GeneratorSpec spec;
};

std::vector<Instance> instances(const BenchGrid& grid) {
  std::vector<Instance> out;
  for (Family f : grid.families)
    for (std::size_t n : grid.sizes) {
      if (f != Family::shuffled) {
        out.push_back({std::string(family_name(f)), {f, n, 0}});
        continue;
      }
      for (std::uint64_t seed : grid.seeds)
        out.push_back({"shuffled-" + std::to_string(seed), {f, n, seed}});
    }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchGrid& grid, unsigned jobs) {
  const auto insts = instances(grid);
  std::vector<BenchRow> rows;
  std::vector<std::size_t> instance_of;
  for (std::size_t k = 0; k < insts.size(); ++k)
    for (Algorithm a : grid.algorithms)
      for (const auto& rep : grid.representations)
        for (bool dual : grid.dualize) {
          rows.push_back({insts[k].name, insts[k].spec.n, a, rep, dual, {}, "ok"});
          instance_of.push_back(k);
        }

  // Cells own everything they touch; the only shared state is the work counter.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < rows.size(); c = next++) {
      BenchRow& row = rows[c];
      try {
        const BoundaryMatrix m = generate(insts[instance_of[c]].spec);
        const auto r = row.dualize ? reduce_dualized(m, row.algorithm, row.representation)
                                   : reduce(m, row.algorithm, row.representation);
        row.stats = r.stats;
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "instance,n,algorithm,representation,dualize,fill_up,col_ops,bitflips,"
         "forward_bitflips,backward_bitflips,peak_column_size,wall_ms,status\n";
  for (const auto& r : rows) {
    const auto& s = r.stats;
    out << csv_field(r.instance) << ',' << r.n << ',' << algorithm_name(r.algorithm) << ','
        << r.representation.name() << ',' << (r.dualize ? 1 : 0) << ',' << s.fill_up << ','
        << s.col_ops << ',' << s.bitflips << ',' << s.forward_bitflips << ','
        << s.backward_bitflips << ',' << s.peak_column_size << ',' << s.wall_ms << ','
        << csv_field(r.status) << '\n';
  }
}

}  // namespace zred::cli
