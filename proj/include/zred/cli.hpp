#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zred/column_store.hpp"
#include "zred/generators.hpp"
#include "zred/instrumentation.hpp"
#include "zred/reducers.hpp"

namespace zred::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the `zred` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchGrid {
  std::vector<Family> families;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds{0};  // shuffled instances only
  std::vector<Algorithm> algorithms;
  std::vector<Representation> representations;
  std::vector<bool> dualize{false};
};

struct BenchRow {
  std::string instance;
  std::size_t n = 0;
  Algorithm algorithm = Algorithm::standard;
  Representation representation;
  bool dualize = false;
  ReductionStats stats;
  std::string status = "ok";
};

/// One row per grid cell in grid order (instance, algorithm, representation,
/// dualize). Cells run on up to `jobs` threads; a failing cell is reported in
/// its row's status and does not stop the others.
std::vector<BenchRow> run_bench(const BenchGrid& grid, unsigned jobs);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace zred::cli
