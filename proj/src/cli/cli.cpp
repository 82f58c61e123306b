#include "zred/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "zred/io.hpp"
#include "zred/verify.hpp"

namespace zred::cli {

namespace {

using json = nlohmann::ordered_json;

struct ReduceArgs {
  std::string input;
  std::string algorithm = "retro";
  std::string representation = "vector";
  bool dualize = false;
  std::string trace_path;
  std::string stats_path;
  std::string out_path;
};

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct BenchArgs {
  std::vector<std::string> families;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds{0};
  std::vector<std::string> algorithms{"standard", "twist", "swap", "exhaustive", "retro", "mix"};
  std::vector<std::string> representations{"vector"};
  std::string dualize = "primal";
  std::string csv_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

struct VerifyArgs {
  std::string input;
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> checks{"oracle", "bounds", "lemmas", "slopes"};
  std::vector<std::size_t> sizes{16, 32, 64, 128, 256};
  std::string representation = "vector";
};

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write(f);
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const Algorithm algorithm = parse_algorithm(a.algorithm);
  const Representation rep = Representation::parse(a.representation);
  const BoundaryMatrix m = load_boundary_matrix(std::filesystem::path(a.input));

  ReduceOptions opts;
  opts.record_trace = !a.trace_path.empty();
  const auto r = a.dualize ? reduce_dualized(m, algorithm, rep, opts) : reduce(m, algorithm, rep, opts);

  emit(a.out_path, out, [&](std::ostream& o) { write_pairing(r.pairing, o); });
  if (!a.stats_path.empty())
    emit(a.stats_path, out, [&](std::ostream& o) { o << stats_to_json(r.stats) << '\n'; });
  if (opts.record_trace) emit(a.trace_path, out, [&](std::ostream& o) { write_trace_jsonl(r.trace, o); });
  return kOk;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const BoundaryMatrix m = generate({parse_family(a.family), a.n, a.seed});
  emit(a.out_path, out, [&](std::ostream& o) { save_boundary_matrix(m, o); });
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchGrid grid;
  for (const auto& f : a.families) grid.families.push_back(parse_family(f));
  grid.sizes = a.sizes;
  grid.seeds = a.seeds;
  for (const auto& s : a.algorithms) grid.algorithms.push_back(parse_algorithm(s));
  for (const auto& s : a.representations) grid.representations.push_back(Representation::parse(s));
  if (a.dualize == "primal")
    grid.dualize = {false};
  else if (a.dualize == "dual")
    grid.dualize = {true};
  else if (a.dualize == "both")
    grid.dualize = {false, true};
  else
    throw std::invalid_argument("--dualize must be primal, dual or both");

  const auto rows = run_bench(grid, a.jobs);
  emit(a.csv_path, out, [&](std::ostream& o) { write_bench_csv(rows, o); });
  return kOk;
}

json oracle_check(const BoundaryMatrix& m, Representation rep) {
  json j{{"check", "oracle"}};
  PersistencePairing expected;
  try {
    expected = rank_oracle_pairs(m);
  } catch (const SizeGuardError& e) {
    j["pass"] = false;
    j["error"] = e.what();
    return j;
  }
  json mismatches = json::array();
  for (Algorithm a : all_algorithms())
    for (bool dual : {false, true}) {
      const auto r = dual ? reduce_dualized(m, a, rep) : reduce(m, a, rep);
      if (!(r.pairing == expected))
        mismatches.push_back(std::string(algorithm_name(a)) + (dual ? "/dual" : "/primal"));
    }
  j["pass"] = mismatches.empty();
  j["pairs"] = expected.pairs.size();
  j["essential"] = expected.essential.size();
  j["mismatches"] = mismatches;
  return j;
}

json bound_json(const char* name, const BoundCheck& b) {
  json j{{"check", name}, {"pass", b.holds}, {"bound", b.bound}, {"measured", b.measured},
         {"slack", b.slack()}};
  for (const auto& [term, value] : b.breakdown) j["breakdown"][term] = value;
  return j;
}

json lemma_check(const BoundaryMatrix& m, const ReductionResult& r) {
  const auto report = check_trace_lemmas(r.trace, r.pairing, column_counts(m));
  json j{{"check", "lemmas"},
         {"pass", report.ok()},
         {"additions", report.additions},
         {"interval_flips", report.interval_flips},
         {"non_interval_flips", report.non_interval_flips}};
  json v = json::array();
  for (const auto& x : report.violations)
    v.push_back({{"property", x.check}, {"seq", x.seq}, {"detail", x.detail}});
  j["violations"] = v;
  return j;
}

json slope_check(const std::optional<Family>& family, const std::vector<std::size_t>& sizes,
                 Representation rep) {
  json j{{"check", "slopes"}};
  if (!family || *family == Family::shuffled) {
    j["pass"] = true;
    j["skipped"] = "slopes need --family k1, k2, k3 or k4";
    return j;
  }
  bool pass = true;
  json fits = json::array();
  for (const auto& e : expected_separations()) {
    if (e.family != *family) continue;
    json f{{"algorithm", algorithm_name(e.algorithm)}, {"expected", e.exponent}};
    try {
      const auto fit = scaling_exponent(e.family, e.algorithm, sizes, rep);
      const bool ok = std::abs(fit.slope - e.exponent) <= kSlopeTolerance;
      f["slope"] = fit.slope;
      f["bitflips"] = fit.bitflips;
      f["pass"] = ok;
      pass = pass && ok;
    } catch (const std::exception& ex) {
      f["pass"] = false;
      f["error"] = ex.what();
      pass = false;
    }
    fits.push_back(f);
  }
  j["pass"] = pass;
  j["tolerance"] = kSlopeTolerance;
  j["fits"] = fits;
  return j;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Representation rep = Representation::parse(a.representation);
  std::optional<Family> family;
  BoundaryMatrix m;
  std::string instance;
  if (!a.input.empty()) {
    m = load_boundary_matrix(std::filesystem::path(a.input));
    instance = a.input;
  } else if (!a.family.empty()) {
    family = parse_family(a.family);
    m = generate({*family, a.n, a.seed});
    instance = a.family + " n=" + std::to_string(a.n);
    if (*family == Family::shuffled) instance += " seed=" + std::to_string(a.seed);
  } else {
    throw std::invalid_argument("verify needs an input file or --family");
  }

  for (const auto& c : a.checks)
    if (c != "oracle" && c != "bounds" && c != "lemmas" && c != "slopes")
      throw std::invalid_argument("unknown check '" + c + "'; valid: oracle bounds lemmas slopes");
  auto wanted = [&](const char* name) {
    return std::find(a.checks.begin(), a.checks.end(), name) != a.checks.end();
  };

  json checks = json::array();
  if (wanted("oracle")) checks.push_back(oracle_check(m, rep));
  if (wanted("bounds") || wanted("lemmas")) {
    ReduceOptions opts;
    opts.record_trace = wanted("lemmas");
    const auto r = reduce(m, Algorithm::retrospective, rep, opts);
    if (wanted("bounds")) {
      const auto counts = column_counts(m);
      checks.push_back(bound_json("bound_main", bound_main(r.pairing, counts, r.stats.bitflips)));
      checks.push_back(
          bound_json("bound_interval", bound_interval(r.pairing, counts, r.stats.bitflips)));
    }
    if (wanted("lemmas")) checks.push_back(lemma_check(m, r));
  }
  if (wanted("slopes")) checks.push_back(slope_check(family, a.sizes, rep));

  bool pass = true;
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  json report{{"instance", instance}, {"cells", m.size()}, {"pass", pass}, {"checks", checks}};
  out << report.dump(2) << '\n';
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse Z2 boundary-matrix reduction and verification", "zred"};
  app.require_subcommand(1);

  ReduceArgs ra;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a boundary matrix and print its pairing");
  reduce_cmd->add_option("input", ra.input, "Boundary matrix file")->required();
  reduce_cmd->add_option("-a,--algorithm", ra.algorithm,
                         "standard | twist | swap | exhaustive | retro | mix")
      ->capture_default_str();
  reduce_cmd->add_option("-r,--representation", ra.representation,
                         "Column representation, e.g. vector or p-bitmap")
      ->capture_default_str();
  reduce_cmd->add_flag("--dualize", ra.dualize, "Reduce the anti-transpose; pairs are mapped back");
  reduce_cmd->add_option("--trace", ra.trace_path, "Write the event trace (JSON lines) here");
  reduce_cmd->add_option("--stats-out", ra.stats_path, "Write the stats JSON here");
  reduce_cmd->add_option("-o,--out", ra.out_path, "Write the pairing here instead of stdout");

  GenerateArgs ga;
  auto* gen_cmd = app.add_subcommand("generate", "Emit a generated filtration");
  gen_cmd->add_option("family", ga.family, "k1 | k2 | k3 | k4 | shuffled")->required();
  gen_cmd->add_option("-n,--n", ga.n, "Size parameter")->required();
  gen_cmd->add_option("--seed", ga.seed, "Seed (shuffled only)")->capture_default_str();
  gen_cmd->add_option("-o,--out", ga.out_path, "Output file instead of stdout");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Run a reduction grid and write CSV");
  bench_cmd->add_option("--families", ba.families, "Comma-separated families")->delimiter(',');
  bench_cmd->add_option("--sizes", ba.sizes, "Comma-separated n values")->delimiter(',');
  bench_cmd->add_option("--seeds", ba.seeds, "Seeds for shuffled instances")->delimiter(',');
  bench_cmd->add_option("--algorithms", ba.algorithms, "Comma-separated algorithms")
      ->delimiter(',');
  bench_cmd->add_option("--representations", ba.representations,
                        "Comma-separated representations")
      ->delimiter(',');
  bench_cmd->add_option("--dualize", ba.dualize, "primal | dual | both")->capture_default_str();
  bench_cmd->add_option("--out-csv", ba.csv_path, "CSV file instead of stdout");
  bench_cmd->add_option("-j,--jobs", ba.jobs, "Worker threads")->check(CLI::PositiveNumber);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run oracle, bound, lemma and slope checks");
  verify_cmd->add_option("input", va.input, "Boundary matrix file");
  verify_cmd->add_option("--family", va.family, "Generate the instance instead of reading it");
  verify_cmd->add_option("-n,--n", va.n, "Size parameter for --family");
  verify_cmd->add_option("--seed", va.seed, "Seed for --family shuffled");
  verify_cmd->add_option("--checks", va.checks, "oracle,bounds,lemmas,slopes")->delimiter(',');
  verify_cmd->add_option("--sizes", va.sizes, "Sizes for the slope fit")->delimiter(',');
  verify_cmd->add_option("-r,--representation", va.representation, "Column representation")
      ->capture_default_str();

  std::vector<const char*> argv{"zred"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(ra, out);
    if (*gen_cmd) return cmd_generate(ga, out);
    if (*bench_cmd) return cmd_bench(ba, out);
    if (*verify_cmd) return cmd_verify(va, out);
  } catch (const std::exception& e) {
    err << "zred: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace zred::cli
