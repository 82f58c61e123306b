// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zred/verify.hpp"

using namespace zred;

namespace {

// Pinned tolerances.
constexpr double kSlopeTol = 0.3;
constexpr std::size_t kShuffledInstances = 200;
constexpr std::size_t kTraceShuffled = 50;
constexpr std::size_t kMedianSeeds = 10;
constexpr std::size_t kMedianN = 50;
const std::vector<std::size_t> kScalingSizes{16, 32, 64, 128, 256};
const std::vector<std::size_t> kFamilySizes{2, 4, 6, 8};

struct Instance {
  std::string name;
  BoundaryMatrix matrix;
};

// 200 seeded shuffled complexes on 3..7 vertices, then K1-K4 at n = 2, 4, 6, 8.
std::vector<Instance> oracle_grid() {
  std::vector<Instance> out;
  for (std::uint64_t seed = 0; seed < kShuffledInstances; ++seed) {
    const std::size_t n = 3 + seed % 5;
    out.push_back({"shuffled n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                   gen_shuffled(n, seed)});
  }
  for (Family f : {Family::k1, Family::k2, Family::k3, Family::k4})
    for (std::size_t n : kFamilySizes)
      out.push_back({std::string(family_name(f)) + " n=" + std::to_string(n), generate({f, n, 0})});
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    pass = false;
    if (failures++ == 0) first_failure = what;
  }
};

std::string run_label(const std::string& inst, Algorithm a, const Representation& r, bool dual) {
  return inst + " " + std::string(algorithm_name(a)) + "/" + r.name() + (dual ? "/dual" : "/primal");
}

ReductionResult run(const BoundaryMatrix& m, Algorithm a, Representation rep, bool dual,
                    const ReduceOptions& opts = {}) {
  return dual ? reduce_dualized(m, a, rep, opts) : reduce(m, a, rep, opts);
}

// Bounds are stated for the matrix that was actually reduced, so a dual run is
// checked against the anti-transpose and its own pairing.
void check_bounds(const BoundaryMatrix& m, const ReductionResult& r, bool dual,
                  const std::string& label, Outcome& o, long long& min_slack) {
  const auto counts = column_counts(dual ? anti_transpose(m) : m);
  const PersistencePairing p = dual ? map_dual_pairs(r.pairing, m.size()) : r.pairing;
  for (const auto& b : {bound_main(p, counts, r.stats.bitflips),
                        bound_interval(p, counts, r.stats.bitflips)}) {
    min_slack = std::min(min_slack, b.slack());
    if (!b.holds) o.fail(label + " measured " + std::to_string(b.measured) + " > " +
                         std::to_string(b.bound));
  }
}

// Shared by criteria 1, 3, 5 and 6: every grid cell on all ten representations,
// a superset of the six the oracle criterion names.
struct GridResults {
  Outcome oracle;
  Outcome bounds;
  long long min_slack = LLONG_MAX;
  std::size_t retro_runs = 0;
  Outcome representation;
  Outcome neutrality;
  std::size_t runs = 0;
};

GridResults run_grid() {
  GridResults g;
  ReduceOptions no_compress;
  no_compress.compression = false;
  ReduceOptions no_clear;
  no_clear.clearing = false;

  for (const auto& inst : oracle_grid()) {
    const auto expected = rank_oracle_pairs(inst.matrix);
    for (Algorithm a : all_algorithms())
      for (bool dual : {false, true}) {
        std::optional<ReductionStats> reference;
        std::string reference_rep;
        for (const auto& rep : all_representations()) {
          const auto label = run_label(inst.name, a, rep, dual);
          const auto r = run(inst.matrix, a, rep, dual);
          ++g.runs;
          if (!(r.pairing == expected)) g.oracle.fail(label + " differs from the rank oracle");

          if (!reference) {
            reference = r.stats;
            reference_rep = rep.name();
          } else if (r.stats.bitflips != reference->bitflips ||
                     r.stats.col_ops != reference->col_ops ||
                     r.stats.fill_up != reference->fill_up) {
            g.representation.fail(label + " counts differ from " + reference_rep);
          }

          if (a == Algorithm::retrospective) {
            ++g.retro_runs;
            check_bounds(inst.matrix, r, dual, label, g.bounds, g.min_slack);
          }
        }

        // Neutrality on the default representation.
        const Representation rep;
        if (a == Algorithm::twist) {
          const auto with = run(inst.matrix, Algorithm::twist, rep, dual);
          const auto without = run(inst.matrix, Algorithm::twist, rep, dual, no_clear);
          const auto standard = run(inst.matrix, Algorithm::standard, rep, dual);
          if (!(with.pairing == standard.pairing) || !(with.pairing == without.pairing))
            g.neutrality.fail(run_label(inst.name, a, rep, dual) + " clearing changes pairs");
        }
        if (a == Algorithm::retrospective || a == Algorithm::exhaustive) {
          const auto with = run(inst.matrix, a, rep, dual);
          const auto without = run(inst.matrix, a, rep, dual, no_compress);
          if (!(with.pairing == without.pairing))
            g.neutrality.fail(run_label(inst.name, a, rep, dual) + " compression changes pairs");
        }
      }
  }
  return g;
}

std::string summary(const Outcome& o, const std::string& ok_detail) {
  if (o.pass) return ok_detail;
  return std::to_string(o.failures) + " failures; first: " + o.first_failure;
}

double median(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? static_cast<double>(v[k]) : 0.5 * static_cast<double>(v[k - 1] + v[k]);
}

}  // namespace

int main() {
  static_assert(kSlopeTol == kSlopeTolerance);
  bool all_pass = true;
  auto report = [&](int id, bool pass, const std::string& name, const std::string& detail,
                    double seconds) {
    all_pass = all_pass && pass;
    std::printf("C%d %s  %s: %s (%.1fs)\n", id, pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
  };
  using clock = std::chrono::steady_clock;
  auto seconds_since = [](clock::time_point t) {
    return std::chrono::duration<double>(clock::now() - t).count();
  };

  auto t = clock::now();
  const GridResults grid = run_grid();
  const double grid_seconds = seconds_since(t);
  report(1, grid.oracle.pass, "oracle equivalence",
         summary(grid.oracle, std::to_string(grid.runs) + " runs match the rank oracle"),
         grid_seconds);

  // Criterion 2, with retro bounds over the same runs for criterion 3.
  t = clock::now();
  Outcome slopes;
  Outcome scaling_bounds = grid.bounds;
  long long min_slack = grid.min_slack;
  std::size_t retro_runs = grid.retro_runs;
  std::ostringstream fits;
  for (const auto& e : expected_separations()) {
    const auto fit = scaling_exponent(e.family, e.algorithm, kScalingSizes);
    const bool ok = std::abs(fit.slope - e.exponent) <= kSlopeTol;
    fits << family_name(e.family) << "/" << algorithm_name(e.algorithm) << "="
         << std::round(fit.slope * 100) / 100 << (ok ? "" : "!") << " ";
    if (!ok)
      slopes.fail(std::string(family_name(e.family)) + "/" +
                  std::string(algorithm_name(e.algorithm)) + " slope " +
                  std::to_string(fit.slope) + ", expected " + std::to_string(e.exponent));
  }
  for (Family f : {Family::k1, Family::k2, Family::k3, Family::k4})
    for (std::size_t n : kScalingSizes) {
      const auto m = generate({f, n, 0});
      const auto r = reduce(m, Algorithm::retrospective, {});
      ++retro_runs;
      check_bounds(m, r, false, std::string(family_name(f)) + " n=" + std::to_string(n),
                   scaling_bounds, min_slack);
    }
  std::string fit_text = fits.str();
  if (!fit_text.empty()) fit_text.pop_back();
  report(2, slopes.pass, "scaling separations",
         slopes.pass ? fit_text : summary(slopes, "") + " | " + fit_text, seconds_since(t));
  report(3, scaling_bounds.pass, "bitflip bounds",
         summary(scaling_bounds, std::to_string(retro_runs) +
                                     " retro runs, minimum slack " + std::to_string(min_slack)),
         0.0);

  // Criterion 4.
  t = clock::now();
  Outcome lemmas;
  std::size_t traces = 0, additions = 0;
  {
    ReduceOptions opts;
    opts.record_trace = true;
    std::vector<Instance> insts;
    for (Family f : {Family::k1, Family::k2, Family::k3, Family::k4})
      for (std::size_t n = 2; n <= 64; ++n)
        insts.push_back({std::string(family_name(f)) + " n=" + std::to_string(n),
                         generate({f, n, 0})});
    for (std::uint64_t seed = 0; seed < kTraceShuffled; ++seed) {
      const std::size_t n = 4 + seed % 9;
      insts.push_back({"shuffled n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                       gen_shuffled(n, 1000 + seed)});
    }
    for (const auto& inst : insts)
      for (bool dual : {false, true}) {
        const BoundaryMatrix m = dual ? anti_transpose(inst.matrix) : inst.matrix;
        const auto r = reduce(m, Algorithm::retrospective, {}, opts);
        const auto rep = check_trace_lemmas(r.trace, r.pairing, column_counts(m));
        ++traces;
        additions += rep.additions;
        for (const auto& v : rep.violations)
          lemmas.fail(inst.name + (dual ? " dual" : " primal") + ": " + v.check + " at seq " +
                      std::to_string(v.seq) + " (" + v.detail + ")");
      }
  }
  report(4, lemmas.pass, "trace lemmas",
         summary(lemmas, std::to_string(traces) + " traces, " + std::to_string(additions) +
                             " additions, zero violations"),
         seconds_since(t));

  report(5, grid.representation.pass, "representation independence",
         summary(grid.representation,
                 std::to_string(all_representations().size()) +
                     " representations agree on bitflips, col_ops and fill_up"),
         0.0);

  // Criterion 6.
  t = clock::now();
  Outcome neutrality = grid.neutrality;
  {
    const BoundaryMatrix tri({0, 0, 0, 1, 1, 1, 2},
                             {{}, {}, {}, {0, 1}, {0, 2}, {1, 2}, {3, 4, 5}});
    const auto twist = reduce(tri, Algorithm::twist, {}).stats.col_ops;
    const auto standard = reduce(tri, Algorithm::standard, {}).stats.col_ops;
    if (standard != 2) neutrality.fail("standard col_ops on the triangle is " + std::to_string(standard));
    if (!(twist < standard))
      neutrality.fail("twist col_ops " + std::to_string(twist) + " not below standard " +
                      std::to_string(standard));
    report(6, neutrality.pass, "heuristic neutrality",
           summary(neutrality, "pairings unchanged; triangle col_ops twist " +
                                   std::to_string(twist) + " < standard " +
                                   std::to_string(standard)),
           seconds_since(t));
  }

  // Criterion 7.
  t = clock::now();
  {
    Outcome micro;
    const BoundaryMatrix tri({0, 0, 0, 1, 1, 1, 2},
                             {{}, {}, {}, {0, 1}, {0, 2}, {1, 2}, {3, 4, 5}});
    const PersistencePairing expected{{{1, 3}, {2, 4}, {5, 6}}, {0}};
    const auto r = reduce(tri, Algorithm::retrospective, {});
    if (r.stats.col_ops != 2) micro.fail("col_ops " + std::to_string(r.stats.col_ops));
    if (r.stats.bitflips != 4) micro.fail("bitflips " + std::to_string(r.stats.bitflips));
    if (r.stats.fill_up != 5) micro.fail("fill_up " + std::to_string(r.stats.fill_up));
    if (!(r.pairing == expected)) micro.fail("pairing differs");
    if (!(rank_oracle_pairs(tri) == expected)) micro.fail("rank oracle disagrees");
    report(7, micro.pass, "triangle micro-oracle",
           summary(micro, "col_ops 2, bitflips 4, fill_up 5, pairs (2,4) (3,5) (6,7), essential 1"),
           seconds_since(t));
  }

  // Criterion 8.
  t = clock::now();
  {
    std::vector<std::size_t> retro_fill, twist_fill, retro_flips, twist_flips;
    for (std::uint64_t seed = 0; seed < kMedianSeeds; ++seed) {
      const auto m = gen_shuffled(kMedianN, seed);
      const auto retro = reduce(m, Algorithm::retrospective, {});
      const auto twist = reduce(m, Algorithm::twist, {});
      retro_fill.push_back(retro.stats.fill_up);
      twist_fill.push_back(twist.stats.fill_up);
      retro_flips.push_back(retro.stats.bitflips);
      twist_flips.push_back(twist.stats.bitflips);
    }
    const double rf = median(retro_fill), tf = median(twist_fill);
    const double rb = median(retro_flips), tb = median(twist_flips);
    const bool pass = rf < tf && rb < tb;
    std::ostringstream d;
    d << std::fixed << std::setprecision(1) << "median fill_up retro " << rf << " vs twist " << tf << ", median bitflips retro " << rb
      << " vs twist " << tb;
    report(8, pass, "shuffled n=50 retro vs twist", d.str(), seconds_since(t));
  }

  std::printf("%s\n", all_pass ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all_pass ? 0 : 1;
}
