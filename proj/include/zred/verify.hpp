#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zred/boundary_matrix.hpp"
#include "zred/generators.hpp"
#include "zred/instrumentation.hpp"
#include "zred/pairing.hpp"
#include "zred/reducers.hpp"

namespace zred {

inline constexpr std::size_t kRankOracleMaxSize = 512;
inline constexpr std::size_t kBruteForceMaxBasis = 20;

/// Pairing from submatrix ranks alone: (i, j) is a pair iff
/// r(i,j) - r(i+1,j) + r(i+1,j-1) - r(i,j-1) == 1 with r(i,j) = rank D[>=i, <=j].
/// Ranks come from a dense XOR basis, not from column reduction.
/// Throws SizeGuardError above kRankOracleMaxSize.
PersistencePairing rank_oracle_pairs(const BoundaryMatrix& m);

struct BoundCheck {
  std::size_t bound = 0;
  std::size_t measured = 0;
  bool holds = true;
  std::vector<std::pair<std::string, std::size_t>> breakdown;

  long long slack() const { return static_cast<long long>(bound) - static_cast<long long>(measured); }
  /// Throws std::runtime_error with the per-term breakdown when the bound fails.
  void require() const;
};

// Both bounds take the initial entry count of every column where the
// formulas write d_k + 1. The two agree on simplicial input; the count is
// what the proofs use and it stays correct after anti-transposition.

/// sum over P of (b_ij + 1) * min(b_ij + 1, j - i + 1) + sum_k c_k * (b_k + 1).
BoundCheck bound_main(const PersistencePairing& p, const std::vector<std::size_t>& column_counts,
                      std::size_t measured_bitflips);
/// sum over extended pairs of (j - i)^2 + sum_k c_k; essential deaths are n.
BoundCheck bound_interval(const PersistencePairing& p,
                          const std::vector<std::size_t>& column_counts,
                          std::size_t measured_bitflips);

std::vector<std::size_t> column_counts(const BoundaryMatrix& m);

struct LemmaViolation {
  std::string check;
  std::uint64_t seq = 0;
  std::string detail;
};

/// Trace properties of a retrospective run. Each flag covers one property;
/// `violations` keeps the first failing event per property.
struct LemmaReport {
  bool backward_flips_interval = true;   // backward additions flip only interval rows
  bool pairs_added_once = true;          // each (src, dst) at most once per direction
  bool pivoted_size_bounded = true;      // |R_j| <= 1 + b_ij once j is pivoted
  bool peak_size_bounded = true;         // |R_k| <= c_k + b_k at all times
  bool forward_single_non_interval = true;
  bool pivot_search_then_backward = true;  // before pivot: sources < k; after: > k
  std::size_t interval_flips = 0;
  std::size_t non_interval_flips = 0;
  std::size_t additions = 0;
  std::vector<LemmaViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Needs a trace with flipped rows (record_trace) and the run's own pairing.
LemmaReport check_trace_lemmas(const Trace& trace, const PersistencePairing& p,
                               const std::vector<std::size_t>& column_counts);

struct SparsestCombination {
  std::vector<bool> coefficients;
  std::size_t size = 0;
};

/// Global minimum of |target + sum a_k basis_k| over all 2^n choices, by Gray
/// code enumeration. Columns are strictly ascending row lists. Throws
/// SizeGuardError above kBruteForceMaxBasis.
SparsestCombination sparsest_combination_bruteforce(const Column& target,
                                                    const std::vector<Column>& basis);

/// Least-squares slope of log(y) against log(x). Throws std::invalid_argument
/// for fewer than two points, mismatched lengths or non-increasing x, and
/// std::domain_error when some y is zero.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingFit {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> bitflips;
  double slope = 0.0;
};

/// Bitflips of `algorithm` on `family` at every size, and their log-log slope.
/// Requires at least four strictly increasing sizes.
ScalingFit scaling_exponent(Family family, Algorithm algorithm,
                            const std::vector<std::size_t>& sizes,
                            Representation rep = {});

struct ExpectedSlope {
  Family family;
  Algorithm algorithm;
  double exponent;
};

inline constexpr double kSlopeTolerance = 0.3;

/// The linear-vs-quadratic separations the four wheel families are built to show.
const std::vector<ExpectedSlope>& expected_separations();

}  // namespace zred
