#include <bit>
#include <string>

#include "zred/verify.hpp"

namespace zred {

namespace {

using Words = std::vector<std::uint64_t>;

// Linear basis of Z2 vectors keyed by highest set bit. Insertion returns
// whether the vector was independent of what is already stored.
class XorBasis {
 public:
  explicit XorBasis(std::size_t bits) : words_((bits + 63) / 64), by_top_(bits) {}

  bool insert(Words v) {
    for (std::size_t w = words_; w-- > 0;) {
      while (v[w] != 0) {
        const std::size_t top = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[w]));
        Words& b = by_top_[top];
        if (b.empty()) {
          b = std::move(v);
          return true;
        }
        for (std::size_t k = 0; k <= w; ++k) v[k] ^= b[k];
      }
    }
    return false;
  }

 private:
  std::size_t words_;
  std::vector<Words> by_top_;
};

}  // namespace

PersistencePairing rank_oracle_pairs(const BoundaryMatrix& m) {
  const std::size_t n = m.size();
  if (n > kRankOracleMaxSize)
    throw SizeGuardError("rank oracle is limited to " + std::to_string(kRankOracleMaxSize) +
                         " columns, got " + std::to_string(n));
  const std::size_t words = (n + 63) / 64;

  // rank[i][j + 1] = rank of rows >= i, columns <= j; row n and column -1 are zero.
  std::vector<std::vector<std::size_t>> rank(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    XorBasis basis(n);
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Words v(words, 0);
      bool any = false;
      for (Index row : m.column(static_cast<Index>(j))) {
        if (row < i) continue;
        v[row / 64] |= std::uint64_t{1} << (row % 64);
        any = true;
      }
      if (any && basis.insert(std::move(v))) ++r;
      rank[i][j + 1] = r;
    }
  }

  std::vector<Index> pivot_of(n, kNoIndex);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const long long d = static_cast<long long>(rank[i][j + 1]) - rank[i + 1][j + 1] +
                          rank[i + 1][j] - rank[i][j];
      if (d == 1) pivot_of[j] = static_cast<Index>(i);
    }
  return pairing_from_pivots(pivot_of);
}

}  // namespace zred
