#include <algorithm>
#include <bit>
#include <string>

#include "zred/verify.hpp"

namespace zred {

SparsestCombination sparsest_combination_bruteforce(const Column& target,
                                                    const std::vector<Column>& basis) {
  if (basis.size() > kBruteForceMaxBasis)
    throw SizeGuardError("brute force is limited to " + std::to_string(kBruteForceMaxBasis) +
                         " basis columns, got " + std::to_string(basis.size()));

  Index rows = target.empty() ? 0 : target.back() + 1;
  for (const auto& c : basis)
    if (!c.empty()) rows = std::max(rows, c.back() + 1);

  // Dense current sum; toggling one basis column per Gray-code step keeps the
  // support size up to date incrementally.
  std::vector<bool> current(rows, false);
  for (Index r : target) current[r] = true;
  std::size_t size = target.size();

  SparsestCombination best{std::vector<bool>(basis.size(), false), size};
  std::vector<bool> coeff(basis.size(), false);
  const std::uint64_t steps = std::uint64_t{1} << basis.size();
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto k = static_cast<std::size_t>(std::countr_zero(step));
    coeff[k] = !coeff[k];
    for (Index r : basis[k]) {
      current[r] = !current[r];
      current[r] ? ++size : --size;
    }
    if (size < best.size) {
      best.size = size;
      best.coefficients = coeff;
    }
  }
  return best;
}

}  // namespace zred
