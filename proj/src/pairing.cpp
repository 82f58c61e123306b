#include "zred/pairing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zred {

void PersistencePairing::canonicalize() {
  std::sort(pairs.begin(), pairs.end());
  std::sort(essential.begin(), essential.end());
}

PersistencePairing pairing_from_pivots(const std::vector<Index>& pivot_of_column) {
  const std::size_t n = pivot_of_column.size();
  PersistencePairing out;
  std::vector<bool> used(n, false);
  for (Index j = 0; j < n; ++j) {
    Index i = pivot_of_column[j];
    if (i == kNoIndex) continue;
    out.pairs.push_back({i, j});
    used[i] = used[j] = true;
  }
  for (Index k = 0; k < n; ++k)
    if (!used[k]) out.essential.push_back(k);
  out.canonicalize();
  return out;
}

void validate_pairing(const PersistencePairing& p, std::size_t n) {
  std::vector<bool> seen(n, false);
  auto mark = [&](Index k) {
    if (k >= n) throw std::logic_error("pairing index " + std::to_string(k + 1) + " out of range");
    if (seen[k]) throw std::logic_error("pairing index " + std::to_string(k + 1) + " used twice");
    seen[k] = true;
  };
  for (const auto& [b, d] : p.pairs) {
    if (b >= d) throw std::logic_error("pair with birth >= death");
    mark(b);
    mark(d);
  }
  for (Index e : p.essential) mark(e);
}

PersistencePairing map_dual_pairs(const PersistencePairing& p, std::size_t n) {
  const auto last = static_cast<Index>(n - 1);
  PersistencePairing out;
  out.pairs.reserve(p.pairs.size());
  for (const auto& [b, d] : p.pairs) out.pairs.push_back({last - d, last - b});
  out.essential.reserve(p.essential.size());
  for (Index e : p.essential) out.essential.push_back(last - e);
  out.canonicalize();
  return out;
}

}  // namespace zred
