#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "zred/betti.hpp"
#include "zred/verify.hpp"

namespace zred {

void BoundCheck::require() const {
  if (holds) return;
  std::ostringstream msg;
  msg << "bound violated: measured " << measured << " > bound " << bound << " (";
  for (std::size_t k = 0; k < breakdown.size(); ++k)
    msg << (k ? ", " : "") << breakdown[k].first << '=' << breakdown[k].second;
  msg << ')';
  throw std::runtime_error(msg.str());
}

std::vector<std::size_t> column_counts(const BoundaryMatrix& m) {
  std::vector<std::size_t> out(m.size());
  for (Index j = 0; j < m.size(); ++j) out[j] = m.column(j).size();
  return out;
}

BoundCheck bound_main(const PersistencePairing& p, const std::vector<std::size_t>& counts,
                      std::size_t measured) {
  const std::size_t n = counts.size();
  const BettiProfile betti(p, n);
  std::vector<std::pair<Index, Index>> queries;
  for (const auto& pr : p.pairs) queries.emplace_back(pr.birth, pr.death);
  const auto pers = betti.persistent_batch(queries);

  std::size_t backward = 0;
  for (std::size_t k = 0; k < p.pairs.size(); ++k) {
    const std::size_t b = pers[k] + 1;
    const std::size_t width = p.pairs[k].death - p.pairs[k].birth + 1;
    backward += b * std::min(b, width);
  }
  std::size_t forward = 0;
  for (Index k = 0; k < n; ++k) forward += counts[k] * (betti.beta(k) + 1);

  BoundCheck out;
  out.bound = backward + forward;
  out.measured = measured;
  out.holds = measured <= out.bound;
  out.breakdown = {{"pair_term", backward}, {"column_term", forward}};
  return out;
}

BoundCheck bound_interval(const PersistencePairing& p, const std::vector<std::size_t>& counts,
                          std::size_t measured) {
  const std::size_t n = counts.size();
  std::size_t interval = 0;
  for (const auto& pr : p.pairs) {
    const std::size_t len = pr.death - pr.birth;
    interval += len * len;
  }
  for (Index e : p.essential) {
    const std::size_t len = n - e;
    interval += len * len;
  }
  std::size_t entries = 0;
  for (std::size_t c : counts) entries += c;

  BoundCheck out;
  out.bound = interval + entries;
  out.measured = measured;
  out.holds = measured <= out.bound;
  out.breakdown = {{"interval_term", interval}, {"entry_term", entries}};
  return out;
}

}  // namespace zred
