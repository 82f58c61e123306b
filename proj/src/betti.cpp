#include "zred/betti.hpp"

#include <algorithm>
#include <numeric>

namespace zred {

BettiProfile::BettiProfile(const PersistencePairing& p, std::size_t n) : betti_(n, 0) {
  extended_ = p.pairs;
  for (Index e : p.essential) extended_.push_back({e, static_cast<Index>(n)});
  std::sort(extended_.begin(), extended_.end());

  std::vector<long long> delta(n + 1, 0);
  for (const auto& [b, d] : extended_) {
    ++delta[b];
    --delta[d];
  }
  long long running = 0;
  for (std::size_t k = 0; k < n; ++k) {
    running += delta[k];
    betti_[k] = static_cast<std::size_t>(running);
  }
}

std::size_t BettiProfile::persistent(Index k, Index l) const {
  std::size_t count = 0;
  for (const auto& [b, d] : extended_) {
    if (b > k) break;
    if (d > l) ++count;
  }
  return count;
}

std::vector<std::size_t> BettiProfile::persistent_batch(
    const std::vector<std::pair<Index, Index>>& queries) const {
  // Offline dominance counting: sweep births in ascending order and keep a
  // Fenwick tree over deaths.
  const std::size_t span = betti_.size() + 2;
  std::vector<std::size_t> tree(span + 1, 0);
  auto add = [&](std::size_t pos) {
    for (++pos; pos <= span; pos += pos & (~pos + 1)) ++tree[pos];
  };
  auto prefix = [&](std::size_t pos) {  // count of deaths <= pos
    std::size_t s = 0;
    for (++pos; pos > 0; pos -= pos & (~pos + 1)) s += tree[pos];
    return s;
  };

  std::vector<std::size_t> order(queries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return queries[a].first < queries[b].first; });

  std::vector<std::size_t> out(queries.size(), 0);
  std::size_t next = 0;
  std::size_t inserted = 0;
  for (std::size_t qi : order) {
    const auto [k, l] = queries[qi];
    while (next < extended_.size() && extended_[next].birth <= k) {
      add(extended_[next].death);
      ++inserted;
      ++next;
    }
    out[qi] = inserted - prefix(l);
  }
  return out;
}

}  // namespace zred
