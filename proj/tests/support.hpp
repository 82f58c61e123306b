#pragma once

// Shared fixtures and hand-rolled generators for the unit tests.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "zred/boundary_matrix.hpp"
#include "zred/generators.hpp"

namespace zred::testing {

// Vertices 1-3, edges 4={1,2}, 5={1,3}, 6={2,3}, triangle 7 (1-based).
inline BoundaryMatrix triangle() {
  return BoundaryMatrix({0, 0, 0, 1, 1, 1, 2}, {{}, {}, {}, {0, 1}, {0, 2}, {1, 2}, {3, 4, 5}});
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

// Random simplicial complex up to dimension 2 in a random filtration order
// that respects faces: each simplex is inserted at a random position after
// all of its facets.
inline BoundaryMatrix random_complex(std::mt19937_64& rng, std::size_t vertices, double edge_p,
                                     double triangle_p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<Index>> simplices;
  for (Index v = 0; v < vertices; ++v) simplices.push_back({v});
  std::set<std::vector<Index>> edges;
  for (Index a = 0; a < vertices; ++a)
    for (Index b = a + 1; b < vertices; ++b)
      if (coin(rng) < edge_p) {
        edges.insert({a, b});
        simplices.push_back({a, b});
      }
  for (Index a = 0; a < vertices; ++a)
    for (Index b = a + 1; b < vertices; ++b)
      for (Index c = b + 1; c < vertices; ++c)
        if (edges.count({a, b}) && edges.count({a, c}) && edges.count({b, c}) &&
            coin(rng) < triangle_p)
          simplices.push_back({a, b, c});

  // Random keys; a simplex's key is pushed above its facets' keys.
  std::vector<double> key(simplices.size());
  std::map<std::vector<Index>, std::size_t> pos;
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    pos[simplices[k]] = k;
    double floor = 0.0;
    const auto& s = simplices[k];
    if (s.size() > 1)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Index> f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        floor = std::max(floor, key[pos.at(f)]);
      }
    key[k] = floor + coin(rng) + 1e-9;
  }
  std::vector<std::size_t> order(simplices.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return key[a] < key[b]; });

  std::map<std::vector<Index>, Index> index;
  std::vector<Dim> dims;
  std::vector<Column> cols;
  for (std::size_t k : order) {
    const auto& s = simplices[k];
    Column c;
    if (s.size() > 1)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Index> f;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        c.push_back(index.at(f));
      }
    std::sort(c.begin(), c.end());
    index[s] = static_cast<Index>(cols.size());
    dims.push_back(static_cast<Dim>(s.size() - 1));
    cols.push_back(std::move(c));
  }
  return BoundaryMatrix(std::move(dims), std::move(cols));
}

// Ascending random subset of [0, bound).
inline std::vector<Index> random_subset(std::mt19937_64& rng, Index bound, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Index> out;
  for (Index r = 0; r < bound; ++r)
    if (coin(rng) < p) out.push_back(r);
  return out;
}

// Dimension-consistent matrix whose columns are arbitrary subsets of the
// previous dimension's cells. Not a chain complex, so only for tests that do
// not depend on the boundary of a boundary vanishing.
inline BoundaryMatrix random_graded(std::mt19937_64& rng, std::size_t n, int max_dim, double p) {
  std::vector<Dim> dims(n);
  for (auto& d : dims) d = static_cast<Dim>(uniform(rng, static_cast<std::size_t>(max_dim) + 1));
  std::sort(dims.begin(), dims.end());
  std::vector<Column> cols(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Index j = 0; j < n; ++j)
    for (Index r = 0; r < j; ++r)
      if (dims[r] == dims[j] - 1 && coin(rng) < p) cols[j].push_back(r);
  return BoundaryMatrix(std::move(dims), std::move(cols));
}

// Family instances used across several test files.
inline std::vector<BoundaryMatrix> small_corpus() {
  std::vector<BoundaryMatrix> out{triangle()};
  for (Family f : {Family::k1, Family::k2, Family::k3, Family::k4})
    for (std::size_t n : {2, 4, 6}) out.push_back(generate({f, n, 0}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) out.push_back(gen_shuffled(3 + seed % 4, seed));
  std::mt19937_64 rng(99);
  for (int k = 0; k < 10; ++k) out.push_back(random_complex(rng, 7, 0.6, 0.5));
  for (int k = 0; k < 10; ++k) out.push_back(random_complex(rng, 9, 0.35, 0.8));
  return out;
}

}  // namespace zred::testing
