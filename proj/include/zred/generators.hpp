#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "zred/boundary_matrix.hpp"

namespace zred {

enum class Family { k1, k2, k3, k4, shuffled };

std::string_view family_name(Family f);
/// Throws std::invalid_argument listing the valid names.
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::k1;
  std::size_t n = 2;
  std::uint64_t seed = 0;  // shuffled only
};

// All generators emit full complexes: vertices, then edges, then triangles.
// They throw std::invalid_argument for n below the family minimum (2 for the
// wheel families, 3 for shuffled).

/// Open wheel of n triangles plus a fan of n triangles on the final spoke.
BoundaryMatrix gen_k1(std::size_t n);
/// K1 plus an apex vertex joined to the center and every rim vertex.
BoundaryMatrix gen_k2(std::size_t n);
/// Wheel, one triangle on the final spoke, and a fan of n triangles on its outer edge.
BoundaryMatrix gen_k3(std::size_t n);
/// K3 with two extra triangles hung off the middle triangle's outer edge.
BoundaryMatrix gen_k4(std::size_t n);
/// n vertices, all edges in random order, then all triangles in random order.
BoundaryMatrix gen_shuffled(std::size_t n, std::uint64_t seed);

BoundaryMatrix generate(const GeneratorSpec& spec);

/// The characteristic submatrix of a family: which columns and rows of the
/// generated matrix form its staircase and fan blocks. Each layout row lists
/// the matrix rows it stands for; a pattern row that no simplicial complex
/// can realize as a single edge maps to several rows whose union is compared.
struct BlockLayout {
  std::vector<std::vector<Index>> rows;
  std::vector<Index> cols;
};

/// Only for k1..k4.
BlockLayout block_layout(Family f, std::size_t n);

/// Unbiased Fisher-Yates driven directly by the engine's 64-bit output, so a
/// seed gives the same permutation on every standard library.
template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    std::swap(v[i - 1], v[x % bound]);
  }
}

}  // namespace zred
