#pragma once

#include <filesystem>
#include <iosfwd>

#include "zred/boundary_matrix.hpp"
#include "zred/pairing.hpp"

namespace zred {

// ASCII boundary format: one line per cell in filtration order, holding the
// cell's dimension followed by its 1-based, strictly ascending facet rows.
// Blank lines and lines starting with '#' are skipped.
BoundaryMatrix load_boundary_matrix(std::istream& in);
BoundaryMatrix load_boundary_matrix(const std::filesystem::path& path);

void save_boundary_matrix(const BoundaryMatrix& m, std::ostream& out);
void save_boundary_matrix(const BoundaryMatrix& m, const std::filesystem::path& path);

// Pairing text: "i j" lines sorted by birth, then "essential i" lines, 1-based.
void write_pairing(const PersistencePairing& p, std::ostream& out);
PersistencePairing read_pairing(std::istream& in);

}  // namespace zred
