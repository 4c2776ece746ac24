#pragma once

#include <vector>

#include "desargues/projective.hpp"

namespace desargues {

using Matrix = std::vector<std::vector<Scalar>>;

// In-place reduction to row echelon form with deterministic pivoting (first
// nonzero entry in column order, scanning rows top to bottom); rows are kept
// primitive after every elimination step. Returns the pivot columns.
std::vector<int> echelonize(Matrix& m);

int rank(Matrix m);

// Basis of the right null space, one canonical primitive vector per free
// column, ordered by free column index.
std::vector<std::vector<Scalar>> null_space(Matrix m);

}  // namespace desargues
