#pragma once

#include <vector>

#include "rigidkit/rational.hpp"

namespace rigidkit::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rows;              // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon reduced_row_echelon(RationalMatrix m, std::size_t cols);

Rational determinant(RationalMatrix m);

// Requires a square invertible matrix.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace rigidkit::detail
