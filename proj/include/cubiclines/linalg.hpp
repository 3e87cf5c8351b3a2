#pragma once

#include <vector>

#include "cubiclines/field.hpp"

namespace cubiclines {

// Dense exact matrices are tiny here (at most a handful of rows/columns);
// plain Gaussian elimination over the field is exact and sufficient.
using FVec = std::vector<FieldElement>;
using FMat = std::vector<FVec>;

struct RrefResult {
  FMat mat;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank;
};

RrefResult rref(FMat m);

std::size_t matrix_rank(const FMat& m);

FieldElement det(FMat m);

// Deterministic kernel basis: one vector per free column, unit at the free
// column, in increasing column order.
std::vector<FVec> kernel_basis(const FMat& m, std::size_t ncols);

// Throws DivisionByZeroError when singular.
FMat mat_inverse(const FMat& m);

FVec mat_vec(const FMat& m, const FVec& v);
FMat mat_mul(const FMat& a, const FMat& b);
FMat identity_matrix(std::size_t n);

}  // namespace cubiclines
