#pragma once

#include <optional>
#include <vector>

#include "rltlab/rational.hpp"

namespace rltlab {

/// Reduced row echelon form in place (exact). Returns the pivot column of
/// each nonzero row, in order; zero rows sink to the bottom.
std::vector<int> rref(std::vector<RatVector>& M);

/// Exact solution of the stacked system A x = b when it exists and is
/// unique; nullopt when inconsistent or underdetermined.
std::optional<RatVector> solve_unique(std::vector<RatVector> A, RatVector b);

/// Canonical basis of {a : M a = 0}, ordered by free column.
std::vector<RatVector> nullspace(std::vector<RatVector> M);

std::size_t rank(std::vector<RatVector> M);

}  // namespace rltlab
