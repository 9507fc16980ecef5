#pragma once

#include <array>
#include <optional>

#include "rltlab/rlt.hpp"

namespace rltlab {

/// The binary coordinates where x is strictly fractional: {i in B : 0<x_i<1}.
std::vector<int> fractional_support(const RatVector& x, const std::vector<int>& B);

/// One boundary point per fractional binary coordinate and side: z(i,1) lies
/// in the slice {z : z_i = 1} and z(i,0) in {z : z_i = 0}.
struct ZFamily {
  std::vector<int> support;                  ///< fractional coordinates, ascending
  std::vector<std::array<RatVector, 2>> z;   ///< aligned with support; [beta]

  bool has(int i) const;
  const RatVector& at(int i, int beta) const;  ///< throws when i not in support
};

/// Boundary points read off a product-lifted witness: z(i,1) is the i-th
/// y-column divided by x_i, z(i,0) is (x - column)/(1-x_i), for every
/// fractional binary coordinate i. y is indexed y[row][column].
ZFamily derive_z(const RatVector& x, const RatMatrix& y, const std::vector<int>& B);

/// The convex-split condition: x = x_i z(i,1) + (1-x_i) z(i,0) per
/// fractional i, together with the cross products
/// z(i,1)_j x_i = z(j,1)_i x_j. Throws std::invalid_argument when the family
/// violates its own invariants (slice membership, support set).
bool check_condition_iii(const BoxPolytope& P, const RatVector& x, const ZFamily& z);

/// The equation-only condition: the cross products z(i,1)_j x_i =
/// z(j,1)_i x_j, the complement products z(i,0)_j (1-x_i) =
/// (1 - z(j,1)_i) x_j for ordered pairs, and agreement z(i,beta)_k = x_k on
/// every integral binary coordinate k.
bool check_condition_iv(const BoxPolytope& P, const RatVector& x, const ZFamily& z);

enum class ZCondition { III, IV };

/// Searches for a witnessing family by one joint LP over all z-points (the
/// cross conditions couple them). Requires x in P; returns nullopt when no
/// family exists. Successful results are re-verified before returning.
std::optional<ZFamily> find_z(const BoxPolytope& P, const RatVector& x, ZCondition which);

}  // namespace rltlab
