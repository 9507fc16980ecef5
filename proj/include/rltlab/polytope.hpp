#pragma once

#include <string>
#include <vector>

#include "rltlab/lp.hpp"

namespace rltlab {

/// A polytope contained in the unit box [0,1]^n, with a designated subset of
/// coordinates treated as binary by the lifting constructions. The box rows
/// 0 <= x_i <= 1 are implicit: they are always part of the polytope and are
/// materialized by to_system(), so `rows` holds only the extra constraints.
struct BoxPolytope {
  int n = 0;
  std::vector<int> binary;  ///< 0-based coordinate indices, strictly increasing
  std::vector<Row> rows;    ///< width-n constraint rows (box excluded)
  std::string description;  ///< free-form note carried by fixture files

  bool is_binary(int v) const;
  void check_well_formed() const;  ///< throws std::invalid_argument on defects
};

/// Explicit rows in order, then per coordinate i the two box rows
/// x_i >= 0 ("x{i+1}>=0") and x_i <= 1 ("x{i+1}<=1").
LinearSystem to_system(const BoxPolytope& P);

/// Names "x1".."xn" used by every system built from a BoxPolytope.
std::vector<std::string> coordinate_names(int n);

bool box_member(const RatVector& x);
bool polytope_member(const BoxPolytope& P, const RatVector& x);

/// Coordinate flip sigma_k: substitutes x_k <- 1 - x_k in every row. An
/// involution on point sets: complement(complement(P,k),k) describes the
/// same polytope.
BoxPolytope complement(const BoxPolytope& P, int k);

/// The face {x in P : a.x = beta}. Requires a.x <= beta to be valid for P
/// (checked with a redundancy certificate; throws std::invalid_argument
/// otherwise).
BoxPolytope face(const BoxPolytope& P, const RatVector& a, const Rational& beta);

/// All vertices of P, deduplicated and sorted lexicographically. Enumerates
/// n-subsets of tight rows with equality rows always included; guarded by
/// max_dim because the subset count grows quickly.
std::vector<RatVector> vertices(const BoxPolytope& P, int max_dim = 8);

/// Exact H-representation of conv(V): affine-hull equations first, then the
/// facet rows, canonically scaled and sorted. The result's `binary` is left
/// empty for the caller to fill. Guarded by max_dim on the ambient dimension.
BoxPolytope hull_from_vertices(const std::vector<RatVector>& V, int max_dim = 6);

struct ConvMembership {
  bool member = false;
  /// Convex multipliers over V (sum 1, nonnegative) when member.
  RatVector multipliers;
  /// A row valid on every point of V and violated by the query otherwise.
  Row separator;
};

/// Decides p in conv(V) by LP and returns an exact witness either way.
ConvMembership conv_member(const std::vector<RatVector>& V, const RatVector& p);

}  // namespace rltlab
