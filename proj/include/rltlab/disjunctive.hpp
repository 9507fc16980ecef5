#pragma once

#include "rltlab/lifted.hpp"
#include "rltlab/polytope.hpp"

namespace rltlab {

/// A finite OR of linear conditions over the base coordinates. Each
/// disjunct's rows may mix relations, including equalities.
struct Disjunction {
  int n = 0;
  std::vector<LinearSystem> disjuncts;  ///< vars are coordinate_names(n)

  void check_well_formed() const;
};

/// A disjunction given by a coordinate subset D and a set of 0/1 patterns on
/// it: one disjunct x_D = pattern per listed pattern.
struct SubsetDisjunction {
  std::vector<int> D;                       ///< 0-based, strictly increasing
  std::vector<std::vector<int>> patterns;   ///< each entry 0/1, length |D|
};

Disjunction expand(const SubsetDisjunction& sd, int n);

/// Union-hull formulation. Variable layout: x_1..x_n, then one copy block
/// per disjunct (x^(h), n variables each), then the weights lam_1..lam_H.
/// Row layout: per-disjunct copies of all polytope rows (box included)
/// scaled by lam_h; per-disjunct copies of the disjunct rows scaled by
/// lam_h; the weight-sum row; the n recombination rows x = sum_h x^(h);
/// and lam_h >= 0.
struct BalasEf {
  LiftedSystem lifted;
  int n = 0;
  int H = 0;

  int copy_index(int h, int i) const { return n + h * n + i; }
  int lambda_index(int h) const { return n + H * n + h; }
};

BalasEf build_balas_ef(const BoxPolytope& P, const Disjunction& disj);

/// Membership of x in the convex hull of the union of the disjunct pieces
/// of P, decided on the lifted formulation. Throws std::invalid_argument
/// when x lies outside the unit box.
ProjectionMembership hull_member(const BoxPolytope& P, const Disjunction& disj,
                                 const RatVector& x);

/// The two-piece disjunction x_j = 0 OR x_j = 1; j must be binary in P.
Disjunction variable_disjunction(const BoxPolytope& P, int j);

/// One disjunct x_j = 1 per j in J; J must be nonempty and binary in P.
Disjunction cardinality_disjunction(const BoxPolytope& P, const std::vector<int>& J);

struct LandpCertificate {
  bool member = true;
  /// Hull certificates per binary coordinate, in order; generation stops at
  /// the first failing coordinate.
  std::vector<ProjectionMembership> per_coordinate;
  int failing = -1;  ///< 0-based failing coordinate, -1 when member
};

/// Intersection of the single-coordinate union hulls over the binary set.
LandpCertificate landp_member(const BoxPolytope& P, const RatVector& x);

}  // namespace rltlab
