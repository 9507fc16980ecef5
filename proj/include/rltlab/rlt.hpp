#pragma once

#include "rltlab/lifted.hpp"
#include "rltlab/polytope.hpp"

namespace rltlab {

/// Weak multiplies every row of the polytope (box included) by x_j and
/// 1-x_j for the binary coordinates j only; Strong does so for every
/// coordinate. Diagonal rows y_jj = x_j appear for binary j in both.
enum class ClosureVariant { Weak, Strong };

/// Product-lifted formulation. Variable layout: x_1..x_n, then one y-column
/// per multiplied coordinate j in ascending order, each column holding
/// y_{1,j}..y_{n,j}. Row layout: for each multiplied j, the x_j-products of
/// all rows (system rows then box rows), then the (1-x_j)-products in the
/// same order; afterwards the symmetry rows y_{i,j} = y_{j,i} (i < j, both
/// multiplied) and the diagonal rows y_{j,j} = x_j (binary j).
struct RltEf {
  LiftedSystem lifted;
  int n = 0;
  std::vector<int> mult;  ///< multiplied coordinates, ascending

  /// Column of y_{i,j}; j must be a multiplied coordinate.
  int y_index(int i, int j) const;
};

RltEf build_rlt_ef(const BoxPolytope& P, ClosureVariant variant);

/// Decides closure membership by feasibility of the lifted system with x
/// fixed. Throws std::invalid_argument when x lies outside the unit box.
ProjectionMembership closure_member(const BoxPolytope& P, ClosureVariant variant,
                                    const RatVector& x);

struct ClosureOptimum {
  Rational value;
  RatVector point;   ///< projection of the optimizer onto x
  RatVector lifted;  ///< the full optimizer in the extended variable space
};

/// Exact LP optimum of the linear objective over the closure.
ClosureOptimum optimize_over_closure(const BoxPolytope& P, ClosureVariant variant,
                                     const RatVector& objective, Sense sense);

/// The four product families of the box rows alone, over the same variable
/// layout as build_rlt_ef: y_{i,j} >= 0, y_{i,j} <= x_j, x_i - y_{i,j} >= 0
/// and x_i + x_j - y_{i,j} <= 1 for every multiplied j and every i.
LinearSystem mccormick_system(const BoxPolytope& P, ClosureVariant variant);

using RatMatrix = std::vector<RatVector>;

/// The product block of a lifted witness as an n-by-n matrix y[i][j];
/// columns of coordinates that were not multiplied are left zero.
RatMatrix extract_y(const RltEf& ef, const RatVector& witness);

}  // namespace rltlab
