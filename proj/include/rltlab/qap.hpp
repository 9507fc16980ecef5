#pragma once

#include <cstdint>
#include <string>

#include "rltlab/polytope.hpp"

namespace rltlab {

/// Quadratic assignment data: nonnegative costs q(i,j,k,l) meaning the price
/// of mapping i to j while k maps to l.
struct QapInstance {
  int n = 0;
  std::vector<Rational> q;  ///< n^4 entries in row-major (i,j,k,l) order

  const Rational& cost(int i, int j, int k, int l) const;
  Rational& cost(int i, int j, int k, int l);
  void check_well_formed() const;  ///< size and nonnegativity
};

QapInstance zero_instance(int n);

/// Deterministic instance with integer costs in {0..5}.
QapInstance seeded_instance(int n, std::uint64_t seed);

/// Text format: first token n, then n^4 rationals in row-major order.
QapInstance load_qap(const std::string& path);

/// Doubly stochastic matrices, flattened row-major; every entry binary.
BoxPolytope assignment_polytope(int n);

/// One of the linear relaxations below, with its minimization objective.
struct QapLpModel {
  LinearSystem sys;
  RatVector objective;
  int n = 0;
  bool has_y = false;

  int x_index(int i, int j) const { return i * n + j; }
  int y_index(int i, int j, int k, int l) const;
  int w_index(int i, int j) const;
};

/// Product-variable formulation: assignment rows on x; the row/column sums
/// tying y(i,j,*,*) to x; the diagonal y(i,j,i,j) = x(i,j); symmetry and
/// nonnegativity of y; and per-entry cost rows defining w. Guarded to n<=4.
QapLpModel build_adams_johnson(const QapInstance& inst);

/// Big-coefficient single-w coupling: per entry (i,j) the row
/// a x(i,j) + sum_kl q(i,j,k,l) x(k,l) - w(i,j) <= a with a = sum_kl q,
/// plus w >= 0 and the assignment rows. Guarded to n<=4.
QapLpModel build_kaufman_broeckx(const QapInstance& inst);

/// Column-aggregated variant: the big-coefficient rows summed over i for
/// each column j, one row per column. Weaker than per-entry coupling but a
/// member of the broader two-index pattern. Guarded to n<=4.
QapLpModel build_kaufman_broeckx_column(const QapInstance& inst);

struct QapLpSolution {
  Rational value;
  RatVector point;
};

QapLpSolution lp_solve(const QapLpModel& model);
Rational lp_bound(const QapLpModel& model);

/// Column decomposition of a product-formulation point: per positive entry
/// of column j one rescaled assignment-polytope point with a concentrated
/// cost vector, whose weighted combination reproduces (w(*,j), x).
struct DecompositionWitness {
  int j = -1;
  std::vector<int> iplus;           ///< rows with positive x(i,j)
  RatVector weights;                ///< x(i,j) over iplus, positive, sum 1
  std::vector<RatVector> xbars;     ///< n*n points, xbar[t](iplus[t],j) = 1
  std::vector<RatVector> vbars;     ///< length-n vectors, one nonzero entry
};

/// Builds and exactly verifies the witness; throws std::invalid_argument on
/// an infeasible input and std::logic_error if any invariant fails.
DecompositionWitness decompose_aj_column(const QapInstance& inst, const QapLpModel& aj,
                                         const RatVector& solution, int j);

}  // namespace rltlab
