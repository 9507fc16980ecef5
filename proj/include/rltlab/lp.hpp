#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rltlab/linear_system.hpp"

namespace rltlab {

enum class Sense { Minimize, Maximize };

/// Exact optimum with a self-contained duality certificate.
///
/// Sign convention, with s = +1 for Maximize and s = -1 for Minimize:
///   stationarity   c_v = sum_r row_duals[r]*A[r][v] + lower_duals[v] + upper_duals[v]
///   signs          s*row_duals >= 0 on <= rows, s*row_duals <= 0 on >= rows,
///                  free on = rows; s*lower_duals <= 0; s*upper_duals >= 0
///   value          sum_r row_duals[r]*b_r + sum_v lower_duals[v]*l_v
///                  + sum_v upper_duals[v]*u_v = value = c·point
///   slackness      nonzero dual => the corresponding row/bound is tight
struct OptimalOutcome {
  Rational value;
  RatVector point;
  RatVector row_duals;
  RatVector lower_duals;
  RatVector upper_duals;
};

/// Certificate that the system itself is empty. Multipliers apply to the
/// <=-normalized form of each row: a <= row contributes +m*(a,b), a >= row
/// contributes -m*(a,b) with m = row_mults[r] >= 0, an = row contributes
/// m*(a,b) with m free. Bounds: x_v >= l contributes -lower_mults[v]*(e_v, l),
/// x_v <= u contributes +upper_mults[v]*(e_v, u), both mults >= 0.
/// The aggregate has zero coefficients and a negative right-hand side.
struct FarkasCertificate {
  RatVector row_mults;
  RatVector lower_mults;
  RatVector upper_mults;
};

struct UnboundedOutcome {
  RatVector point;  // feasible start
  RatVector ray;    // recession direction strictly improving the objective
};

struct LpOutcome {
  enum class Kind { Optimal, Infeasible, Unbounded };
  Kind kind = Kind::Optimal;
  std::optional<OptimalOutcome> optimal;
  std::optional<FarkasCertificate> infeasible;
  std::optional<UnboundedOutcome> unbounded;

  bool is_optimal() const { return kind == Kind::Optimal; }
  bool is_infeasible() const { return kind == Kind::Infeasible; }
  bool is_unbounded() const { return kind == Kind::Unbounded; }
};

/// Two-phase primal simplex over exact rationals with Bland's
/// smallest-index anti-cycling rule; deterministic. Every returned outcome
/// has been re-verified against `sys` via verify_outcome.
LpOutcome solve(const LinearSystem& sys, const RatVector& objective, Sense sense);

/// Recomputes every certificate condition exactly; throws std::logic_error
/// with a description on the first violated condition.
void verify_outcome(const LinearSystem& sys, const RatVector& objective, Sense sense,
                    const LpOutcome& outcome);

/// Nonnegative aggregation certificate: row_mults (plus bound mults) combine
/// system rows, in the <=-normalized convention of FarkasCertificate, into
/// the inequality  aggregate_coef · x <= achieved.
struct AggregationCertificate {
  RatVector row_mults;
  RatVector lower_mults;
  RatVector upper_mults;
  Rational achieved;  // exact optimum of the candidate direction
};

struct RedundancyCertificate {
  bool redundant = false;
  // Certificate for the <= direction of the candidate (present when the
  // system is bounded in that direction); for an = candidate both are needed.
  std::optional<AggregationCertificate> le_cert;
  std::optional<AggregationCertificate> ge_cert;
};

/// True iff adding `candidate` to `sys` would not change the feasible set,
/// decided by optimizing the candidate's left-hand side. Throws
/// std::invalid_argument when `sys` is infeasible.
RedundancyCertificate is_redundant(const LinearSystem& sys, const Row& candidate);

/// Eliminates all variables not in `keep` by Fourier–Motzkin (equations are
/// used as substitutions first), pruning redundant generated rows. Guarded:
/// throws std::invalid_argument when more than `max_eliminations` variables
/// would be eliminated. The returned system has exactly the kept variables,
/// in their original relative order.
LinearSystem fourier_motzkin_project(const LinearSystem& sys,
                                     const std::vector<std::string>& keep,
                                     int max_eliminations = 8);

}  // namespace rltlab
