#pragma once

#include "rltlab/lp.hpp"

namespace rltlab {

/// A lifted (extended) formulation whose first `nx` variables are the
/// original coordinates; the object of interest is the projection of the
/// feasible set onto them. All constraints are explicit rows (no native
/// bounds), so Farkas multipliers aggregate rows alone.
struct LiftedSystem {
  LinearSystem sys;
  int nx = 0;
};

struct ProjectionMembership {
  bool member = false;
  /// Full assignment (x then auxiliaries) satisfying the system, when member.
  RatVector witness;
  /// Otherwise: multipliers over sys.rows in the <=-normalized convention of
  /// FarkasCertificate. Their signed aggregate has zero coefficients on every
  /// auxiliary variable; the x-part is `cut`.
  RatVector ef_row_mults;
  /// A row in x-space, valid for the whole projection, violated by the query.
  Row cut;
};

/// Decides whether x lies in the projection by fixing the leading variables
/// and testing feasibility. Both answers carry exact certificates and are
/// re-verified before returning.
ProjectionMembership project_member(const LiftedSystem& L, const RatVector& x);

/// Recomputes the cut from the multipliers and checks validity plus
/// violation; throws std::logic_error on the first failed condition.
void verify_projection_cut(const LiftedSystem& L, const RatVector& ef_row_mults,
                           const Row& cut, const RatVector& x);

}  // namespace rltlab
