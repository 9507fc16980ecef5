#include "rltlab/lifted.hpp"

#include <stdexcept>

namespace rltlab {

ProjectionMembership project_member(const LiftedSystem& L, const RatVector& x) {
  if (static_cast<int>(x.size()) != L.nx)
    throw std::invalid_argument("project_member: query dimension mismatch");
  if (!L.sys.lower.empty() || !L.sys.upper.empty())
    throw std::invalid_argument("project_member: lifted systems must use explicit rows only");
  const std::size_t nv = L.sys.vars.size();
  const std::size_t nr = L.sys.rows.size();

  LinearSystem ext = L.sys;
  for (int i = 0; i < L.nx; ++i) {
    RatVector coef(nv, Rational(0));
    coef[i] = 1;
    ext.add_row(std::move(coef), Relation::Equal, x[i], "fix-" + L.sys.vars[i]);
  }

  const LpOutcome out = solve(ext, RatVector(nv, Rational(0)), Sense::Minimize);
  ProjectionMembership result;
  if (out.is_optimal()) {
    result.member = true;
    result.witness = out.optimal->point;
    if (!satisfies(L.sys, result.witness))
      throw std::logic_error("project_member: witness fails the lifted system");
    for (int i = 0; i < L.nx; ++i)
      if (result.witness[i] != x[i])
        throw std::logic_error("project_member: witness disagrees with the query");
    return result;
  }
  if (!out.is_infeasible()) throw std::logic_error("project_member: unexpected LP outcome");

  // The fixing rows only touch x-variables, so the signed aggregate of the
  // formulation rows alone cancels on the auxiliaries and its x-part is a
  // valid inequality violated at the query point.
  const FarkasCertificate& cert = *out.infeasible;
  result.ef_row_mults.assign(cert.row_mults.begin(), cert.row_mults.begin() + nr);

  RatVector agg(nv, Rational(0));
  Rational rhs(0);
  for (std::size_t r = 0; r < nr; ++r) {
    const Row& row = L.sys.rows[r];
    const Rational s = row.rel == Relation::GreaterEq ? Rational(-result.ef_row_mults[r])
                                                      : result.ef_row_mults[r];
    if (s == 0) continue;
    agg = axpy(agg, s, row.coef);
    rhs += s * row.rhs;
  }
  result.cut.coef.assign(agg.begin(), agg.begin() + L.nx);
  result.cut.rel = Relation::LessEq;
  result.cut.rhs = rhs;
  result.cut.label = "cut";
  verify_projection_cut(L, result.ef_row_mults, result.cut, x);
  return result;
}

void verify_projection_cut(const LiftedSystem& L, const RatVector& ef_row_mults,
                           const Row& cut, const RatVector& x) {
  const std::size_t nv = L.sys.vars.size();
  const std::size_t nr = L.sys.rows.size();
  if (ef_row_mults.size() != nr) throw std::logic_error("cut check: multiplier count mismatch");
  if (static_cast<int>(cut.coef.size()) != L.nx || static_cast<int>(x.size()) != L.nx)
    throw std::logic_error("cut check: dimension mismatch");

  RatVector agg(nv, Rational(0));
  Rational rhs(0);
  for (std::size_t r = 0; r < nr; ++r) {
    const Row& row = L.sys.rows[r];
    if (row.rel != Relation::Equal && ef_row_mults[r] < 0)
      throw std::logic_error("cut check: negative multiplier on an inequality row");
    const Rational s =
        row.rel == Relation::GreaterEq ? Rational(-ef_row_mults[r]) : ef_row_mults[r];
    if (s == 0) continue;
    agg = axpy(agg, s, row.coef);
    rhs += s * row.rhs;
  }
  for (int i = 0; i < L.nx; ++i)
    if (agg[i] != cut.coef[i]) throw std::logic_error("cut check: x-coefficient mismatch");
  for (std::size_t i = L.nx; i < nv; ++i)
    if (agg[i] != 0) throw std::logic_error("cut check: auxiliary coefficient does not cancel");
  if (rhs != cut.rhs) throw std::logic_error("cut check: right-hand side mismatch");
  if (cut.rel != Relation::LessEq) throw std::logic_error("cut check: cut must be a <= row");
  if (dot(cut.coef, x) <= cut.rhs) throw std::logic_error("cut check: query point not cut off");
}

}  // namespace rltlab
