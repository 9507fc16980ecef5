#include "rltlab/rlt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rltlab {

int RltEf::y_index(int i, int j) const {
  const auto it = std::lower_bound(mult.begin(), mult.end(), j);
  if (it == mult.end() || *it != j)
    throw std::invalid_argument("y_index: coordinate is not multiplied");
  const int pos = static_cast<int>(it - mult.begin());
  return n + pos * n + i;
}

RltEf build_rlt_ef(const BoxPolytope& P, ClosureVariant variant) {
  P.check_well_formed();
  RltEf ef;
  ef.n = P.n;
  if (variant == ClosureVariant::Weak) {
    ef.mult = P.binary;
  } else {
    ef.mult.resize(P.n);
    std::iota(ef.mult.begin(), ef.mult.end(), 0);
  }

  const LinearSystem base = to_system(P);
  LinearSystem& sys = ef.lifted.sys;
  sys.vars = coordinate_names(P.n);
  for (int j : ef.mult)
    for (int i = 0; i < P.n; ++i)
      sys.vars.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  const int nv = static_cast<int>(sys.vars.size());
  ef.lifted.nx = P.n;

  for (int j : ef.mult) {
    const std::string xj = "x" + std::to_string(j + 1);
    // a.y_{*,j} <= b x_j, one row per base row, relation preserved.
    for (const Row& row : base.rows) {
      RatVector coef(nv, Rational(0));
      for (int i = 0; i < P.n; ++i) coef[ef.y_index(i, j)] = row.coef[i];
      coef[j] -= row.rhs;
      sys.add_row(std::move(coef), row.rel, Rational(0), row.label + "*" + xj);
    }
    // a.(x - y_{*,j}) <= b (1 - x_j), same order.
    for (const Row& row : base.rows) {
      RatVector coef(nv, Rational(0));
      for (int i = 0; i < P.n; ++i) {
        coef[i] = row.coef[i];
        coef[ef.y_index(i, j)] = Rational(-row.coef[i]);
      }
      coef[j] += row.rhs;
      sys.add_row(std::move(coef), row.rel, row.rhs, row.label + "*(1-" + xj + ")");
    }
  }
  for (std::size_t a = 0; a < ef.mult.size(); ++a)
    for (std::size_t b = a + 1; b < ef.mult.size(); ++b) {
      const int i = ef.mult[a], j = ef.mult[b];
      RatVector coef(nv, Rational(0));
      coef[ef.y_index(i, j)] = 1;
      coef[ef.y_index(j, i)] = -1;
      sys.add_row(std::move(coef), Relation::Equal, Rational(0),
                  "sym" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  for (int j : P.binary) {
    if (!std::binary_search(ef.mult.begin(), ef.mult.end(), j)) continue;
    RatVector coef(nv, Rational(0));
    coef[ef.y_index(j, j)] = 1;
    coef[j] = -1;
    sys.add_row(std::move(coef), Relation::Equal, Rational(0), "diag" + std::to_string(j + 1));
  }
  // With at least one multiplied coordinate the original rows are implied
  // (the two product families sum back to them); with none, the closure is
  // the polytope itself, so the base rows must appear explicitly.
  if (ef.mult.empty())
    for (const Row& row : base.rows) sys.add_row(row.coef, row.rel, row.rhs, row.label);
  return ef;
}

ProjectionMembership closure_member(const BoxPolytope& P, ClosureVariant variant,
                                    const RatVector& x) {
  if (static_cast<int>(x.size()) != P.n)
    throw std::invalid_argument("closure_member: dimension mismatch");
  if (!box_member(x)) throw std::invalid_argument("closure_member: point outside the unit box");
  return project_member(build_rlt_ef(P, variant).lifted, x);
}

ClosureOptimum optimize_over_closure(const BoxPolytope& P, ClosureVariant variant,
                                     const RatVector& objective, Sense sense) {
  if (static_cast<int>(objective.size()) != P.n)
    throw std::invalid_argument("optimize_over_closure: objective dimension mismatch");
  const RltEf ef = build_rlt_ef(P, variant);
  RatVector c(ef.lifted.sys.vars.size(), Rational(0));
  for (int i = 0; i < P.n; ++i) c[i] = objective[i];
  const LpOutcome out = solve(ef.lifted.sys, c, sense);
  if (!out.is_optimal())
    throw std::logic_error("optimize_over_closure: closure is empty or unbounded");
  ClosureOptimum opt;
  opt.value = out.optimal->value;
  opt.point.assign(out.optimal->point.begin(), out.optimal->point.begin() + P.n);
  opt.lifted = out.optimal->point;
  return opt;
}

RatMatrix extract_y(const RltEf& ef, const RatVector& witness) {
  if (witness.size() != ef.lifted.sys.vars.size())
    throw std::invalid_argument("extract_y: witness length mismatch");
  RatMatrix y(ef.n, zeros(ef.n));
  for (int j : ef.mult)
    for (int i = 0; i < ef.n; ++i) y[i][j] = witness[ef.y_index(i, j)];
  return y;
}

LinearSystem mccormick_system(const BoxPolytope& P, ClosureVariant variant) {
  const RltEf ef = build_rlt_ef(P, variant);
  LinearSystem sys;
  sys.vars = ef.lifted.sys.vars;
  const int nv = static_cast<int>(sys.vars.size());
  for (int j : ef.mult) {
    for (int i = 0; i < P.n; ++i) {
      const std::string tag =
          "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      RatVector r1(nv, Rational(0));
      r1[ef.y_index(i, j)] = 1;
      sys.add_row(std::move(r1), Relation::GreaterEq, Rational(0), "mc-nn" + tag);
      RatVector r2(nv, Rational(0));
      r2[ef.y_index(i, j)] = 1;
      r2[j] = -1;
      sys.add_row(std::move(r2), Relation::LessEq, Rational(0), "mc-capj" + tag);
      RatVector r3(nv, Rational(0));
      r3[i] = 1;
      r3[ef.y_index(i, j)] = -1;
      sys.add_row(std::move(r3), Relation::GreaterEq, Rational(0), "mc-capi" + tag);
      RatVector r4(nv, Rational(0));
      r4[i] = 1;
      r4[j] += 1;
      r4[ef.y_index(i, j)] -= 1;
      sys.add_row(std::move(r4), Relation::LessEq, Rational(1), "mc-lb" + tag);
    }
  }
  return sys;
}

}  // namespace rltlab
