#include "rltlab/characterization.hpp"

#include <algorithm>
#include <stdexcept>

namespace rltlab {

std::vector<int> fractional_support(const RatVector& x, const std::vector<int>& B) {
  std::vector<int> s;
  for (int i : B) {
    if (i < 0 || i >= static_cast<int>(x.size()))
      throw std::invalid_argument("fractional_support: index out of range");
    if (x[i] > 0 && x[i] < 1) s.push_back(i);
  }
  return s;
}

bool ZFamily::has(int i) const {
  return std::binary_search(support.begin(), support.end(), i);
}

const RatVector& ZFamily::at(int i, int beta) const {
  const auto it = std::lower_bound(support.begin(), support.end(), i);
  if (it == support.end() || *it != i)
    throw std::invalid_argument("ZFamily: coordinate not in the fractional support");
  if (beta != 0 && beta != 1) throw std::invalid_argument("ZFamily: beta must be 0 or 1");
  return z[it - support.begin()][beta];
}

ZFamily derive_z(const RatVector& x, const RatMatrix& y, const std::vector<int>& B) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("derive_z: y must be n by n");
  ZFamily fam;
  fam.support = fractional_support(x, B);
  for (int i : fam.support) {
    RatVector z1(n), z0(n);
    for (int k = 0; k < n; ++k) {
      if (static_cast<int>(y[k].size()) != n)
        throw std::invalid_argument("derive_z: y must be n by n");
      z1[k] = Rational(y[k][i] / x[i]);
      z0[k] = Rational((x[k] - y[k][i]) / (Rational(1) - x[i]));
    }
    fam.z.push_back({std::move(z0), std::move(z1)});
  }
  return fam;
}

namespace {

/// Shared invariant gate: the family covers exactly the fractional support
/// and every point sits in the right slice of P.
void require_family_valid(const BoxPolytope& P, const RatVector& x, const ZFamily& z) {
  if (static_cast<int>(x.size()) != P.n)
    throw std::invalid_argument("z-family check: dimension mismatch");
  if (z.support != fractional_support(x, P.binary))
    throw std::invalid_argument("z-family check: support set mismatch");
  if (z.z.size() != z.support.size())
    throw std::invalid_argument("z-family check: ragged family");
  for (std::size_t pos = 0; pos < z.support.size(); ++pos) {
    const int i = z.support[pos];
    for (int beta = 0; beta <= 1; ++beta) {
      const RatVector& pt = z.z[pos][beta];
      if (static_cast<int>(pt.size()) != P.n)
        throw std::invalid_argument("z-family check: point width mismatch");
      if (pt[i] != beta)
        throw std::invalid_argument("z-family check: point not in its slice");
      if (!polytope_member(P, pt))
        throw std::invalid_argument("z-family check: point outside the polytope");
    }
  }
}

}  // namespace

bool check_condition_iii(const BoxPolytope& P, const RatVector& x, const ZFamily& z) {
  require_family_valid(P, x, z);
  for (int i : z.support) {
    const RatVector& z1 = z.at(i, 1);
    const RatVector& z0 = z.at(i, 0);
    for (int k = 0; k < P.n; ++k)
      if (x[i] * z1[k] + (Rational(1) - x[i]) * z0[k] != x[k]) return false;
  }
  for (int i : z.support)
    for (int j : z.support) {
      if (j <= i) continue;
      if (z.at(i, 1)[j] * x[i] != z.at(j, 1)[i] * x[j]) return false;
    }
  return true;
}

bool check_condition_iv(const BoxPolytope& P, const RatVector& x, const ZFamily& z) {
  require_family_valid(P, x, z);
  for (int i : z.support)
    for (int j : z.support) {
      if (j <= i) continue;
      if (z.at(i, 1)[j] * x[i] != z.at(j, 1)[i] * x[j]) return false;
    }
  for (int i : z.support)
    for (int j : z.support) {
      if (i == j) continue;
      if (z.at(i, 0)[j] * (Rational(1) - x[i]) != (Rational(1) - z.at(j, 1)[i]) * x[j])
        return false;
    }
  for (int i : z.support)
    for (int beta = 0; beta <= 1; ++beta)
      for (int k : P.binary)
        if (!z.has(k) && z.at(i, beta)[k] != x[k]) return false;
  return true;
}

std::optional<ZFamily> find_z(const BoxPolytope& P, const RatVector& x, ZCondition which) {
  if (static_cast<int>(x.size()) != P.n)
    throw std::invalid_argument("find_z: dimension mismatch");
  if (!polytope_member(P, x)) throw std::invalid_argument("find_z: point not in the polytope");

  ZFamily fam;
  fam.support = fractional_support(x, P.binary);
  const int ns = static_cast<int>(fam.support.size());
  if (ns == 0) return fam;  // vacuous on integral points

  // Variable layout: per fractional coordinate (ascending), first the
  // beta=0 point then the beta=1 point, n coordinates each.
  LinearSystem sys;
  const int n = P.n;
  auto zvar = [&](int pos, int beta, int k) { return (2 * pos + beta) * n + k; };
  for (int pos = 0; pos < ns; ++pos)
    for (int beta = 0; beta <= 1; ++beta)
      for (int k = 0; k < n; ++k)
        sys.vars.push_back("z" + std::to_string(fam.support[pos]) + "_" +
                           std::to_string(beta) + "_" + std::to_string(k + 1));
  const int nv = static_cast<int>(sys.vars.size());

  const LinearSystem base = to_system(P);
  for (int pos = 0; pos < ns; ++pos)
    for (int beta = 0; beta <= 1; ++beta) {
      for (const Row& row : base.rows) {
        RatVector coef(nv, Rational(0));
        for (int k = 0; k < n; ++k) coef[zvar(pos, beta, k)] = row.coef[k];
        sys.add_row(std::move(coef), row.rel, row.rhs, row.label);
      }
      RatVector fix(nv, Rational(0));
      fix[zvar(pos, beta, fam.support[pos])] = 1;
      sys.add_row(std::move(fix), Relation::Equal, Rational(beta), "slice");
    }

  if (which == ZCondition::III) {
    for (int pos = 0; pos < ns; ++pos) {
      const int i = fam.support[pos];
      for (int k = 0; k < n; ++k) {
        RatVector coef(nv, Rational(0));
        coef[zvar(pos, 1, k)] = x[i];
        coef[zvar(pos, 0, k)] = Rational(Rational(1) - x[i]);
        sys.add_row(std::move(coef), Relation::Equal, x[k], "split");
      }
    }
  }
  // Cross products are part of both condition sets.
  for (int pi = 0; pi < ns; ++pi)
    for (int pj = pi + 1; pj < ns; ++pj) {
      const int i = fam.support[pi], j = fam.support[pj];
      RatVector coef(nv, Rational(0));
      coef[zvar(pi, 1, j)] = x[i];
      coef[zvar(pj, 1, i)] = Rational(-x[j]);
      sys.add_row(std::move(coef), Relation::Equal, Rational(0), "cross");
    }
  if (which == ZCondition::IV) {
    for (int pi = 0; pi < ns; ++pi)
      for (int pj = 0; pj < ns; ++pj) {
        if (pi == pj) continue;
        const int i = fam.support[pi], j = fam.support[pj];
        RatVector coef(nv, Rational(0));
        coef[zvar(pi, 0, j)] = Rational(Rational(1) - x[i]);
        coef[zvar(pj, 1, i)] = x[j];
        sys.add_row(std::move(coef), Relation::Equal, x[j], "complement-cross");
      }
    for (int pos = 0; pos < ns; ++pos)
      for (int beta = 0; beta <= 1; ++beta)
        for (int k : P.binary) {
          if (std::binary_search(fam.support.begin(), fam.support.end(), k)) continue;
          RatVector coef(nv, Rational(0));
          coef[zvar(pos, beta, k)] = 1;
          sys.add_row(std::move(coef), Relation::Equal, x[k], "pin");
        }
  }

  const LpOutcome out = solve(sys, RatVector(nv, Rational(0)), Sense::Minimize);
  if (out.is_infeasible()) return std::nullopt;
  if (!out.is_optimal()) throw std::logic_error("find_z: unexpected LP outcome");

  for (int pos = 0; pos < ns; ++pos) {
    std::array<RatVector, 2> pair;
    for (int beta = 0; beta <= 1; ++beta) {
      RatVector pt(n);
      for (int k = 0; k < n; ++k) pt[k] = out.optimal->point[zvar(pos, beta, k)];
      pair[beta] = std::move(pt);
    }
    fam.z.push_back(std::move(pair));
  }
  const bool ok = which == ZCondition::III ? check_condition_iii(P, x, fam)
                                           : check_condition_iv(P, x, fam);
  if (!ok) throw std::logic_error("find_z: solver witness fails the condition re-check");
  return fam;
}

}  // namespace rltlab
