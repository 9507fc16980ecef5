#include "rltlab/disjunctive.hpp"

#include <algorithm>
#include <stdexcept>

namespace rltlab {

void Disjunction::check_well_formed() const {
  if (n <= 0) throw std::invalid_argument("Disjunction: n must be positive");
  if (disjuncts.empty()) throw std::invalid_argument("Disjunction: no disjuncts");
  for (const LinearSystem& d : disjuncts) {
    if (static_cast<int>(d.vars.size()) != n)
      throw std::invalid_argument("Disjunction: disjunct width mismatch");
    d.check_well_formed();
    if (!d.lower.empty() || !d.upper.empty())
      throw std::invalid_argument("Disjunction: disjunct bounds must be explicit rows");
  }
}

Disjunction expand(const SubsetDisjunction& sd, int n) {
  if (sd.patterns.empty()) throw std::invalid_argument("expand: no patterns");
  Disjunction disj;
  disj.n = n;
  for (const std::vector<int>& pat : sd.patterns) {
    if (pat.size() != sd.D.size()) throw std::invalid_argument("expand: pattern width mismatch");
    LinearSystem piece;
    piece.vars = coordinate_names(n);
    for (std::size_t t = 0; t < sd.D.size(); ++t) {
      const int v = sd.D[t];
      if (v < 0 || v >= n) throw std::invalid_argument("expand: coordinate out of range");
      if (pat[t] != 0 && pat[t] != 1) throw std::invalid_argument("expand: patterns must be 0/1");
      RatVector coef = zeros(n);
      coef[v] = 1;
      piece.add_row(std::move(coef), Relation::Equal, Rational(pat[t]),
                    "x" + std::to_string(v + 1) + "=" + std::to_string(pat[t]));
    }
    disj.disjuncts.push_back(std::move(piece));
  }
  return disj;
}

BalasEf build_balas_ef(const BoxPolytope& P, const Disjunction& disj) {
  P.check_well_formed();
  disj.check_well_formed();
  if (disj.n != P.n) throw std::invalid_argument("build_balas_ef: width mismatch");

  BalasEf ef;
  ef.n = P.n;
  ef.H = static_cast<int>(disj.disjuncts.size());
  LinearSystem& sys = ef.lifted.sys;
  ef.lifted.nx = P.n;

  sys.vars = coordinate_names(P.n);
  for (int h = 0; h < ef.H; ++h)
    for (int i = 0; i < P.n; ++i)
      sys.vars.push_back("x" + std::to_string(i + 1) + "^" + std::to_string(h + 1));
  for (int h = 0; h < ef.H; ++h) sys.vars.push_back("lam" + std::to_string(h + 1));
  const int nv = static_cast<int>(sys.vars.size());

  const LinearSystem base = to_system(P);
  for (int h = 0; h < ef.H; ++h) {
    const std::string tag = "^" + std::to_string(h + 1);
    for (const Row& row : base.rows) {
      RatVector coef(nv, Rational(0));
      for (int i = 0; i < P.n; ++i) coef[ef.copy_index(h, i)] = row.coef[i];
      coef[ef.lambda_index(h)] = Rational(-row.rhs);
      sys.add_row(std::move(coef), row.rel, Rational(0), row.label + tag);
    }
  }
  for (int h = 0; h < ef.H; ++h) {
    const std::string tag = "^" + std::to_string(h + 1);
    for (const Row& row : disj.disjuncts[h].rows) {
      RatVector coef(nv, Rational(0));
      for (int i = 0; i < P.n; ++i) coef[ef.copy_index(h, i)] = row.coef[i];
      coef[ef.lambda_index(h)] = Rational(-row.rhs);
      sys.add_row(std::move(coef), row.rel, Rational(0), row.label + tag);
    }
  }
  {
    RatVector coef(nv, Rational(0));
    for (int h = 0; h < ef.H; ++h) coef[ef.lambda_index(h)] = 1;
    sys.add_row(std::move(coef), Relation::Equal, Rational(1), "weights");
  }
  for (int i = 0; i < P.n; ++i) {
    RatVector coef(nv, Rational(0));
    coef[i] = 1;
    for (int h = 0; h < ef.H; ++h) coef[ef.copy_index(h, i)] = -1;
    sys.add_row(std::move(coef), Relation::Equal, Rational(0),
                "recomb-x" + std::to_string(i + 1));
  }
  for (int h = 0; h < ef.H; ++h) {
    RatVector coef(nv, Rational(0));
    coef[ef.lambda_index(h)] = 1;
    sys.add_row(std::move(coef), Relation::GreaterEq, Rational(0),
                "lam" + std::to_string(h + 1) + ">=0");
  }
  return ef;
}

ProjectionMembership hull_member(const BoxPolytope& P, const Disjunction& disj,
                                 const RatVector& x) {
  if (static_cast<int>(x.size()) != P.n)
    throw std::invalid_argument("hull_member: dimension mismatch");
  if (!box_member(x)) throw std::invalid_argument("hull_member: point outside the unit box");
  return project_member(build_balas_ef(P, disj).lifted, x);
}

Disjunction variable_disjunction(const BoxPolytope& P, int j) {
  P.check_well_formed();
  if (!P.is_binary(j)) throw std::invalid_argument("variable_disjunction: coordinate not binary");
  SubsetDisjunction sd;
  sd.D = {j};
  sd.patterns = {{0}, {1}};
  return expand(sd, P.n);
}

Disjunction cardinality_disjunction(const BoxPolytope& P, const std::vector<int>& J) {
  P.check_well_formed();
  if (J.empty()) throw std::invalid_argument("cardinality_disjunction: empty index set");
  Disjunction disj;
  disj.n = P.n;
  for (int j : J) {
    if (!P.is_binary(j))
      throw std::invalid_argument("cardinality_disjunction: coordinate not binary");
    LinearSystem piece;
    piece.vars = coordinate_names(P.n);
    RatVector coef = zeros(P.n);
    coef[j] = 1;
    piece.add_row(std::move(coef), Relation::Equal, Rational(1),
                  "x" + std::to_string(j + 1) + "=1");
    disj.disjuncts.push_back(std::move(piece));
  }
  return disj;
}

LandpCertificate landp_member(const BoxPolytope& P, const RatVector& x) {
  if (static_cast<int>(x.size()) != P.n)
    throw std::invalid_argument("landp_member: dimension mismatch");
  if (!box_member(x)) throw std::invalid_argument("landp_member: point outside the unit box");
  LandpCertificate cert;
  for (int j : P.binary) {
    cert.per_coordinate.push_back(hull_member(P, variable_disjunction(P, j), x));
    if (!cert.per_coordinate.back().member) {
      cert.member = false;
      cert.failing = j;
      break;
    }
  }
  return cert;
}

}  // namespace rltlab
