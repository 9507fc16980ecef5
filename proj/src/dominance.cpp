#include "rltlab/dominance.hpp"

#include "rltlab/characterization.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace rltlab {

namespace {

void check_family(const std::vector<Pattern>& family, int d) {
  if (d < 1) throw std::invalid_argument("pattern family: dimension must be positive");
  if (family.empty()) throw std::invalid_argument("pattern family: empty");
  std::set<Pattern> seen;
  for (const Pattern& p : family) {
    if (static_cast<int>(p.size()) != d)
      throw std::invalid_argument("pattern family: width mismatch");
    for (int b : p)
      if (b != 0 && b != 1) throw std::invalid_argument("pattern family: entries must be 0/1");
    if (!seen.insert(p).second)
      throw std::invalid_argument("pattern family: duplicate pattern");
  }
}

/// True iff some family member other than `t` agrees with member `t` at
/// coordinate j.
bool has_peer_at(const std::vector<Pattern>& family, int t, int j) {
  for (std::size_t s = 0; s < family.size(); ++s)
    if (static_cast<int>(s) != t && family[s][j] == family[t][j]) return true;
  return false;
}

RatVector pattern_point(const Pattern& p) {
  RatVector x(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) x[k] = p[k];
  return x;
}

Disjunction family_disjunction(const std::vector<Pattern>& family, int d) {
  SubsetDisjunction sd;
  for (int k = 0; k < d; ++k) sd.D.push_back(k);
  sd.patterns = family;
  return expand(sd, d);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RatVector random_objective(std::mt19937_64& g, int n) {
  RatVector c(n);
  for (int v = 0; v < n; ++v) c[v] = Rational(static_cast<long>(g() % 11) - 5);
  return c;
}

}  // namespace

UniqueFaceReport check_unique_face_condition(const std::vector<Pattern>& family, int d) {
  check_family(family, d);
  UniqueFaceReport rep;
  std::vector<int> coords;
  for (std::size_t t = 0; t < family.size(); ++t) {
    int witness = -1;
    for (int j = 0; j < d && witness < 0; ++j)
      if (!has_peer_at(family, static_cast<int>(t), j)) witness = j;
    if (witness < 0) {
      rep.holds = false;
      rep.failing = static_cast<int>(t);
      rep.agreeing.assign(d, -1);
      for (int i = 0; i < d; ++i)
        for (std::size_t s = 0; s < family.size(); ++s)
          if (s != t && family[s][i] == family[t][i]) {
            rep.agreeing[i] = static_cast<int>(s);
            break;
          }
      return rep;
    }
    coords.push_back(witness);
  }
  rep.holds = true;
  rep.witness_coord = std::move(coords);
  return rep;
}

Counterexample build_counterexample(const std::vector<Pattern>& family, int d, int star,
                                    std::optional<Rational> eps_override) {
  check_family(family, d);
  if (star < 0 || star >= static_cast<int>(family.size()))
    throw std::invalid_argument("build_counterexample: star index out of range");
  for (int j = 0; j < d; ++j)
    if (!has_peer_at(family, star, j))
      throw std::invalid_argument(
          "build_counterexample: the star pattern has a unique-face coordinate");

  Counterexample ce;
  ce.star = star;
  for (int i = 0; i < d; ++i)
    if (family[star][i] == 0) ce.complemented.push_back(i);
  ce.family = family;
  for (Pattern& p : ce.family)
    for (int i : ce.complemented) p[i] = 1 - p[i];

  ce.eps = eps_override ? *eps_override : rat(1, d * d + 1);
  if (ce.eps <= 0 || ce.eps >= rat(1, d * d) || ce.eps > rat(1, d))
    throw std::invalid_argument("build_counterexample: eps outside the valid range");
  ce.alpha = Rational(ce.eps / (1 + ce.eps));

  // Peer for coordinate i: lexicographically smallest non-star pattern with a
  // 1 at i (it exists because star has an agreeing peer everywhere and the
  // complemented star is all-ones); then its smallest zero coordinate.
  ce.support_peer.assign(d, -1);
  ce.zero_coord.assign(d, -1);
  for (int i = 0; i < d; ++i) {
    for (std::size_t t = 0; t < ce.family.size(); ++t) {
      if (static_cast<int>(t) == star || ce.family[t][i] != 1) continue;
      if (ce.support_peer[i] < 0 || ce.family[t] < ce.family[ce.support_peer[i]])
        ce.support_peer[i] = static_cast<int>(t);
    }
    for (int j = 0; j < d; ++j)
      if (ce.family[ce.support_peer[i]][j] == 0) {
        ce.zero_coord[i] = j;
        break;
      }
  }

  std::vector<RatVector> V;
  for (const Pattern& p : ce.family) V.push_back(pattern_point(p));
  ce.polytope = hull_from_vertices(V, 5);
  for (int i = 0; i < d; ++i) ce.polytope.binary.push_back(i);
  ce.polytope.description = "pattern hull with a shifted coordinate-sum budget";
  ce.polytope.rows.emplace_back(RatVector(d, Rational(1)), Relation::LessEq,
                                Rational(d - ce.alpha), "budget");

  const Rational base = Rational(1 - d * ce.eps);
  ce.xhat.assign(d, Rational(0));
  ce.yhat.assign(d, RatVector(d, Rational(0)));
  for (int a = 0; a < d; ++a) {
    Rational xa = base;  // the all-ones star contributes everywhere
    for (int i = 0; i < d; ++i) xa += ce.eps * ce.family[ce.support_peer[i]][a];
    ce.xhat[a] = xa;
    for (int b = 0; b < d; ++b) {
      Rational yab = base;
      for (int i = 0; i < d; ++i)
        yab += ce.eps * ce.family[ce.support_peer[i]][a] * ce.family[ce.support_peer[i]][b];
      ce.yhat[a][b] = yab;
    }
  }
  return ce;
}

bool verify_counterexample(const Counterexample& ce) {
  const int d = ce.polytope.n;
  if (static_cast<int>(ce.xhat.size()) != d || static_cast<int>(ce.yhat.size()) != d)
    return false;
  if (ce.alpha != Rational(ce.eps / (1 + ce.eps))) return false;
  if (ce.polytope.rows.empty()) return false;
  const Row& budget = ce.polytope.rows.back();
  if (budget.label != "budget" || budget.rhs != Rational(d - ce.alpha)) return false;

  // The explicit lifting satisfies the strongly multiplied system row by row.
  const RltEf ef = build_rlt_ef(ce.polytope, ClosureVariant::Strong);
  RatVector lifted(ef.lifted.sys.vars.size(), Rational(0));
  for (int a = 0; a < d; ++a) lifted[a] = ce.xhat[a];
  for (int j : ef.mult)
    for (int i = 0; i < d; ++i) lifted[ef.y_index(i, j)] = ce.yhat[i][j];
  if (!satisfies(ef.lifted.sys, lifted)) return false;

  // Fresh membership LPs for both closure variants (the construction has all
  // coordinates binary, so the weak variant must agree).
  if (!closure_member(ce.polytope, ClosureVariant::Strong, ce.xhat).member) return false;
  if (!closure_member(ce.polytope, ClosureVariant::Weak, ce.xhat).member) return false;

  // The pattern-fixing disjunction hull excludes xhat...
  if (hull_member(ce.polytope, family_disjunction(ce.family, d), ce.xhat).member) return false;
  // ...because its coordinate sum exceeds d - 1 while every surviving
  // disjunct keeps the sum at most d - 1.
  Rational sum(0);
  for (const Rational& v : ce.xhat) sum += v;
  if (sum <= d - 1) return false;

  // Slack and ratio bounds behind the derivation, on the fractional support.
  for (int i : fractional_support(ce.xhat, ce.polytope.binary)) {
    const int j = ce.zero_coord[i];
    if (j < 0) return false;
    if (Rational(ce.xhat[i] - ce.yhat[j][i]) < ce.eps) return false;
    if (Rational(ce.yhat[j][i] / ce.xhat[i]) > Rational(1 / (1 + ce.eps))) return false;
  }
  return true;
}

void replay_cardinality_identity(const BoxPolytope& P, const RltEf& ef,
                                 const std::vector<int>& J, const RatVector& lifted) {
  if (lifted.size() != ef.lifted.sys.vars.size())
    throw std::invalid_argument("replay_cardinality_identity: lifted point width mismatch");
  for (int j : J)
    if (std::find(ef.mult.begin(), ef.mult.end(), j) == ef.mult.end())
      throw std::invalid_argument("replay_cardinality_identity: index not multiplied");
  const int n = ef.n;
  const RatVector x(lifted.begin(), lifted.begin() + n);

  for (int i = 0; i < n; ++i) {
    Rational colsum(0);
    for (int j : J) colsum += lifted[ef.y_index(i, j)];
    if (colsum != x[i])
      throw std::logic_error("replay_cardinality_identity: column sums do not reproduce x");
  }
  RatVector recomb = zeros(n);
  for (int j : J) {
    if (x[j] == 0) {
      for (int i = 0; i < n; ++i)
        if (lifted[ef.y_index(i, j)] != 0)
          throw std::logic_error("replay_cardinality_identity: dead column not zero");
      continue;
    }
    RatVector z(n);
    for (int i = 0; i < n; ++i) z[i] = Rational(lifted[ef.y_index(i, j)] / x[j]);
    if (z[j] != 1)
      throw std::logic_error("replay_cardinality_identity: scaled column not pinned");
    if (!polytope_member(P, z))
      throw std::logic_error("replay_cardinality_identity: scaled column leaves P");
    recomb = axpy(recomb, x[j], z);
  }
  if (recomb != x)
    throw std::logic_error("replay_cardinality_identity: mix does not recombine x");
}

CardinalityDominanceReport verify_cardinality_dominance(const BoxPolytope& P,
                                                        const std::vector<int>& J, int trials,
                                                        std::uint64_t seed) {
  P.check_well_formed();
  if (trials < 0) throw std::invalid_argument("verify_cardinality_dominance: negative trials");
  RatVector eq = zeros(P.n);
  for (int j : J) {
    if (j < 0 || j >= P.n)
      throw std::invalid_argument("verify_cardinality_dominance: index out of range");
    eq[j] = 1;
  }
  CardinalityDominanceReport rep;
  // An empty polytope validates any equation vacuously and has an empty
  // closure, so the dominance holds with nothing to sample.
  if (!solve(to_system(P), zeros(P.n), Sense::Minimize).is_optimal()) {
    rep.equation_valid = true;
    rep.trials = trials;
    return rep;
  }
  if (!is_redundant(to_system(P), Row{eq, Relation::Equal, Rational(1), "card"}).redundant)
    throw std::invalid_argument(
        "verify_cardinality_dominance: the one-hot equation is not valid for P");
  rep.equation_valid = true;

  const RltEf ef = build_rlt_ef(P, ClosureVariant::Strong);
  // Same for a nonempty polytope whose strong closure is empty.
  if (!solve(ef.lifted.sys, zeros(ef.lifted.sys.vars.size()), Sense::Minimize).is_optimal()) {
    rep.trials = trials;
    return rep;
  }
  const Disjunction disj = cardinality_disjunction(P, J);
  std::mt19937_64 g(seed);
  for (int t = 0; t < trials; ++t) {
    RatVector c(ef.lifted.sys.vars.size(), Rational(0));
    const RatVector obj = random_objective(g, P.n);
    for (int v = 0; v < P.n; ++v) c[v] = obj[v];
    const LpOutcome out = solve(ef.lifted.sys, c, Sense::Minimize);
    if (!out.is_optimal())
      throw std::logic_error("verify_cardinality_dominance: closure optimization failed");
    const RatVector& lifted = out.optimal->point;
    replay_cardinality_identity(P, ef, J, lifted);
    const RatVector x(lifted.begin(), lifted.begin() + P.n);
    if (!hull_member(P, disj, x).member)
      throw std::logic_error("verify_cardinality_dominance: closure point escapes the hull");
    rep.optima.push_back(x);
    ++rep.trials;
  }
  return rep;
}

BoxPolytope random_cardinality_polytope(int n, const std::vector<int>& J, std::uint64_t seed) {
  if (n < 1 || n > 4) throw std::invalid_argument("random_cardinality_polytope: n out of range");
  std::vector<bool> in_J(n, false);
  for (int j : J) {
    if (j < 0 || j >= n)
      throw std::invalid_argument("random_cardinality_polytope: index out of range");
    if (in_J[j]) throw std::invalid_argument("random_cardinality_polytope: duplicate index");
    in_J[j] = true;
  }
  if (J.empty()) throw std::invalid_argument("random_cardinality_polytope: empty index set");

  std::vector<RatVector> candidates;
  for (int mask = 0; mask < (1 << n); ++mask) {
    int ones_in_J = 0;
    for (int j : J) ones_in_J += (mask >> j) & 1;
    if (ones_in_J != 1) continue;
    RatVector p(n);
    for (int v = 0; v < n; ++v) p[v] = (mask >> v) & 1;
    candidates.push_back(std::move(p));
  }
  std::mt19937_64 g(seed);
  std::vector<RatVector> kept;
  for (const RatVector& p : candidates)
    if (g() & 1) kept.push_back(p);
  if (kept.empty()) kept.push_back(candidates[g() % candidates.size()]);

  BoxPolytope P = hull_from_vertices(kept);
  for (int v = 0; v < n; ++v) P.binary.push_back(v);
  P.description = "random hull of one-hot points with valid cuts";
  // Each cut keeps a random subset of the generators feasible, always
  // including a shared anchor so the cuts cannot jointly empty the polytope;
  // generators outside a cut's subset may be sliced off, so the instances
  // genuinely vary while the one-hot equation stays valid.
  const std::size_t anchor = g() % kept.size();
  for (int k = 0; k < 2; ++k) {
    RatVector coef(n);
    for (int v = 0; v < n; ++v)
      coef[v] = rat(static_cast<long>(g() % 7) - 3, static_cast<long>(1 + g() % 2));
    Rational rhs = dot(coef, kept[anchor]);
    for (const RatVector& p : kept)
      if (g() & 1) rhs = std::max(rhs, dot(coef, p));
    P.rows.emplace_back(std::move(coef), Relation::LessEq, rhs, "cut" + std::to_string(k + 1));
  }
  return P;
}

namespace {

/// Sampled dominance for a condition-holding family: a few random objectives
/// over the strong closure of each probe polytope, each optimum checked
/// against the family-disjunction hull. Empty closures pass trivially.
bool sampled_dominance_holds(const std::vector<Pattern>& family, int d, int trials,
                             std::uint64_t seed) {
  std::vector<RatVector> V;
  for (const Pattern& p : family) V.push_back(pattern_point(p));
  const BoxPolytope hull = hull_from_vertices(V, 5);
  const Rational eps = rat(1, d * d + 1);
  const Rational alpha = Rational(eps / (1 + eps));

  std::vector<BoxPolytope> probes;
  {
    BoxPolytope budget = hull;
    budget.rows.emplace_back(RatVector(d, Rational(1)), Relation::LessEq, Rational(d - alpha),
                             "budget");
    probes.push_back(std::move(budget));
  }
  std::mt19937_64 g(mix_seed(seed, 1));
  for (int k = 0; k < 3; ++k) {
    BoxPolytope probe = hull;
    for (int c = 0; c < 2; ++c) {
      RatVector coef(d);
      for (int v = 0; v < d; ++v) coef[v] = Rational(static_cast<long>(g() % 7) - 3);
      Rational rhs = dot(coef, V[0]);
      for (const RatVector& p : V) rhs = std::max(rhs, dot(coef, p));
      probe.rows.emplace_back(std::move(coef), Relation::LessEq, rhs,
                              "cut" + std::to_string(c + 1));
    }
    probes.push_back(std::move(probe));
  }
  for (BoxPolytope& probe : probes)
    for (int v = 0; v < d; ++v) probe.binary.push_back(v);

  const Disjunction disj = family_disjunction(family, d);
  for (const BoxPolytope& probe : probes) {
    const RltEf ef = build_rlt_ef(probe, ClosureVariant::Strong);
    const std::size_t nv = ef.lifted.sys.vars.size();
    if (!solve(ef.lifted.sys, RatVector(nv, Rational(0)), Sense::Minimize).is_optimal())
      continue;  // closure empty: contained in any hull
    for (int t = 0; t < trials; ++t) {
      RatVector c(nv, Rational(0));
      for (int v = 0; v < d; ++v) c[v] = Rational(static_cast<long>(g() % 11) - 5);
      const LpOutcome out = solve(ef.lifted.sys, c, Sense::Minimize);
      if (!out.is_optimal()) return false;
      const RatVector x(out.optimal->point.begin(), out.optimal->point.begin() + d);
      if (!hull_member(probe, disj, x).member) return false;
    }
  }
  return true;
}

}  // namespace

ClassificationTable classify_all(int d, int trials_per_case, std::uint64_t seed) {
  if (d < 1 || d > 3) throw std::invalid_argument("classify_all: dimension out of range");
  ClassificationTable table;
  table.d = d;
  const int npat = 1 << d;
  std::vector<Pattern> all(npat, Pattern(d, 0));
  for (int e = 0; e < npat; ++e)
    for (int k = 0; k < d; ++k) all[e][k] = (e >> k) & 1;

  for (std::uint32_t mask = 1; mask < (1u << npat); ++mask) {
    std::vector<Pattern> family;
    for (int e = 0; e < npat; ++e)
      if (mask & (1u << e)) family.push_back(all[e]);
    const UniqueFaceReport rep = check_unique_face_condition(family, d);
    ClassificationEntry entry;
    entry.mask = mask;
    entry.condition_holds = rep.holds;
    if (rep.holds) {
      entry.verified = sampled_dominance_holds(family, d, trials_per_case, mix_seed(seed, mask));
    } else {
      const Counterexample ce = build_counterexample(family, d, rep.failing);
      entry.verified = verify_counterexample(ce);
    }
    if (!entry.verified) ++table.discrepancies;
    table.entries.push_back(entry);
  }
  return table;
}

WeakGapFindings explore_weak_gap(const std::vector<std::uint64_t>& seeds) {
  WeakGapFindings findings;
  for (std::uint64_t seed : seeds) {
    std::mt19937_64 g(seed);
    const int n = 2 + static_cast<int>(g() % 3);
    std::vector<int> coords(n);
    for (int v = 0; v < n; ++v) coords[v] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(coords[v], coords[g() % (v + 1)]);
    std::vector<int> J(coords.begin(), coords.begin() + 1 + g() % n);
    std::sort(J.begin(), J.end());

    BoxPolytope P = random_cardinality_polytope(n, J, g());
    // Shrink the multiplied set to a random superset of J: the one-variable
    // closures are where a gap could hide, since with all coordinates
    // multiplied the strong-closure guarantee applies verbatim.
    std::vector<int> B = J;
    for (int v = 0; v < n; ++v)
      if (std::find(B.begin(), B.end(), v) == B.end() && (g() & 1)) B.push_back(v);
    std::sort(B.begin(), B.end());
    P.binary = B;
    ++findings.polytopes;

    const RltEf ef = build_rlt_ef(P, ClosureVariant::Weak);
    const Disjunction disj = cardinality_disjunction(P, J);
    for (int t = 0; t < 3; ++t) {
      RatVector c(ef.lifted.sys.vars.size(), Rational(0));
      for (int v = 0; v < n; ++v) c[v] = Rational(static_cast<long>(g() % 11) - 5);
      const LpOutcome out = solve(ef.lifted.sys, c, Sense::Minimize);
      if (!out.is_optimal()) continue;
      ++findings.samples;
      const RatVector x(out.optimal->point.begin(), out.optimal->point.begin() + n);
      const ProjectionMembership hull = hull_member(P, disj, x);
      if (hull.member) continue;
      WeakGapCandidate cand;
      cand.seed = seed;
      cand.polytope = P;
      cand.J = J;
      cand.point = x;
      cand.cut = hull.cut;
      findings.candidates.push_back(std::move(cand));
    }
  }
  return findings;
}

}  // namespace rltlab
