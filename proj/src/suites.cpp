#include "rltlab/suites.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

#include "rltlab/characterization.hpp"
#include "rltlab/disjunctive.hpp"
#include "rltlab/dominance.hpp"
#include "rltlab/fixtures.hpp"
#include "rltlab/io.hpp"
#include "rltlab/qap.hpp"
#include "rltlab/rlt.hpp"

namespace rltlab {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RatVector random_objective(std::mt19937_64& g, int n) {
  RatVector c(n);
  for (int i = 0; i < n; ++i) c[i] = Rational(static_cast<long>(g() % 11) - 5);
  return c;
}

RatVector random_box_point(std::mt19937_64& g, int n) {
  RatVector x(n);
  for (int i = 0; i < n; ++i) {
    const long den = 1 + static_cast<long>(g() % 8);
    x[i] = rat(static_cast<long>(g() % (den + 1)), den);
  }
  return x;
}

/// Closure optima for a handful of random objectives; empty when the closure
/// itself is empty.
std::vector<RatVector> closure_samples(const BoxPolytope& P, ClosureVariant variant,
                                       std::mt19937_64& g, int count) {
  std::vector<RatVector> pts;
  const RltEf ef = build_rlt_ef(P, variant);
  const LpOutcome probe = solve(ef.lifted.sys, zeros(ef.lifted.sys.vars.size()),
                                Sense::Minimize);
  if (!probe.is_optimal()) return pts;
  for (int k = 0; k < count; ++k) {
    RatVector c(ef.lifted.sys.vars.size(), Rational(0));
    for (int i = 0; i < P.n; ++i) c[i] = Rational(static_cast<long>(g() % 11) - 5);
    const LpOutcome out = solve(ef.lifted.sys, c, Sense::Maximize);
    if (out.is_optimal())
      pts.emplace_back(out.optimal->point.begin(), out.optimal->point.begin() + P.n);
  }
  return pts;
}

/// A valid inequality c.x <= max_P c.x, tight somewhere on P.
Row supporting_row(const BoxPolytope& P, const RatVector& c) {
  const LpOutcome out = solve(to_system(P), c, Sense::Maximize);
  if (!out.is_optimal()) throw std::logic_error("supporting_row: polytope not bounded-nonempty");
  return Row(c, Relation::LessEq, out.optimal->value, "valid");
}

struct SuiteRun {
  SuiteReport rep;

  bool violated() const { return !rep.failure.empty(); }
  void fail(const std::string& what, nlohmann::ordered_json inst) {
    if (violated()) return;
    rep.failure = what;
    rep.falsifying = std::move(inst);
  }
  /// Counts the evaluation and records a violation when `ok` is false.
  bool expect(bool ok, const std::string& what, const nlohmann::ordered_json& inst) {
    ++rep.checks;
    if (!ok) fail(what, inst);
    return ok;
  }
};

nlohmann::ordered_json instance_json(std::uint64_t seed, const BoxPolytope& P) {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["polytope"] = polytope_to_json(P);
  return j;
}

nlohmann::ordered_json point_json(std::uint64_t seed, const BoxPolytope& P,
                                  const RatVector& x) {
  nlohmann::ordered_json j = instance_json(seed, P);
  j["point"] = point_text(x);
  return j;
}

void run_prop2(SuiteRun& run, std::uint64_t seed, int trials) {
  for (int t = 0; t < trials && !run.violated(); ++t) {
    const std::uint64_t s = mix(seed, t);
    const BoxPolytope P = random_box_polytope(s);
    std::mt19937_64 g(mix(s, 101));
    ++run.rep.trials;
    for (const RatVector& x : closure_samples(P, ClosureVariant::Weak, g, 3)) {
      if (!run.expect(landp_member(P, x).member,
                      "weak-closure point escapes the lift-and-project hull",
                      point_json(s, P, x)))
        return;
    }
  }
}

void run_prop3(SuiteRun& run, std::uint64_t seed, int trials) {
  for (int t = 0; t < trials && !run.violated(); ++t) {
    const std::uint64_t s = mix(seed, t);
    const BoxPolytope P = random_box_polytope(s);
    std::mt19937_64 g(mix(s, 202));
    ++run.rep.trials;

    const std::vector<RatVector> weak_pts = closure_samples(P, ClosureVariant::Weak, g, 2);
    const std::vector<RatVector> strong_pts =
        closure_samples(P, ClosureVariant::Strong, g, 2);

    // Containment chain: binary-integral vertices belong to both closures,
    // strong samples to the weak closure, weak samples to the polytope.
    for (const RatVector& v : vertices(P)) {
      bool integral = true;
      for (int b : P.binary) integral = integral && (v[b] == 0 || v[b] == 1);
      if (!integral) continue;
      if (!run.expect(closure_member(P, ClosureVariant::Weak, v).member &&
                          closure_member(P, ClosureVariant::Strong, v).member,
                      "binary-integral vertex missing from a closure", point_json(s, P, v)))
        return;
    }
    for (const RatVector& x : strong_pts)
      if (!run.expect(closure_member(P, ClosureVariant::Weak, x).member,
                      "strong-closure point missing from the weak closure",
                      point_json(s, P, x)))
        return;
    for (const RatVector& x : weak_pts)
      if (!run.expect(polytope_member(P, x), "weak-closure point escapes the polytope",
                      point_json(s, P, x)))
        return;

    // Query points reused by the verdict-equality properties.
    std::vector<RatVector> pts = weak_pts;
    pts.insert(pts.end(), strong_pts.begin(), strong_pts.end());
    pts.push_back(random_box_point(g, P.n));
    pts.push_back(random_box_point(g, P.n));

    // Redundant extra rows never change a verdict.
    const Row valid = supporting_row(P, random_objective(g, P.n));
    BoxPolytope P2 = P;
    P2.rows.push_back(valid);
    for (const RatVector& x : pts)
      for (ClosureVariant v : {ClosureVariant::Weak, ClosureVariant::Strong})
        if (!run.expect(closure_member(P, v, x).member == closure_member(P2, v, x).member,
                        "redundant row changed a closure verdict", point_json(s, P, x)))
          return;

    // Coordinate flips commute with the closures.
    if (!P.binary.empty()) {
      const int k = P.binary[g() % P.binary.size()];
      const BoxPolytope Pk = complement(P, k);
      for (const RatVector& x : pts) {
        RatVector xk = x;
        xk[k] = Rational(1 - xk[k]);
        for (ClosureVariant v : {ClosureVariant::Weak, ClosureVariant::Strong})
          if (!run.expect(closure_member(P, v, x).member == closure_member(Pk, v, xk).member,
                          "coordinate flip changed a closure verdict", point_json(s, P, x)))
            return;
      }
    }

    // Faces commute: membership in the face's closure is membership in the
    // closure plus tightness of the face row.
    const BoxPolytope F = face(P, valid.coef, valid.rhs);
    for (const RatVector& x : pts)
      for (ClosureVariant v : {ClosureVariant::Weak, ClosureVariant::Strong}) {
        const bool expected =
            closure_member(P, v, x).member && dot(valid.coef, x) == valid.rhs;
        if (!run.expect(closure_member(F, v, x).member == expected,
                        "face closure disagrees with tight closure membership",
                        point_json(s, P, x)))
          return;
      }

    // Monotonicity: dropping a row grows the polytope and both closures.
    if (!P.rows.empty()) {
      BoxPolytope Q = P;
      Q.rows.pop_back();
      for (const RatVector& x : weak_pts)
        if (!run.expect(closure_member(Q, ClosureVariant::Weak, x).member,
                        "weak closure not monotone under row removal", point_json(s, P, x)))
          return;
      for (const RatVector& x : strong_pts)
        if (!run.expect(closure_member(Q, ClosureVariant::Strong, x).member,
                        "strong closure not monotone under row removal", point_json(s, P, x)))
          return;
    }

    // The four product-bound families are implied by the lifted system
    // (vacuous, and unsupported by the redundancy certificate, when the
    // closure is empty).
    for (ClosureVariant v : {ClosureVariant::Weak, ClosureVariant::Strong}) {
      const RltEf ef = build_rlt_ef(P, v);
      if (!solve(ef.lifted.sys, zeros(ef.lifted.sys.vars.size()), Sense::Minimize)
               .is_optimal())
        continue;
      const LinearSystem mc = mccormick_system(P, v);
      std::vector<std::size_t> rows(mc.rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
      std::shuffle(rows.begin(), rows.end(), g);
      const std::size_t take = std::min<std::size_t>(rows.size(), 6);
      for (std::size_t r = 0; r < take; ++r) {
        nlohmann::ordered_json inst = instance_json(s, P);
        inst["row"] = row_to_json(mc.rows[rows[r]]);
        if (!run.expect(is_redundant(ef.lifted.sys, mc.rows[rows[r]]).redundant,
                        "product bound not implied by the lifted system", inst))
          return;
      }
    }
  }
}

void run_thm3(SuiteRun& run, std::uint64_t seed, int trials) {
  for (int t = 0; t < trials && !run.violated(); ++t) {
    const std::uint64_t s = mix(seed, t);
    std::mt19937_64 g(mix(s, 303));

    // Points of P itself: two optimization vertices and their mix, plus a
    // weak-closure optimum when one exists.
    const auto sample_in_P = [&](const BoxPolytope& P) {
      std::vector<RatVector> pts;
      const LinearSystem sys = to_system(P);
      for (int k = 0; k < 2; ++k) {
        const LpOutcome out = solve(sys, random_objective(g, P.n), Sense::Maximize);
        if (out.is_optimal()) pts.push_back(out.optimal->point);
      }
      if (pts.size() == 2)
        pts.push_back(axpy(RatVector(axpy(zeros(P.n), rat(1, 3), pts[0])), rat(2, 3), pts[1]));
      for (const RatVector& x : closure_samples(P, ClosureVariant::Weak, g, 1))
        if (polytope_member(P, x)) pts.push_back(x);
      return pts;
    };

    // Membership/witness-family equivalence on a random binary subset.
    const BoxPolytope P = random_box_polytope(s);
    ++run.rep.trials;
    const RltEf weak_ef = build_rlt_ef(P, ClosureVariant::Weak);
    for (const RatVector& x : sample_in_P(P)) {
      const ProjectionMembership mem = closure_member(P, ClosureVariant::Weak, x);
      const std::optional<ZFamily> zi = find_z(P, x, ZCondition::III);
      if (!run.expect(mem.member == zi.has_value(),
                      "weak membership disagrees with the convex-split family",
                      point_json(s, P, x)))
        return;
      if (mem.member) {
        const ZFamily derived = derive_z(x, extract_y(weak_ef, mem.witness), P.binary);
        if (!run.expect(check_condition_iii(P, x, derived),
                        "derived family fails the convex-split condition",
                        point_json(s, P, x)))
          return;
      }
      if (zi) {
        if (!run.expect(check_condition_iii(P, x, *zi) && check_condition_iv(P, x, *zi),
                        "convex-split family fails the equation-only condition",
                        point_json(s, P, x)))
          return;
      }
    }

    // Full-binary instances: the equation-only family, the strong closure
    // and the weak closure agree exactly.
    const BoxPolytope Pf = random_box_polytope(mix(s, 1), /*full_binary=*/true);
    for (const RatVector& x : sample_in_P(Pf)) {
      const bool weak = closure_member(Pf, ClosureVariant::Weak, x).member;
      const bool strong = closure_member(Pf, ClosureVariant::Strong, x).member;
      const bool ziv = find_z(Pf, x, ZCondition::IV).has_value();
      if (!run.expect(weak == strong && strong == ziv,
                      "full-binary equivalence chain broken", point_json(s, Pf, x)))
        return;
    }
  }
}

void run_thm4(SuiteRun& run, std::uint64_t seed, int trials) {
  // The doubly stochastic polytope with a row equation and a column equation.
  const BoxPolytope birkhoff = assignment_polytope(3);
  for (const std::vector<int>& J :
       {std::vector<int>{0, 1, 2}, std::vector<int>{0, 3, 6}}) {
    nlohmann::ordered_json inst = instance_json(seed, birkhoff);
    inst["J"] = J;
    try {
      const CardinalityDominanceReport rep = verify_cardinality_dominance(birkhoff, J, 2, seed);
      run.rep.checks += rep.trials;
      run.expect(rep.equation_valid, "one-hot equation not valid", inst);
    } catch (const std::exception& e) {
      run.fail(std::string("one-hot dominance violated: ") + e.what(), inst);
    }
    if (run.violated()) return;
  }

  for (int t = 0; t < trials && !run.violated(); ++t) {
    const std::uint64_t s = mix(seed, 1000 + t);
    std::mt19937_64 g(s);
    const int n = 2 + static_cast<int>(g() % 3);
    std::vector<int> coords(n);
    for (int v = 0; v < n; ++v) coords[v] = v;
    for (int v = n - 1; v > 0; --v) std::swap(coords[v], coords[g() % (v + 1)]);
    std::vector<int> J(coords.begin(), coords.begin() + 1 + g() % n);
    std::sort(J.begin(), J.end());
    const BoxPolytope P = random_cardinality_polytope(n, J, g());
    ++run.rep.trials;
    nlohmann::ordered_json inst = instance_json(s, P);
    inst["J"] = J;
    try {
      const CardinalityDominanceReport rep = verify_cardinality_dominance(P, J, 2, g());
      run.rep.checks += rep.trials;
      run.expect(rep.equation_valid, "planted one-hot equation not valid", inst);
    } catch (const std::exception& e) {
      run.fail(std::string("one-hot dominance violated: ") + e.what(), inst);
    }
  }
}

void run_thm7(SuiteRun& run, std::uint64_t seed, int trials) {
  const int per_case = std::clamp(trials, 1, 10);
  for (int d = 1; d <= 3 && !run.violated(); ++d) {
    const ClassificationTable table = classify_all(d, per_case, mix(seed, d));
    run.rep.trials += static_cast<int>(table.entries.size());
    for (const ClassificationEntry& e : table.entries) {
      nlohmann::ordered_json inst;
      inst["d"] = d;
      inst["mask"] = e.mask;
      inst["condition_holds"] = e.condition_holds;
      if (!run.expect(e.verified, "family classification discrepancy", inst)) return;
    }
  }
}

}  // namespace

BoxPolytope random_box_polytope(std::uint64_t seed, bool full_binary) {
  std::mt19937_64 g(mix(seed, 7));
  BoxPolytope P;
  P.n = 1 + static_cast<int>(g() % 4);
  P.description = "random anchored box polytope";
  const RatVector anchor = [&] {
    RatVector x(P.n);
    for (int i = 0; i < P.n; ++i) x[i] = rat(static_cast<long>(g() % 9), 8);
    return x;
  }();
  const int extra = static_cast<int>(g() % 7);
  for (int r = 0; r < extra; ++r) {
    RatVector coef(P.n);
    for (int i = 0; i < P.n; ++i)
      coef[i] = rat(static_cast<long>(g() % 9) - 4, 1 + static_cast<long>(g() % 8));
    const Relation rel = (g() & 1) ? Relation::LessEq : Relation::GreaterEq;
    const Rational slack = rat(static_cast<long>(g() % 4), 8);
    const Rational rhs =
        rel == Relation::LessEq ? Rational(dot(coef, anchor) + slack)
                                : Rational(dot(coef, anchor) - slack);
    P.rows.emplace_back(std::move(coef), rel, rhs, "r" + std::to_string(r + 1));
  }
  for (int i = 0; i < P.n; ++i)
    if (full_binary || (g() & 1)) P.binary.push_back(i);
  return P;
}

namespace {

void check(FigureReport& rep, const std::string& name, bool ok) {
  rep.checks.push_back({name, ok});
}

FigureReport reproduce_fig2() {
  FigureReport rep;
  rep.figure = "fig2";
  const BoxPolytope P = fig2_polytope();
  const RatVector apex = {rat(1, 2), Rational(1)};

  check(rep, "weak closure excludes (1/2,1)",
        !closure_member(P, ClosureVariant::Weak, apex).member);
  for (const Rational& t : {Rational(0), rat(1, 4), rat(1, 2), Rational(1)})
    check(rep, "weak closure contains (" + rat_str(t) + ",0)",
          closure_member(P, ClosureVariant::Weak, {t, Rational(0)}).member);

  const std::optional<ZFamily> ziv = find_z(P, apex, ZCondition::IV);
  check(rep, "equation-only family exists at (1/2,1)", ziv.has_value());
  if (ziv) {
    check(rep, "its zero-side point is the origin",
          ziv->at(0, 0) == RatVector{Rational(0), Rational(0)});
    check(rep, "its one-side point is (1,0)",
          ziv->at(0, 1) == RatVector{Rational(1), Rational(0)});
  }
  check(rep, "no convex-split family exists at (1/2,1)",
        !find_z(P, apex, ZCondition::III).has_value());
  return rep;
}

FigureReport reproduce_fig3() {
  FigureReport rep;
  rep.figure = "fig3";
  const BoxPolytope P = fig3_polytope();
  const RatVector xstar = {rat(1, 3), rat(1, 3), rat(1, 3), rat(2, 3)};

  check(rep, "lift-and-project keeps (1/3,1/3,1/3,2/3)", landp_member(P, xstar).member);
  check(rep, "the strong closure cuts it",
        !closure_member(P, ClosureVariant::Strong, xstar).member);

  bool dominance_ok = true;
  try {
    const CardinalityDominanceReport dom = verify_cardinality_dominance(P, {0, 1, 2}, 3);
    dominance_ok = dom.equation_valid && static_cast<int>(dom.optima.size()) == 3;
  } catch (const std::exception&) {
    dominance_ok = false;
  }
  check(rep, "one-hot dominance on the first three coordinates", dominance_ok);

  // The one-hot hull is exactly the bottom triangle conv{e1,e2,e3}.
  const std::vector<RatVector> triangle = {
      {Rational(1), Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(0), Rational(1), Rational(0)}};
  const Disjunction disj = cardinality_disjunction(P, {0, 1, 2});
  std::vector<RatVector> queries = vertices(P);
  queries.push_back(xstar);
  queries.push_back({rat(1, 3), rat(1, 3), rat(1, 3), Rational(0)});
  queries.push_back({rat(1, 2), rat(1, 2), Rational(0), Rational(0)});
  queries.push_back({rat(1, 4), rat(1, 2), rat(1, 4), Rational(0)});
  queries.push_back(zeros(4));
  bool hull_matches = true;
  for (const RatVector& q : queries)
    hull_matches =
        hull_matches && hull_member(P, disj, q).member == conv_member(triangle, q).member;
  check(rep, "one-hot hull matches the bottom triangle on samples", hull_matches);
  return rep;
}

FigureReport reproduce_fig4() {
  FigureReport rep;
  rep.figure = "fig4";
  const BoxPolytope P = fig4_polytope();
  const RatVector xhat = {rat(1, 4), rat(1, 4), rat(1, 4), Rational(0)};

  // The printed witness: x with the diagonal product matrix y = Diag(x).
  const RltEf ef = build_rlt_ef(P, ClosureVariant::Strong);
  RatVector lifted(ef.lifted.sys.vars.size(), Rational(0));
  for (int i = 0; i < P.n; ++i) lifted[i] = xhat[i];
  for (int i = 0; i < P.n; ++i) lifted[ef.y_index(i, i)] = xhat[i];
  check(rep, "diagonal lifting satisfies every strongly multiplied row",
        satisfies(ef.lifted.sys, lifted));

  SubsetDisjunction sd;
  sd.D = {0, 1, 2, 3};
  sd.patterns = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}};
  check(rep, "the pattern hull excludes the lifted point",
        !hull_member(P, expand(sd, P.n), xhat).member);

  // Full-cardinality hull = the unit-sum slice of the box, on 50 queries.
  const Disjunction card = cardinality_disjunction(P, {0, 1, 2, 3});
  std::vector<RatVector> queries;
  for (int i = 0; i < 4; ++i) {
    RatVector e = zeros(4);
    e[i] = 1;
    queries.push_back(e);
  }
  queries.push_back(xhat);
  std::mt19937_64 g(4);
  while (queries.size() < 50) queries.push_back(random_box_point(g, 4));
  bool hull_matches = true;
  for (const RatVector& q : queries) {
    Rational sum(0);
    for (const Rational& v : q) sum += v;
    hull_matches = hull_matches && hull_member(P, card, q).member == (sum == 1);
  }
  check(rep, "full-cardinality hull matches the unit-sum slice on 50 queries",
        hull_matches);
  return rep;
}

}  // namespace

FigureReport reproduce_figure(const std::string& figure) {
  FigureReport rep;
  if (figure == "fig2")
    rep = reproduce_fig2();
  else if (figure == "fig3")
    rep = reproduce_fig3();
  else if (figure == "fig4")
    rep = reproduce_fig4();
  else
    throw std::invalid_argument("reproduce_figure: unknown figure '" + figure + "'");
  rep.passed = true;
  for (const FigureCheck& c : rep.checks) rep.passed = rep.passed && c.ok;
  return rep;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int trials) {
  if (trials <= 0) throw std::invalid_argument("run_suite: trials must be positive");
  SuiteRun run;
  run.rep.suite = name;
  run.rep.seed = seed;
  if (name == "prop2")
    run_prop2(run, seed, trials);
  else if (name == "prop3")
    run_prop3(run, seed, trials);
  else if (name == "thm3")
    run_thm3(run, seed, trials);
  else if (name == "thm4")
    run_thm4(run, seed, trials);
  else if (name == "thm7")
    run_thm7(run, seed, trials);
  else
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  run.rep.passed = !run.violated();
  return run.rep;
}

}  // namespace rltlab
