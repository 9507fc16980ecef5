#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rltlab/lp.hpp"

using namespace rltlab;

namespace {

LinearSystem two_var(const std::vector<Row>& rows) {
  LinearSystem sys;
  sys.vars = {"x1", "x2"};
  for (const Row& r : rows) sys.add_row(r);
  return sys;
}

long rng_int(std::mt19937_64& eng, long lo, long hi) {
  return lo + static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1));
}

}  // namespace

TEST_CASE("solve: box bound maximum") {
  LinearSystem sys;
  sys.vars = {"x"};
  sys.add_row({Rational(1)}, Relation::LessEq, Rational(1));
  sys.add_row({Rational(1)}, Relation::GreaterEq, Rational(0));
  LpOutcome out = solve(sys, {Rational(1)}, Sense::Maximize);
  REQUIRE(out.is_optimal());
  CHECK(out.optimal->value == 1);
  CHECK(out.optimal->point == RatVector{Rational(1)});
}

TEST_CASE("solve: contradiction pair is infeasible with multipliers (1,1)") {
  LinearSystem sys;
  sys.vars = {"x"};
  sys.add_row({Rational(1)}, Relation::LessEq, Rational(0));
  sys.add_row({Rational(1)}, Relation::GreaterEq, Rational(1));
  LpOutcome out = solve(sys, {Rational(0)}, Sense::Minimize);
  REQUIRE(out.is_infeasible());
  CHECK(out.infeasible->row_mults == RatVector{Rational(1), Rational(1)});
}

TEST_CASE("solve: triangle apex is the unique maximizer of x2") {
  LinearSystem sys = two_var({
      Row({rat(-2), rat(1)}, Relation::LessEq, rat(0)),
      Row({rat(2), rat(1)}, Relation::LessEq, rat(2)),
      Row({rat(1), rat(0)}, Relation::GreaterEq, rat(0)),
      Row({rat(1), rat(0)}, Relation::LessEq, rat(1)),
      Row({rat(0), rat(1)}, Relation::GreaterEq, rat(0)),
      Row({rat(0), rat(1)}, Relation::LessEq, rat(1)),
  });
  LpOutcome out = solve(sys, {rat(0), rat(1)}, Sense::Maximize);
  REQUIRE(out.is_optimal());
  CHECK(out.optimal->value == 1);
  CHECK(out.optimal->point == RatVector{rat(1, 2), rat(1)});
}

TEST_CASE("solve: unbounded direction is reported with a ray") {
  LinearSystem sys;
  sys.vars = {"x"};
  sys.add_row({Rational(1)}, Relation::GreaterEq, Rational(0));
  LpOutcome out = solve(sys, {Rational(1)}, Sense::Maximize);
  REQUIRE(out.is_unbounded());
  CHECK(out.unbounded->ray == RatVector{Rational(1)});
}

TEST_CASE("solve: native bounds only, no rows") {
  LinearSystem sys;
  sys.vars = {"x"};
  sys.lower = {Rational(2)};
  sys.upper = {Rational(5)};
  LpOutcome out = solve(sys, {Rational(1)}, Sense::Maximize);
  REQUIRE(out.is_optimal());
  CHECK(out.optimal->value == 5);
  LpOutcome lo = solve(sys, {Rational(1)}, Sense::Minimize);
  REQUIRE(lo.is_optimal());
  CHECK(lo.optimal->value == 2);
}

TEST_CASE("solve: Beale's cycling instance terminates under Bland's rule") {
  LinearSystem sys;
  sys.vars = {"x1", "x2", "x3", "x4", "x5", "x6", "x7"};
  sys.lower.assign(7, Rational(0));
  sys.add_row({rat(1), rat(0), rat(0), rat(1, 4), rat(-60), rat(-1, 25), rat(9)},
              Relation::Equal, rat(0));
  sys.add_row({rat(0), rat(1), rat(0), rat(1, 2), rat(-90), rat(-1, 50), rat(3)},
              Relation::Equal, rat(0));
  sys.add_row({rat(0), rat(0), rat(1), rat(0), rat(0), rat(1), rat(0)},
              Relation::Equal, rat(1));
  RatVector c = {rat(0), rat(0), rat(0), rat(-3, 4), rat(150), rat(-1, 50), rat(6)};
  LpOutcome out = solve(sys, c, Sense::Minimize);
  REQUIRE(out.is_optimal());
  CHECK(out.optimal->value == rat(-1, 20));
}

TEST_CASE("solve: dependent equality rows are handled") {
  LinearSystem sys;
  sys.vars = {"x", "y"};
  sys.lower.assign(2, Rational(0));
  sys.add_row({rat(1), rat(1)}, Relation::Equal, rat(1));
  sys.add_row({rat(2), rat(2)}, Relation::Equal, rat(2));
  LpOutcome out = solve(sys, {rat(1), rat(0)}, Sense::Minimize);
  REQUIRE(out.is_optimal());
  CHECK(out.optimal->value == 0);
}

TEST_CASE("evaluate: exact slacks") {
  LinearSystem sys;
  sys.vars = {"x1", "x2", "x3", "x4"};
  sys.add_row({rat(1), rat(1), rat(1), rat(1)}, Relation::LessEq, rat(1));
  RatVector p = {rat(1, 4), rat(1, 4), rat(1, 4), rat(0)};
  auto evs = evaluate(sys, p);
  REQUIRE(evs.size() == 1);
  CHECK(evs[0].slack == rat(1, 4));
  CHECK(evs[0].satisfied);

  LinearSystem orig;
  orig.vars = {"x"};
  orig.add_row({rat(1)}, Relation::GreaterEq, rat(0));
  auto oev = evaluate(orig, {rat(0)});
  CHECK(oev[0].slack == 0);
  CHECK(oev[0].tight);
}

TEST_CASE("evaluate: slacks match independent re-evaluation on random data") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 20; ++trial) {
    LinearSystem sys;
    sys.vars = {"a", "b", "c"};
    int m = static_cast<int>(rng_int(eng, 1, 5));
    for (int r = 0; r < m; ++r) {
      RatVector coef(3);
      for (auto& cc : coef) cc = rat(rng_int(eng, -5, 5), rng_int(eng, 1, 4));
      Relation rel = static_cast<Relation>(rng_int(eng, 0, 2));
      sys.add_row(coef, rel, rat(rng_int(eng, -5, 5)));
    }
    RatVector p(3);
    for (auto& pc : p) pc = rat(rng_int(eng, -3, 3), rng_int(eng, 1, 3));
    auto evs = evaluate(sys, p);
    for (int r = 0; r < m; ++r) {
      Rational expect = 0;  // plain dot product, written independently
      for (int v = 0; v < 3; ++v) expect += sys.rows[r].coef[v] * p[v];
      CHECK(evs[r].activity == expect);
    }
  }
}

TEST_CASE("is_redundant: sum of rows") {
  LinearSystem sys = two_var({
      Row({rat(1), rat(0)}, Relation::LessEq, rat(1)),
      Row({rat(0), rat(1)}, Relation::LessEq, rat(1)),
  });
  Row cand({rat(1), rat(1)}, Relation::LessEq, rat(2));
  auto cert = is_redundant(sys, cand);
  CHECK(cert.redundant);
  REQUIRE(cert.le_cert.has_value());
  CHECK(cert.le_cert->row_mults == RatVector{rat(1), rat(1)});
  CHECK(cert.le_cert->achieved == rat(2));
}

TEST_CASE("is_redundant: tightening is not redundant") {
  LinearSystem sys = two_var({
      Row({rat(1), rat(0)}, Relation::LessEq, rat(1)),
      Row({rat(0), rat(1)}, Relation::LessEq, rat(1)),
      Row({rat(1), rat(0)}, Relation::GreaterEq, rat(0)),
      Row({rat(0), rat(1)}, Relation::GreaterEq, rat(0)),
  });
  CHECK_FALSE(is_redundant(sys, Row({rat(1), rat(0)}, Relation::LessEq, rat(1, 2))).redundant);
}

TEST_CASE("is_redundant: equation candidate checks both directions") {
  LinearSystem sys;
  sys.vars = {"x", "y"};
  sys.add_row({rat(1), rat(1)}, Relation::Equal, rat(1));
  CHECK(is_redundant(sys, Row({rat(2), rat(2)}, Relation::Equal, rat(2))).redundant);
  CHECK_FALSE(is_redundant(sys, Row({rat(1), rat(0)}, Relation::Equal, rat(1, 2))).redundant);
}

TEST_CASE("is_redundant: infeasible base system throws") {
  LinearSystem sys;
  sys.vars = {"x"};
  sys.add_row({rat(1)}, Relation::LessEq, rat(0));
  sys.add_row({rat(1)}, Relation::GreaterEq, rat(1));
  CHECK_THROWS_AS(is_redundant(sys, Row({rat(1)}, Relation::LessEq, rat(5))),
                  std::invalid_argument);
}

TEST_CASE("fourier_motzkin: substitution through an equation") {
  LinearSystem sys;
  sys.vars = {"x", "y"};
  sys.add_row({rat(-1), rat(1)}, Relation::Equal, rat(0));   // y = x
  sys.add_row({rat(0), rat(1)}, Relation::GreaterEq, rat(0));
  sys.add_row({rat(0), rat(1)}, Relation::LessEq, rat(1));
  LinearSystem proj = fourier_motzkin_project(sys, {"x"});
  REQUIRE(proj.vars == std::vector<std::string>{"x"});
  // Feasible set must be [0,1].
  CHECK(satisfies(proj, {rat(0)}));
  CHECK(satisfies(proj, {rat(1)}));
  CHECK(satisfies(proj, {rat(1, 2)}));
  CHECK_FALSE(satisfies(proj, {rat(-1, 10)}));
  CHECK_FALSE(satisfies(proj, {rat(11, 10)}));
}

TEST_CASE("fourier_motzkin: projection membership agrees with the LP oracle") {
  std::mt19937_64 eng(42);
  for (int trial = 0; trial < 8; ++trial) {
    LinearSystem sys;
    sys.vars = {"a", "b", "c"};
    // Random rows around a guaranteed-feasible anchor point.
    RatVector anchor(3);
    for (auto& ac : anchor) ac = rat(rng_int(eng, -2, 2), rng_int(eng, 1, 3));
    int m = static_cast<int>(rng_int(eng, 2, 5));
    for (int r = 0; r < m; ++r) {
      RatVector coef(3);
      for (auto& cc : coef) cc = rat(rng_int(eng, -4, 4), rng_int(eng, 1, 3));
      Rational at = dot(coef, anchor);
      sys.add_row(coef, Relation::LessEq, at + rat(rng_int(eng, 0, 4)));
    }
    // Keep it bounded: put everything in a big box.
    for (int v = 0; v < 3; ++v) {
      RatVector lo = zeros(3), hi = zeros(3);
      lo[v] = 1;
      hi[v] = 1;
      sys.add_row(lo, Relation::GreaterEq, rat(-10));
      sys.add_row(hi, Relation::LessEq, rat(10));
    }
    LinearSystem proj = fourier_motzkin_project(sys, {"a", "b"});
    for (int pt = 0; pt < 100; ++pt) {
      RatVector p = {rat(rng_int(eng, -11, 11), 1), rat(rng_int(eng, -11, 11), 1)};
      bool in_proj = satisfies(proj, p);
      // Oracle: fix a,b and ask the LP whether some c completes the point.
      LinearSystem fixed = sys;
      RatVector ca = zeros(3), cb = zeros(3);
      ca[0] = 1;
      cb[1] = 1;
      fixed.add_row(ca, Relation::Equal, p[0]);
      fixed.add_row(cb, Relation::Equal, p[1]);
      bool lp_feasible = solve(fixed, zeros(3), Sense::Minimize).is_optimal();
      CHECK(in_proj == lp_feasible);
    }
  }
}

TEST_CASE("fourier_motzkin: elimination budget guard") {
  LinearSystem sys;
  sys.vars.resize(10);
  for (int v = 0; v < 10; ++v) sys.vars[v] = "v" + std::to_string(v);
  CHECK_THROWS_AS(fourier_motzkin_project(sys, {"v0"}), std::invalid_argument);
  CHECK_NOTHROW(fourier_motzkin_project(sys, {"v0"}, 9));
}

TEST_CASE("fourier_motzkin: infeasible input yields an inconsistent marker") {
  LinearSystem sys;
  sys.vars = {"x", "y"};
  sys.add_row({rat(1), rat(0)}, Relation::LessEq, rat(0));
  sys.add_row({rat(1), rat(0)}, Relation::GreaterEq, rat(1));
  LinearSystem proj = fourier_motzkin_project(sys, {"y"});
  CHECK_FALSE(satisfies(proj, {rat(0)}));
  CHECK_FALSE(satisfies(proj, {rat(1, 2)}));
}

TEST_CASE("solve: random systems round-trip through verify_outcome") {
  // verify_outcome runs inside solve; this exercises many shapes.
  std::mt19937_64 eng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng_int(eng, 1, 4));
    LinearSystem sys;
    for (int v = 0; v < n; ++v) sys.vars.push_back("x" + std::to_string(v));
    if (rng_int(eng, 0, 1)) {
      sys.lower.assign(n, std::nullopt);
      for (int v = 0; v < n; ++v)
        if (rng_int(eng, 0, 1)) sys.lower[v] = rat(rng_int(eng, -2, 0));
    }
    int m = static_cast<int>(rng_int(eng, 1, 6));
    for (int r = 0; r < m; ++r) {
      RatVector coef(n);
      for (auto& cc : coef) cc = rat(rng_int(eng, -3, 3), rng_int(eng, 1, 4));
      sys.add_row(coef, static_cast<Relation>(rng_int(eng, 0, 2)),
                  rat(rng_int(eng, -4, 4), rng_int(eng, 1, 2)));
    }
    RatVector c(n);
    for (auto& cc : c) cc = rat(rng_int(eng, -3, 3));
    // Either outcome kind is fine; solve() throws if any certificate is wrong.
    CHECK_NOTHROW(solve(sys, c, Sense::Maximize));
    CHECK_NOTHROW(solve(sys, c, Sense::Minimize));
  }
}
