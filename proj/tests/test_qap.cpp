#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rltlab/qap.hpp"
#include "rltlab/rlt.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

using namespace rltlab;

namespace {

/// Row-major permutation matrix for sigma (i assigned to sigma[i]).
RatVector perm_matrix(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  RatVector x = zeros(n * n);
  for (int i = 0; i < n; ++i) x[i * n + sigma[i]] = 1;
  return x;
}

Rational true_cost(const QapInstance& inst, const std::vector<int>& sigma) {
  Rational c(0);
  const int n = inst.n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) c += inst.cost(i, sigma[i], k, sigma[k]);
  return c;
}

/// Lift a (possibly fractional) x together with an explicit product matrix
/// y[a][b] into the product model's variable layout, deriving w from the costs.
RatVector lift_point(const QapInstance& inst, const QapLpModel& aj, const RatVector& x,
                     const std::vector<RatVector>& y) {
  const int n = inst.n;
  RatVector p(aj.sys.vars.size(), Rational(0));
  for (int a = 0; a < n * n; ++a) p[a] = x[a];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          p[aj.y_index(i, j, k, l)] = y[i * n + j][k * n + l];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational w(0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          w += inst.cost(i, j, k, l) * p[aj.y_index(i, j, k, l)];
      p[aj.w_index(i, j)] = w;
    }
  return p;
}

std::vector<RatVector> outer_product(const RatVector& x) {
  std::vector<RatVector> y(x.size(), RatVector(x.size()));
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) y[a][b] = x[a] * x[b];
  return y;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

TEST_CASE("assignment polytope: shape and vertices") {
  const BoxPolytope P1 = assignment_polytope(1);
  CHECK(P1.n == 1);
  CHECK(vertices(P1) == std::vector<RatVector>{RatVector{Rational(1)}});

  const BoxPolytope P2 = assignment_polytope(2);
  CHECK(P2.n == 4);
  CHECK(P2.binary == std::vector<int>{0, 1, 2, 3});
  REQUIRE(P2.rows.size() == 4);
  CHECK(P2.rows[0].label == "rowsum1");
  CHECK(P2.rows[3].label == "colsum2");
  std::vector<RatVector> V = vertices(P2);
  std::vector<RatVector> expect = {perm_matrix({0, 1}), perm_matrix({1, 0})};
  std::sort(expect.begin(), expect.end());
  CHECK(V == expect);

  // Doubly stochastic non-vertex point: the barycenter.
  CHECK(polytope_member(P2, RatVector(4, rat(1, 2))));
  CHECK_FALSE(polytope_member(P2, RatVector(4, rat(1, 3))));
}

TEST_CASE("instances: seeding, loading, guards") {
  const QapInstance a = seeded_instance(3, 7);
  const QapInstance b = seeded_instance(3, 7);
  CHECK(a.q == b.q);
  CHECK(a.q.size() == 81);
  for (const Rational& v : a.q) {
    CHECK(v >= 0);
    CHECK(v <= 5);
  }
  CHECK(seeded_instance(3, 8).q != a.q);

  const std::string path = "/tmp/rltlab_qap_test.dat";
  {
    std::ofstream out(path);
    out << "2\n";
    for (int t = 0; t < 16; ++t) out << (t == 5 ? std::string("3/2") : std::to_string(t)) << " ";
  }
  const QapInstance inst = load_qap(path);
  CHECK(inst.n == 2);
  CHECK(inst.cost(0, 0, 0, 0) == 0);
  CHECK(inst.cost(0, 1, 0, 1) == rat(3, 2));
  CHECK(inst.cost(1, 1, 1, 1) == 15);
  {
    std::ofstream out(path);
    out << "2\n1 2 three\n";
  }
  CHECK_THROWS_AS(load_qap(path), std::runtime_error);
  CHECK_THROWS_AS(load_qap("/tmp/rltlab_no_such_file.dat"), std::runtime_error);
  std::remove(path.c_str());

  CHECK_THROWS_AS(build_adams_johnson(zero_instance(5)), std::invalid_argument);
  QapInstance bad = zero_instance(2);
  bad.cost(0, 0, 0, 0) = -1;
  CHECK_THROWS_AS(build_kaufman_broeckx(bad), std::invalid_argument);
}

TEST_CASE("model shapes") {
  const QapLpModel aj = build_adams_johnson(zero_instance(2));
  CHECK(aj.sys.vars.size() == 24);
  CHECK(aj.sys.rows.size() == 58);  // 12 assignment + 8 + 8 + 4 + 6 + 16 + 4
  CHECK(aj.sys.vars[aj.y_index(0, 1, 1, 0)] == "y1_2_2_1");
  CHECK(aj.sys.vars[aj.w_index(1, 0)] == "w2_1");

  const QapLpModel kb = build_kaufman_broeckx(zero_instance(2));
  CHECK(kb.sys.vars.size() == 8);
  CHECK(kb.sys.rows.size() == 20);  // 12 assignment + 4 wnn + 4 coupling
  CHECK_THROWS_AS(kb.y_index(0, 0, 0, 0), std::logic_error);

  const QapLpModel kbc = build_kaufman_broeckx_column(zero_instance(2));
  CHECK(kbc.sys.rows.size() == 18);  // one coupling row per column
}

TEST_CASE("zero costs give zero bounds") {
  for (int n : {2, 3}) {
    const QapInstance inst = zero_instance(n);
    CHECK(lp_bound(build_kaufman_broeckx(inst)) == 0);
    CHECK(lp_bound(build_kaufman_broeckx_column(inst)) == 0);
  }
  CHECK(lp_bound(build_adams_johnson(zero_instance(2))) == 0);
}

TEST_CASE("permutation lifts are feasible with the true quadratic cost") {
  const QapInstance inst = seeded_instance(3, 41);
  const QapLpModel aj = build_adams_johnson(inst);
  const QapLpModel kb = build_kaufman_broeckx(inst);
  const QapLpModel kbc = build_kaufman_broeckx_column(inst);
  Rational best(-1);
  for (const std::vector<int>& sigma : all_permutations(3)) {
    const RatVector x = perm_matrix(sigma);
    const Rational cost = true_cost(inst, sigma);
    if (best < 0 || cost < best) best = cost;

    const RatVector lifted = lift_point(inst, aj, x, outer_product(x));
    CHECK(satisfies(aj.sys, lifted));
    CHECK(dot(aj.objective, lifted) == cost);

    // Minimal coupling slack at a binary point: w recovers the row costs.
    RatVector kbp(kb.sys.vars.size(), Rational(0));
    for (int a = 0; a < 9; ++a) kbp[a] = x[a];
    for (int i = 0; i < 3; ++i) {
      Rational w(0);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) w += inst.cost(i, sigma[i], k, l) * x[k * 3 + l];
      kbp[kb.w_index(i, sigma[i])] = w;
    }
    CHECK(satisfies(kb.sys, kbp));
    CHECK(satisfies(kbc.sys, kbp));
    CHECK(dot(kb.objective, kbp) == cost);
  }
  // Relaxation bounds never exceed the best permutation's cost.
  const Rational kb_bound = lp_bound(kb);
  const Rational kbc_bound = lp_bound(kbc);
  CHECK(kb_bound <= best);
  CHECK(kbc_bound <= kb_bound);
}

TEST_CASE("bound ordering: product model >= coupling model >= aggregated coupling") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const QapInstance inst = seeded_instance(2, seed);
    const Rational aj = lp_bound(build_adams_johnson(inst));
    const Rational kb = lp_bound(build_kaufman_broeckx(inst));
    const Rational kbc = lp_bound(build_kaufman_broeckx_column(inst));
    CHECK(aj >= kb);
    CHECK(kb >= kbc);
    Rational best(-1);
    for (const std::vector<int>& sigma : all_permutations(2)) {
      const Rational c = true_cost(inst, sigma);
      if (best < 0 || c < best) best = c;
    }
    CHECK(aj <= best);
  }
  for (std::uint64_t seed : {21u, 22u}) {
    const QapInstance inst = seeded_instance(3, seed);
    CHECK(lp_bound(build_kaufman_broeckx(inst)) >= lp_bound(build_kaufman_broeckx_column(inst)));
  }
}

TEST_CASE("column decomposition of feasible product-model points") {
  SUBCASE("permutation lift: one piece of weight one") {
    const QapInstance inst = seeded_instance(3, 5);
    const QapLpModel aj = build_adams_johnson(inst);
    const std::vector<int> sigma = {1, 2, 0};
    const RatVector x = perm_matrix(sigma);
    const RatVector lifted = lift_point(inst, aj, x, outer_product(x));
    for (int j = 0; j < 3; ++j) {
      const DecompositionWitness wit = decompose_aj_column(inst, aj, lifted, j);
      REQUIRE(wit.iplus.size() == 1);
      const int i = wit.iplus[0];
      CHECK(sigma[i] == j);
      CHECK(wit.weights[0] == 1);
      CHECK(wit.xbars[0] == x);
      Rational row_cost(0);
      for (int k = 0; k < 3; ++k) row_cost += inst.cost(i, j, k, sigma[k]);
      CHECK(wit.vbars[0][i] == row_cost);
    }
  }

  SUBCASE("two-vertex mixture splits into both permutation matrices") {
    const QapInstance inst = zero_instance(2);
    const QapLpModel aj = build_adams_johnson(inst);
    const RatVector p1 = perm_matrix({0, 1});
    const RatVector p2 = perm_matrix({1, 0});
    const RatVector x(4, rat(1, 2));
    const std::vector<RatVector> y1 = outer_product(p1);
    const std::vector<RatVector> y2 = outer_product(p2);
    std::vector<RatVector> y(4, RatVector(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) y[a][b] = Rational((y1[a][b] + y2[a][b]) / 2);
    const RatVector lifted = lift_point(inst, aj, x, y);
    REQUIRE(satisfies(aj.sys, lifted));
    const DecompositionWitness wit = decompose_aj_column(inst, aj, lifted, 0);
    REQUIRE(wit.iplus == std::vector<int>{0, 1});
    CHECK(wit.weights == RatVector{rat(1, 2), rat(1, 2)});
    CHECK(wit.xbars[0] == p1);
    CHECK(wit.xbars[1] == p2);
  }

  SUBCASE("optimal points of seeded instances decompose in every column") {
    for (std::uint64_t seed : {31u, 32u}) {
      const QapInstance inst = seeded_instance(2, seed);
      const QapLpModel aj = build_adams_johnson(inst);
      const QapLpSolution sol = lp_solve(aj);
      for (int j = 0; j < 2; ++j) {
        const DecompositionWitness wit = decompose_aj_column(inst, aj, sol.point, j);
        Rational total(0);
        for (const Rational& wgt : wit.weights) total += wgt;
        CHECK(total == 1);
      }
    }
  }

  SUBCASE("rejects infeasible input and bad columns") {
    const QapInstance inst = zero_instance(2);
    const QapLpModel aj = build_adams_johnson(inst);
    CHECK_THROWS_AS(decompose_aj_column(inst, aj, RatVector(24, rat(1, 3)), 0),
                    std::invalid_argument);
    const RatVector ok = lift_point(inst, aj, perm_matrix({0, 1}), outer_product(perm_matrix({0, 1})));
    CHECK_THROWS_AS(decompose_aj_column(inst, aj, ok, 2), std::invalid_argument);
  }
}

TEST_CASE("product model rows match the multiplied-closure system of the assignment polytope") {
  // For n=2 the product model restricted to (x, y) and the weak multiplied
  // system of the assignment polytope describe the same lifted set: each row
  // of one is implied by the other.  Variable translation: the product block
  // entry for (a, b) corresponds to the multiplied variable y_{a,b}.
  const int n = 2;
  const BoxPolytope birkhoff = assignment_polytope(n);
  const RltEf ef = build_rlt_ef(birkhoff, ClosureVariant::Weak);
  REQUIRE(ef.lifted.sys.vars.size() == 20);

  const QapLpModel aj = build_adams_johnson(zero_instance(n));
  const int nv = 20;
  auto translate = [&](int v) -> int {
    if (v < n * n) return v;                       // shared x block
    const int a = (v - n * n) / (n * n);           // first factor, flattened
    const int b = (v - n * n) % (n * n);           // second factor, flattened
    return ef.y_index(a, b);
  };
  LinearSystem aj_xy;
  aj_xy.vars = ef.lifted.sys.vars;
  for (const Row& row : aj.sys.rows) {
    bool touches_w = false;
    RatVector coef = zeros(nv);
    for (int v = 0; v < static_cast<int>(row.coef.size()); ++v) {
      if (row.coef[v] == 0) continue;
      if (v >= n * n + n * n * n * n) {
        touches_w = true;
        break;
      }
      coef[translate(v)] += row.coef[v];
    }
    if (!touches_w) aj_xy.add_row(std::move(coef), row.rel, row.rhs, row.label);
  }
  REQUIRE(aj_xy.rows.size() == 54);

  for (const Row& row : ef.lifted.sys.rows) {
    INFO("closure row ", row.label);
    CHECK(is_redundant(aj_xy, row).redundant);
  }
  for (const Row& row : aj_xy.rows) {
    INFO("product-model row ", row.label);
    CHECK(is_redundant(ef.lifted.sys, row).redundant);
  }
}
