#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rltlab/fixtures.hpp"
#include "rltlab/linalg.hpp"
#include "rltlab/polytope.hpp"

using namespace rltlab;

namespace {

int rnd_int(std::mt19937_64& g, int lo, int hi) {
  return lo + static_cast<int>(g() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational rnd_box_coord(std::mt19937_64& g, int max_den) {
  const int den = rnd_int(g, 1, max_den);
  return rat(rnd_int(g, 0, den), den);
}

RatVector rnd_box_point(std::mt19937_64& g, int n, int max_den) {
  RatVector x(n);
  for (int i = 0; i < n; ++i) x[i] = rnd_box_coord(g, max_den);
  return x;
}

BoxPolytope birkhoff3() {
  BoxPolytope P;
  P.n = 9;
  for (int i = 0; i < 9; ++i) P.binary.push_back(i);
  for (int i = 0; i < 3; ++i) {
    RatVector coef = zeros(9);
    for (int j = 0; j < 3; ++j) coef[3 * i + j] = 1;
    P.rows.push_back(Row{coef, Relation::Equal, Rational(1), "rowsum" + std::to_string(i + 1)});
  }
  for (int j = 0; j < 3; ++j) {
    RatVector coef = zeros(9);
    for (int i = 0; i < 3; ++i) coef[3 * i + j] = 1;
    P.rows.push_back(Row{coef, Relation::Equal, Rational(1), "colsum" + std::to_string(j + 1)});
  }
  return P;
}

}  // namespace

TEST_CASE("well-formedness checks") {
  BoxPolytope P;
  P.n = 2;
  P.binary = {1, 0};
  CHECK_THROWS_AS(P.check_well_formed(), std::invalid_argument);
  P.binary = {0};
  P.rows.push_back(Row{{Rational(1)}, Relation::LessEq, Rational(1), "short"});
  CHECK_THROWS_AS(P.check_well_formed(), std::invalid_argument);
}

TEST_CASE("to_system row order and labels") {
  const LinearSystem sys = to_system(fig2_polytope());
  REQUIRE(sys.rows.size() == 6);
  CHECK(sys.rows[0].label == "r1");
  CHECK(sys.rows[1].label == "r2");
  CHECK(sys.rows[2].label == "x1>=0");
  CHECK(sys.rows[3].label == "x1<=1");
  CHECK(sys.rows[4].label == "x2>=0");
  CHECK(sys.rows[5].label == "x2<=1");
  CHECK(sys.lower.empty());
  CHECK(sys.upper.empty());
}

TEST_CASE("complement flips a single coordinate") {
  BoxPolytope P;
  P.n = 1;
  P.rows.push_back(Row{{Rational(1)}, Relation::LessEq, rat(1, 2), "cap"});
  const BoxPolytope Q = complement(P, 0);
  REQUIRE(Q.rows.size() == 1);
  CHECK(Q.rows[0].coef[0] == Rational(-1));
  CHECK(Q.rows[0].rhs == rat(-1, 2));
  CHECK(polytope_member(P, {rat(1, 4)}));
  CHECK_FALSE(polytope_member(Q, {rat(1, 4)}));
  CHECK(polytope_member(Q, {rat(3, 4)}));
  CHECK_FALSE(polytope_member(P, {rat(3, 4)}));
}

TEST_CASE("complement is an involution") {
  const BoxPolytope P = fig2_polytope();
  const BoxPolytope PP = complement(complement(P, 1), 1);
  REQUIRE(PP.rows.size() == P.rows.size());
  for (std::size_t r = 0; r < P.rows.size(); ++r) {
    CHECK(PP.rows[r].coef == P.rows[r].coef);
    CHECK(PP.rows[r].rhs == P.rows[r].rhs);
  }
  const BoxPolytope Q = complement(P, 0);
  std::mt19937_64 g(7);
  for (int t = 0; t < 20; ++t) {
    const RatVector x = rnd_box_point(g, 2, 6);
    RatVector flipped = x;
    flipped[0] = Rational(Rational(1) - x[0]);
    CHECK(polytope_member(P, x) == polytope_member(Q, flipped));
  }
}

TEST_CASE("face of the unit square") {
  BoxPolytope square;
  square.n = 2;
  const BoxPolytope edge = face(square, {Rational(1), Rational(0)}, Rational(1));
  REQUIRE(edge.rows.size() == 1);
  CHECK(edge.rows[0].rel == Relation::Equal);
  const std::vector<RatVector> V = vertices(edge);
  REQUIRE(V.size() == 2);
  CHECK(V[0] == RatVector{Rational(1), Rational(0)});
  CHECK(V[1] == RatVector{Rational(1), Rational(1)});
  CHECK_THROWS_AS(face(square, {Rational(1), Rational(0)}, rat(1, 2)), std::invalid_argument);
}

TEST_CASE("vertices of the figure-2 triangle") {
  const std::vector<RatVector> V = vertices(fig2_polytope());
  REQUIRE(V.size() == 3);
  CHECK(V[0] == RatVector{Rational(0), Rational(0)});
  CHECK(V[1] == RatVector{rat(1, 2), Rational(1)});
  CHECK(V[2] == RatVector{Rational(1), Rational(0)});
}

TEST_CASE("vertices of the capped simplex") {
  BoxPolytope P;
  P.n = 3;
  P.rows.push_back(Row{{Rational(1), Rational(1), Rational(1)}, Relation::LessEq, Rational(1), "sum"});
  const std::vector<RatVector> V = vertices(P);
  REQUIRE(V.size() == 4);
  CHECK(V[0] == zeros(3));
  CHECK(V[1] == RatVector{Rational(0), Rational(0), Rational(1)});
  CHECK(V[2] == RatVector{Rational(0), Rational(1), Rational(0)});
  CHECK(V[3] == RatVector{Rational(1), Rational(0), Rational(0)});
}

TEST_CASE("vertices of the order-3 doubly stochastic polytope are the permutation matrices") {
  const std::vector<RatVector> V = vertices(birkhoff3(), 9);
  // Independent oracle: scan every 0/1 vector of length 9 for unit row and
  // column sums of the corresponding 3x3 matrix.
  std::vector<RatVector> oracle;
  for (int mask = 0; mask < 512; ++mask) {
    RatVector x(9);
    for (int b = 0; b < 9; ++b) x[b] = Rational((mask >> b) & 1);
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      Rational rs(0), cs(0);
      for (int j = 0; j < 3; ++j) {
        rs += x[3 * i + j];
        cs += x[3 * j + i];
      }
      ok = rs == 1 && cs == 1;
    }
    if (ok) oracle.push_back(x);
  }
  std::sort(oracle.begin(), oracle.end(), [](const RatVector& a, const RatVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  REQUIRE(oracle.size() == 6);
  CHECK(V == oracle);
}

TEST_CASE("hull of two endpoints") {
  const BoxPolytope H = hull_from_vertices({{Rational(0)}, {Rational(1)}});
  REQUIRE(H.rows.size() == 2);
  CHECK(H.rows[0].coef == RatVector{Rational(-1)});
  CHECK(H.rows[0].rhs == Rational(0));
  CHECK(H.rows[0].rel == Relation::LessEq);
  CHECK(H.rows[1].coef == RatVector{Rational(1)});
  CHECK(H.rows[1].rhs == Rational(1));
}

TEST_CASE("hull of the three unit vectors") {
  const std::vector<RatVector> V = {
      {Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)},
  };
  const BoxPolytope H = hull_from_vertices(V);
  int n_eq = 0, n_le = 0;
  for (const Row& row : H.rows) {
    if (row.rel == Relation::Equal) {
      ++n_eq;
      // Must be proportional to x1 + x2 + x3 = 1.
      REQUIRE(row.coef[0] != 0);
      const Rational s = row.coef[0];
      CHECK(row.coef[1] == s);
      CHECK(row.coef[2] == s);
      CHECK(row.rhs == s);
    } else {
      ++n_le;
    }
  }
  CHECK(n_eq == 1);
  CHECK(n_le == 3);
  auto member = [&](const RatVector& x) {
    for (const Row& row : H.rows)
      if (!evaluate_row(row, x).satisfied) return false;
    return true;
  };
  CHECK(member({rat(1, 3), rat(1, 3), rat(1, 3)}));
  CHECK(member({rat(1, 2), rat(1, 2), Rational(0)}));
  CHECK_FALSE(member({rat(1, 2), rat(1, 2), rat(1, 2)}));
  CHECK_FALSE(member({rat(2, 3), rat(2, 3), rat(-1, 3)}));
}

TEST_CASE("hull of a single point pins every coordinate") {
  const BoxPolytope H = hull_from_vertices({{rat(1, 3), rat(2, 5)}});
  REQUIRE(H.rows.size() == 2);
  for (const Row& row : H.rows) CHECK(row.rel == Relation::Equal);
  CHECK(evaluate_row(H.rows[0], {rat(1, 3), rat(2, 5)}).satisfied);
  CHECK_FALSE(evaluate_row(H.rows[0], {rat(1, 2), rat(2, 5)}).satisfied);
}

TEST_CASE("convex membership of a midpoint") {
  const ConvMembership m = conv_member({{Rational(0)}, {Rational(1)}}, {rat(1, 2)});
  REQUIRE(m.member);
  REQUIRE(m.multipliers.size() == 2);
  CHECK(m.multipliers[0] == rat(1, 2));
  CHECK(m.multipliers[1] == rat(1, 2));
}

TEST_CASE("convex membership rejects an outside point with a separator") {
  const std::vector<RatVector> square = {
      {Rational(0), Rational(0)},
      {Rational(1), Rational(0)},
      {Rational(0), Rational(1)},
      {Rational(1), Rational(1)},
  };
  const RatVector p = {Rational(2), Rational(0)};
  const ConvMembership m = conv_member(square, p);
  REQUIRE_FALSE(m.member);
  for (const RatVector& v : square) CHECK(evaluate_row(m.separator, v).satisfied);
  CHECK_FALSE(evaluate_row(m.separator, p).satisfied);
}

TEST_CASE("figure-3 interior point is a convex combination of the six vertices") {
  const std::vector<RatVector> V = {
      {Rational(1), Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(0), Rational(1), Rational(0)},
      {rat(1, 2), Rational(0), rat(1, 2), Rational(1)},
      {Rational(0), rat(1, 2), rat(1, 2), Rational(1)},
      {rat(1, 2), rat(1, 2), Rational(0), Rational(1)},
  };
  const RatVector xstar = {rat(1, 3), rat(1, 3), rat(1, 3), rat(2, 3)};
  const ConvMembership m = conv_member(V, xstar);
  REQUIRE(m.member);
  Rational total(0);
  RatVector recomb = zeros(4);
  for (std::size_t i = 0; i < V.size(); ++i) {
    CHECK(m.multipliers[i] >= 0);
    total += m.multipliers[i];
    recomb = axpy(recomb, m.multipliers[i], V[i]);
  }
  CHECK(total == 1);
  CHECK(recomb == xstar);
  CHECK(polytope_member(fig3_polytope(), xstar));
}

TEST_CASE("vertex enumeration agrees with the simplex over random objectives") {
  std::mt19937_64 g(2026);
  for (int trial = 0; trial < 6; ++trial) {
    BoxPolytope P;
    P.n = 3;
    const RatVector anchor = rnd_box_point(g, 3, 4);
    for (int r = 0; r < 3; ++r) {
      RatVector coef(3);
      for (int c = 0; c < 3; ++c) coef[c] = Rational(rnd_int(g, -3, 3));
      const Rational rhs = Rational(dot(coef, anchor) + rat(rnd_int(g, 0, 2), 3));
      P.rows.push_back(Row{coef, Relation::LessEq, rhs, "r" + std::to_string(r + 1)});
    }
    const std::vector<RatVector> V = vertices(P);
    REQUIRE(!V.empty());
    for (const RatVector& v : V) CHECK(polytope_member(P, v));
    const LinearSystem sys = to_system(P);
    for (int k = 0; k < 8; ++k) {
      RatVector c(3);
      for (int i = 0; i < 3; ++i) c[i] = Rational(rnd_int(g, -4, 4));
      const LpOutcome out = solve(sys, c, Sense::Maximize);
      REQUIRE(out.is_optimal());
      Rational best = dot(c, V[0]);
      for (const RatVector& v : V) best = std::max(best, Rational(dot(c, v)), [](const Rational& a, const Rational& b) { return a < b; });
      CHECK(out.optimal->value == best);
    }
  }
}

TEST_CASE("hull of the vertex set describes the same polytope") {
  std::mt19937_64 g(99);
  for (const BoxPolytope& P : {fig2_polytope(), fig4_polytope()}) {
    const std::vector<RatVector> V = vertices(P);
    BoxPolytope H = hull_from_vertices(V);
    H.binary = P.binary;
    for (int t = 0; t < 100; ++t) {
      const RatVector x = rnd_box_point(g, P.n, 6);
      CHECK(polytope_member(P, x) == polytope_member(H, x));
    }
    for (const RatVector& v : V) CHECK(polytope_member(H, v));
  }
}

TEST_CASE("enumeration guard") {
  BoxPolytope P;
  P.n = 9;
  CHECK_THROWS_AS(vertices(P), std::invalid_argument);
  CHECK_NOTHROW(vertices(P, 9));
}
