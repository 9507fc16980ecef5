#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rltlab/characterization.hpp"
#include "rltlab/fixtures.hpp"

using namespace rltlab;

namespace {

int rnd_int(std::mt19937_64& g, int lo, int hi) {
  return lo + static_cast<int>(g() % static_cast<unsigned long long>(hi - lo + 1));
}

RatVector rnd_box_point(std::mt19937_64& g, int n, int max_den) {
  RatVector x(n);
  for (int i = 0; i < n; ++i) {
    const int den = rnd_int(g, 1, max_den);
    x[i] = rat(rnd_int(g, 0, den), den);
  }
  return x;
}

BoxPolytope rnd_polytope(std::mt19937_64& g, int n, bool all_binary) {
  BoxPolytope P;
  P.n = n;
  if (all_binary) {
    for (int i = 0; i < n; ++i) P.binary.push_back(i);
  } else {
    for (int i = 0; i < n; ++i)
      if (rnd_int(g, 0, 1)) P.binary.push_back(i);
    if (P.binary.empty()) P.binary.push_back(rnd_int(g, 0, n - 1));
  }
  const RatVector anchor = rnd_box_point(g, n, 3);
  const int m = rnd_int(g, 1, 3);
  for (int r = 0; r < m; ++r) {
    RatVector coef(n);
    for (int c = 0; c < n; ++c) coef[c] = Rational(rnd_int(g, -2, 2));
    const Rational rhs = Rational(dot(coef, anchor) + rat(rnd_int(g, 0, 3), 2));
    P.rows.push_back(Row{coef, Relation::LessEq, rhs, "r" + std::to_string(r + 1)});
  }
  return P;
}

}  // namespace

TEST_CASE("fractional support") {
  CHECK(fractional_support({rat(1, 2), Rational(1)}, {0, 1}) == std::vector<int>{0});
  CHECK(fractional_support({Rational(1), Rational(0)}, {0, 1}).empty());
  CHECK(fractional_support({rat(1, 4), rat(1, 4), rat(1, 4), Rational(0)}, {0, 1, 2, 3}) ==
        std::vector<int>({0, 1, 2}));
}

TEST_CASE("boundary points read off a figure-2 witness") {
  const BoxPolytope P = fig2_polytope();
  const RatVector x = {rat(1, 2), Rational(0)};
  const ProjectionMembership m = closure_member(P, ClosureVariant::Weak, x);
  REQUIRE(m.member);
  const RltEf ef = build_rlt_ef(P, ClosureVariant::Weak);
  const ZFamily fam = derive_z(x, extract_y(ef, m.witness), P.binary);
  REQUIRE(fam.support == std::vector<int>{0});
  CHECK(fam.at(0, 1) == RatVector{Rational(1), Rational(0)});
  CHECK(fam.at(0, 0) == RatVector{Rational(0), Rational(0)});
  CHECK(check_condition_iii(P, x, fam));
  CHECK(check_condition_iv(P, x, fam));
}

TEST_CASE("boundary points of the figure-4 diagonal lift") {
  const RatVector x = {rat(1, 4), rat(1, 4), rat(1, 4), Rational(0)};
  RatMatrix y(4, zeros(4));
  for (int i = 0; i < 4; ++i) y[i][i] = x[i];
  const ZFamily fam = derive_z(x, y, {0, 1, 2, 3});
  REQUIRE(fam.support == std::vector<int>({0, 1, 2}));
  CHECK(fam.at(0, 1) == RatVector{Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(fam.at(0, 0) == RatVector{Rational(0), rat(1, 3), rat(1, 3), Rational(0)});
}

TEST_CASE("figure-2 top point separates the two conditions") {
  const BoxPolytope P = fig2_polytope();
  const RatVector x = {rat(1, 2), Rational(1)};
  ZFamily fam;
  fam.support = {0};
  fam.z.push_back({RatVector{Rational(0), Rational(0)}, RatVector{Rational(1), Rational(0)}});
  CHECK_FALSE(check_condition_iii(P, x, fam));
  CHECK(check_condition_iv(P, x, fam));

  const std::optional<ZFamily> none = find_z(P, x, ZCondition::III);
  CHECK_FALSE(none.has_value());
  const std::optional<ZFamily> some = find_z(P, x, ZCondition::IV);
  REQUIRE(some.has_value());
  // The two slices of P are single points, so the witness is unique.
  CHECK(some->at(0, 1) == RatVector{Rational(1), Rational(0)});
  CHECK(some->at(0, 0) == RatVector{Rational(0), Rational(0)});
}

TEST_CASE("integral points have the empty family") {
  const BoxPolytope P = fig2_polytope();
  const std::optional<ZFamily> fam = find_z(P, {Rational(1), Rational(0)}, ZCondition::III);
  REQUIRE(fam.has_value());
  CHECK(fam->support.empty());
  CHECK(check_condition_iii(P, {Rational(1), Rational(0)}, *fam));
}

TEST_CASE("weak membership matches the convex-split search on random instances") {
  std::mt19937_64 g(404);
  int hits = 0, misses = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const BoxPolytope P = rnd_polytope(g, 3, false);
    for (int s = 0; s < 6; ++s) {
      const RatVector x = rnd_box_point(g, 3, 4);
      if (!polytope_member(P, x)) continue;
      const ProjectionMembership weak = closure_member(P, ClosureVariant::Weak, x);
      const std::optional<ZFamily> viaz = find_z(P, x, ZCondition::III);
      CHECK(weak.member == viaz.has_value());
      if (weak.member) {
        ++hits;
        const RltEf ef = build_rlt_ef(P, ClosureVariant::Weak);
        const ZFamily derived = derive_z(x, extract_y(ef, weak.witness), P.binary);
        CHECK(check_condition_iii(P, x, derived));
        CHECK(check_condition_iv(P, x, derived));
      } else {
        ++misses;
      }
      if (viaz) CHECK(check_condition_iv(P, x, *viaz));
    }
  }
  // The sample must exercise both outcomes to mean anything.
  CHECK(hits > 0);
  CHECK(misses > 0);
}

TEST_CASE("all statements coincide when every coordinate is binary") {
  std::mt19937_64 g(808);
  int agree_true = 0, agree_false = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const BoxPolytope P = rnd_polytope(g, 3, true);
    for (int s = 0; s < 5; ++s) {
      const RatVector x = rnd_box_point(g, 3, 4);
      if (!polytope_member(P, x)) continue;
      const bool weak = closure_member(P, ClosureVariant::Weak, x).member;
      const bool strong = closure_member(P, ClosureVariant::Strong, x).member;
      const bool iii = find_z(P, x, ZCondition::III).has_value();
      const bool iv = find_z(P, x, ZCondition::IV).has_value();
      CHECK(weak == strong);
      CHECK(weak == iii);
      CHECK(weak == iv);
      (weak ? agree_true : agree_false)++;
    }
  }
  CHECK(agree_true > 0);
  CHECK(agree_false > 0);
}
