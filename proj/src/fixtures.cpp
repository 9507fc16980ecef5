#include "rltlab/fixtures.hpp"

namespace rltlab {

BoxPolytope fig2_polytope() {
  BoxPolytope P;
  P.n = 2;
  P.binary = {0};
  P.description = "triangle in the unit square with apex (1/2,1); x1 binary";
  P.rows.push_back(Row{{Rational(-2), Rational(1)}, Relation::LessEq, Rational(0), "r1"});
  P.rows.push_back(Row{{Rational(2), Rational(1)}, Relation::LessEq, Rational(2), "r2"});
  return P;
}

BoxPolytope fig3_polytope() {
  const std::vector<RatVector> pts = {
      {Rational(1), Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(0), Rational(1), Rational(0)},
      {rat(1, 2), Rational(0), rat(1, 2), Rational(1)},
      {Rational(0), rat(1, 2), rat(1, 2), Rational(1)},
      {rat(1, 2), rat(1, 2), Rational(0), Rational(1)},
  };
  BoxPolytope P = hull_from_vertices(pts);
  P.binary = {0, 1, 2, 3};
  P.description = "hull of three unit vectors and three half-integer points in the 4-cube";
  return P;
}

BoxPolytope fig4_polytope() {
  BoxPolytope P;
  P.n = 4;
  P.binary = {0, 1, 2, 3};
  P.description = "slab between x1+x2+x3+x4 <= 1 and 2x1+2x2+2x3+x4 >= 1 in the 4-cube";
  P.rows.push_back(Row{{Rational(1), Rational(1), Rational(1), Rational(1)},
                       Relation::LessEq, Rational(1), "r1"});
  P.rows.push_back(Row{{Rational(2), Rational(2), Rational(2), Rational(1)},
                       Relation::GreaterEq, Rational(1), "r2"});
  return P;
}

}  // namespace rltlab
