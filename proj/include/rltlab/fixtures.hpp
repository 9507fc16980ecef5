#pragma once

#include "rltlab/polytope.hpp"

namespace rltlab {

/// Triangle in the unit square with vertices (0,0), (1,0), (1/2,1);
/// only the first coordinate is binary.
BoxPolytope fig2_polytope();

/// Convex hull of six points in the unit 4-cube: the first three unit
/// vectors together with (1/2,0,1/2,1), (0,1/2,1/2,1) and (1/2,1/2,0,1).
/// All four coordinates are binary.
BoxPolytope fig3_polytope();

/// {x in [0,1]^4 : x1+x2+x3+x4 <= 1, 2x1+2x2+2x3+x4 >= 1} with all four
/// coordinates binary.
BoxPolytope fig4_polytope();

}  // namespace rltlab
