#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rltlab/polytope.hpp"

namespace rltlab {

/// Outcome of one randomized property suite. A violated property stops the
/// run; `failure` then names the property and `falsifying` holds a
/// self-contained JSON description of the instance that broke it.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;   ///< instances examined
  long checks = 0;  ///< individual property evaluations performed
  bool passed = false;
  std::string failure;
  nlohmann::ordered_json falsifying;
};

/// Random member of the instance family shared by the property suites: one
/// to four coordinates, up to six extra rows anchored at an interior
/// rational point so the polytope is never empty, coefficient and anchor
/// denominators at most eight, and a random (or, on request, full) binary
/// subset.
BoxPolytope random_box_polytope(std::uint64_t seed, bool full_binary = false);

/// Runs the named suite: `prop2` (weak-closure points survive the
/// lift-and-project hull), `prop3` (containment chain, redundant-row
/// invariance, coordinate-flip and face commutation, monotonicity, product
/// bound redundancy), `thm3` (membership/witness-family equivalences),
/// `thm4` (one-hot dominance with witness replay) or `thm7` (exhaustive
/// family classification). Throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int trials);

struct FigureCheck {
  std::string name;
  bool ok = false;
};

/// Assertion bundle for one of the worked examples shipped in data/.
struct FigureReport {
  std::string figure;
  std::vector<FigureCheck> checks;
  bool passed = false;
};

/// figure in {fig2, fig3, fig4}; throws std::invalid_argument otherwise.
/// fig2: weak-closure verdicts on the triangle with one binary coordinate
/// and the split between the equation-only and convex-split families at
/// (1/2,1). fig3: the six-vertex hull where lift-and-project keeps a point
/// the strong closure cuts, plus one-hot dominance onto the bottom triangle.
/// fig4: the explicit diagonal lifting that satisfies every strongly
/// multiplied row yet escapes the pattern hull, and the full-cardinality
/// hull matching the unit-sum slice on sampled queries.
FigureReport reproduce_figure(const std::string& figure);

}  // namespace rltlab
