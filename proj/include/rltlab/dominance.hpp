#pragma once

#include <cstdint>
#include <optional>

#include "rltlab/disjunctive.hpp"
#include "rltlab/rlt.hpp"

namespace rltlab {

/// A 0/1 point on a d-coordinate sub-cube.
using Pattern = std::vector<int>;

/// Outcome of the unique-face test for a family of 0/1 patterns: either every
/// pattern is the sole family member on some cube facet x_j = pattern_j, or a
/// failing pattern is exhibited together with, per coordinate, another family
/// member agreeing with it there. Exactly one branch is populated.
struct UniqueFaceReport {
  bool holds = false;
  std::vector<int> witness_coord;  ///< per pattern, its facet coordinate (holds)
  int failing = -1;                ///< index of the failing pattern (fails)
  std::vector<int> agreeing;       ///< per coordinate, index of an agreeing peer
};

/// Pure set computation; patterns must be distinct 0/1 vectors of width d.
UniqueFaceReport check_unique_face_condition(const std::vector<Pattern>& family, int d);

/// A complete worked refutation of closure-dominance for a pattern family
/// violating the unique-face condition: a polytope inside the family's hull
/// whose strongly-multiplied closure contains a point outside the hull of the
/// pattern-fixing disjunction.
struct Counterexample {
  BoxPolytope polytope;           ///< conv(family') cut by sum x <= d - alpha
  std::vector<Pattern> family;    ///< complemented family (star mapped to ones)
  std::vector<int> complemented;  ///< coordinates flipped from the input
  int star = -1;                  ///< index of the all-ones pattern in `family`
  Rational eps;                   ///< mixing weight, 0 < eps < 1/d^2
  Rational alpha;                 ///< budget shift eps/(1+eps)
  RatVector xhat;                 ///< the offending closure point
  RatMatrix yhat;                 ///< its product lifting (outer-product mix)
  std::vector<int> support_peer;  ///< per coordinate i, chosen peer with 1 at i
  std::vector<int> zero_coord;    ///< per coordinate i, a 0-coordinate of peer i
};

/// Builds the refutation for the family member at index `star`, which must
/// lack a unique-face coordinate (std::invalid_argument otherwise, and for an
/// eps override outside (0, 1/d^2) or above 1/d). Peers and their zero
/// coordinates are chosen lexicographically smallest.
Counterexample build_counterexample(const std::vector<Pattern>& family, int d, int star,
                                    std::optional<Rational> eps_override = std::nullopt);

/// Re-derives every claim of the construction from scratch: the lifting
/// satisfies the strongly-multiplied system row by row, fresh membership LPs
/// confirm xhat in both closure variants, the pattern-disjunction hull
/// excludes xhat, the coordinate sum exceeds d - 1, and the slack and ratio
/// bounds used by the derivation hold exactly.
bool verify_counterexample(const Counterexample& ce);

struct CardinalityDominanceReport {
  bool equation_valid = false;
  int trials = 0;
  std::vector<RatVector> optima;  ///< sampled strong-closure optima, all in hull
};

/// For `trials` seeded random objectives: optimizes over the strong closure,
/// checks the optimum against the hull of the one-hot disjunction on J, and
/// replays the witness aggregation identity. Requires sum_{j in J} x_j = 1 to
/// be valid for P (std::invalid_argument otherwise); any failed check is a
/// falsified invariant and throws std::logic_error.
CardinalityDominanceReport verify_cardinality_dominance(const BoxPolytope& P,
                                                        const std::vector<int>& J, int trials,
                                                        std::uint64_t seed = 2024);

/// Exact witness checks behind the cardinality-dominance argument, for a
/// lifted point of the multiplied system: column sums over J reproduce x, the
/// scaled columns are members of P pinned at their own coordinate, and their
/// x_j-weighted mix recombines x. Throws std::logic_error on any violation.
void replay_cardinality_identity(const BoxPolytope& P, const RltEf& ef,
                                 const std::vector<int>& J, const RatVector& lifted);

/// Convex hull of a random subset of the 0/1 points with exactly one 1 inside
/// J (coordinates outside J free), cut by two random valid inequalities. The
/// equation sum_{j in J} x_j = 1 is valid by construction; all coordinates
/// are binary.
BoxPolytope random_cardinality_polytope(int n, const std::vector<int>& J, std::uint64_t seed);

struct ClassificationEntry {
  std::uint32_t mask = 0;  ///< bit e set iff the pattern encoding e is present
  bool condition_holds = false;
  bool verified = false;  ///< sampled dominance (holds) / refutation (fails)
};

struct ClassificationTable {
  int d = 0;
  std::vector<ClassificationEntry> entries;
  int discrepancies = 0;  ///< entries whose verification failed (expected 0)
};

/// Exhaustive sweep over all nonempty pattern families on a d-cube (d <= 3):
/// families meeting the unique-face condition get sampled dominance checks on
/// the budget-cut hull and random sub-polytopes; failing families get a built
/// and verified counterexample.
ClassificationTable classify_all(int d, int trials_per_case = 2, std::uint64_t seed = 7);

struct WeakGapCandidate {
  std::uint64_t seed = 0;
  BoxPolytope polytope;
  std::vector<int> J;
  RatVector point;  ///< weak-closure point outside the cardinality hull
  Row cut;          ///< verified separating inequality
};

struct WeakGapFindings {
  int polytopes = 0;
  int samples = 0;
  std::vector<WeakGapCandidate> candidates;
};

/// Random search for a weakly-multiplied closure point escaping the hull of
/// the one-hot disjunction on a planted cardinality equation. Nothing is
/// asserted about the outcome; candidates ship with verified certificates.
WeakGapFindings explore_weak_gap(const std::vector<std::uint64_t>& seeds);

}  // namespace rltlab
