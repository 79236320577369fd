#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tlab/caps.hpp"
#include "tlab/polytope3.hpp"

namespace tlab {

// A generated or loaded problem instance. Generators re-verify their own
// postconditions with library predicates before emitting (the `certifies`
// tags), and the loader re-runs those checks.
struct Instance {
  int dim = 2;
  std::vector<std::string> ids;
  std::vector<ConvexPoly2> sets2;
  std::vector<Polytope3> sets3;
  std::vector<Line3> lines;
  int family_split = -1;  // lines[0..split) vs the rest (bipartite instances)
  uint64_t seed = 0;
  std::string generator;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> certifies;

  size_t set_count() const { return dim == 2 ? sets2.size() : sets3.size(); }
};

// Re-checks every certified postcondition; throws VerifyFailed on mismatch.
void verify_instance(const Instance& inst);

// n-cap of fattened tangent strips, shrunk until strictly 2-intersecting.
Instance gen_cap_family2(int n, const Scalar& fatness, uint64_t seed);

// n pairwise skew lines whose projections form an n-cap, heights strictly
// descending; tilt curvature alternates with the seed.
Instance gen_monotone_lines3(int n, uint64_t seed);

// boxes fattened around a monotone line family, extended vertically until
// every pair meets in space; strictly 2-overlapping and realized by the
// core lines (which are included in the instance).
Instance gen_strict2_family3(int n, const Scalar& height, uint64_t seed);

// the two rulings of z = x*y, optionally perturbed by offsets of magnitude
// <= eps, plus thin boxes fattening each truncated line.
Instance gen_paraboloid(int n, const Scalar& eps, uint64_t seed);

}  // namespace tlab
