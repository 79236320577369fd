#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlab/caps.hpp"
#include "tlab/lines3.hpp"
#include "tlab/polytope3.hpp"

namespace tlab {

struct DepthSearch {
  Point2 point;
  int depth = 0;
  std::vector<int> ids;
};

// Point of maximum coverage. For polygonal families the maximum is attained
// among polygon vertices and pairwise boundary crossings, which is the
// candidate set searched here.
DepthSearch deepest_point2(const std::vector<ConvexPoly2>& F);

// A stabbing line: either a generic line or a vertical one (which Line3
// cannot represent by construction).
struct StabLine {
  std::optional<Line3> line;
  std::optional<VLine3> vline;
  bool vertical() const { return vline.has_value(); }
};

struct CrossingCount {
  int count = 0;
  std::vector<int> ids;
};

// Exact count of polytopes met by the line (closed; tangency counts).
CrossingCount line_crossing_count3(const Line3& l, const std::vector<Polytope3>& F);
CrossingCount line_crossing_count3(const VLine3& l, const std::vector<Polytope3>& F);
CrossingCount line_crossing_count3(const StabLine& l, const std::vector<Polytope3>& F);

struct PlaneStab {
  Line3 line;
  int count = 0;
  std::vector<int> ids;
  PlaneStab() : line({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}) {}
};

// Best stabbing line within the plane over candidate lines through pairs of
// cross-section vertices; sections are exact planar cuts of the polytopes.
PlaneStab best_line_in_plane(const Plane3& h, const std::vector<Polytope3>& F);

// Trace of the three-crossing-line construction, pair by pair.
struct PairTrace {
  int i = -1, j = -1;
  Point3 pair_witness;            // a point of K_i ∩ K_j
  bool separated = false;         // pair belongs to the separated set
  Point3 seg_a, seg_b;            // vertical segment, a ∈ K_i, b ∈ K_j
  Point3 plane_hit;               // segment ∩ plane
  Point3 path_hit;                // where the witness path crosses the plane
  bool path_hit_in_i = false, path_hit_in_j = false;
};

struct Lemma3setsTrace {
  std::vector<PairTrace> pairs;             // all i < j
  std::vector<Line3> lifted;                // per-set lift of the realizing line onto the plane
  std::map<std::pair<int, int>, Point3> lift_vertex;  // crossing of two lifts
  std::vector<std::vector<int>> interval_members;     // partner ids whose vertex lies in V_i
  std::vector<std::pair<int, int>> interval_ends;     // extreme partner ids per set (-1,-1 if none)
  int chosen = -1;                           // index of the selected lift
};

struct ThreeCrossing {
  Line3 line;  // within the plane
  std::vector<int> ids;
  Lemma3setsTrace trace;
  ThreeCrossing() : line({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}) {}
};

// The separated-pair counting construction: builds the full trace and
// returns a line inside `pi` crossing at least three members of Q, verified
// exactly. Q must be realized by L and pi must separate at least
// c0 * C(q,2) pairs with (c0*C(q,2) - 2q)/q >= 3.
ThreeCrossing three_crossing_line(const std::vector<Polytope3>& Q, const std::vector<Line3>& L,
                                  const Plane3& pi, const Scalar& c0);

// Replaces each (possibly huge) set by the hull of its pairwise witness
// points: the shrunken family is still pairwise intersecting, and any line
// crossing a fraction of it crosses the same fraction of the original.
// witnesses[{i, j}] with i < j must lie in K_i ∩ K_j.
std::vector<Polytope3> compactness_reduction(
    int n, const std::map<std::pair<int, int>, Point3>& witnesses);

struct PipelineConfig {
  int depth_threshold = 3;
  // smallest round parameters satisfying the counting gate
  // (c0 * C(q,2) - 2q) / q >= 3 at q = 24
  Scalar c0 = Scalar(1, 2);
  int q = 24;
};

struct TransversalReport {
  StabLine line;
  std::vector<int> crossed_ids;
  Scalar fraction;
  std::string stage;  // VERTICAL_DEPTH, PLANE_STAB or FALLBACK
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

// Stage A: vertical line through the deepest shadow point. Stage B:
// realization extraction on the shadows, lift, monotone subsequence,
// separating plane, three-crossing construction, and a plane stab of the
// full family. Stage C: candidate lines through pairs of pairwise-witness
// points. Returns the best verified line across stages.
TransversalReport run_pipeline(const std::vector<Polytope3>& F, const PipelineConfig& cfg = {});

}  // namespace tlab
