#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlab/geom.hpp"

namespace tlab {

// Compact convex set in the plane as an ordered CCW vertex list. Degenerate
// sets are first-class: 2 vertices = segment, 1 vertex = point. For >= 3
// vertices the polygon is strictly convex (no three consecutive collinear)
// and the vertex list starts at the lexicographically smallest vertex, so
// equal sets have equal representation.
class ConvexPoly2 {
 public:
  // Convex hull of an arbitrary nonempty point list.
  static ConvexPoly2 hull_of(std::vector<Point2> pts);
  // Strict load: every input point must be a hull vertex (used by JSON I/O).
  static ConvexPoly2 from_vertices(const std::vector<Point2>& pts);

  int dim() const;  // 0 point, 1 segment, 2 full-dimensional
  const std::vector<Point2>& vertices() const { return verts_; }
  int edge_count() const;
  std::pair<Point2, Point2> edge(int i) const;

  bool contains(const Point2& p) const;         // closed
  bool interior_contains(const Point2& p) const;  // 2D interior
  bool relint_contains(const Point2& p) const;  // relative interior
  bool on_boundary(const Point2& p) const;      // boundary as a subset of R^2

  Scalar min_x() const;
  Scalar max_x() const;
  Point2 lex_min_vertex() const { return verts_.front(); }
  Point2 centroid() const;  // vertex centroid; lies in the relative interior

  friend bool operator==(const ConvexPoly2& a, const ConvexPoly2& b) {
    return a.verts_ == b.verts_;
  }

 private:
  std::vector<Point2> verts_;
};

struct Segment2 {
  Point2 a, b;
  bool is_point() const { return a == b; }
};

// Closed intersection of two closed segments (either may be a point):
// empty, one point, or the two endpoints of an overlap segment.
std::vector<Point2> seg_intersect(const Point2& a, const Point2& b,
                                  const Point2& c, const Point2& d);
bool segments_meet(const Segment2& s, const Segment2& t);
bool point_on_segment(const Point2& p, const Point2& a, const Point2& b);

// Exact convex intersection; nullopt when disjoint.
std::optional<ConvexPoly2> poly_intersect2(const ConvexPoly2& P, const ConvexPoly2& Q);

// K cut by the non-vertical line, as a (possibly degenerate) segment.
std::optional<Segment2> clip_line2(const ConvexPoly2& K, const Line2& l);
// K cut by the vertical line x = x0, as a closed y-interval.
std::optional<std::pair<Scalar, Scalar>> clip_vline2(const ConvexPoly2& K, const Scalar& x0);
bool segment_meets_poly(const Point2& a, const Point2& b, const ConvexPoly2& K);

enum class FamilyClass2 { NotPairwise, Strict2, HasTriple };
FamilyClass2 family_class2(const std::vector<ConvexPoly2>& F);

enum class TriOrient { CW, CCW };
enum class TripleCat { Cap, Cup, VLeft, VRight };

// Joint orientation + category record of a strictly 2-intersecting ordered
// triple (K1, K2, K3); the categories follow the four mutually exclusive
// arrangements of the pairwise intersections.
struct TripleAnalysis {
  TriOrient orientation;
  TripleCat category;
  Point2 w12, w23, w13;  // canonical witnesses (lex-min vertices)

  // Cap/Cup: the roles (A, middle, B) of the cap permutation, as indices
  // into the input order.
  std::array<int, 3> cap_roles{-1, -1, -1};

  // VLeft/VRight: the two pairwise intersections crossed by one vertical
  // line, each named by the role NOT involved in it, the remaining role,
  // and a witness x for the vertical line.
  std::array<int, 2> crossed_missing{-1, -1};
  int side_missing = -1;
  Scalar vline_x;
};

TripleAnalysis analyze_triple(const ConvexPoly2& K1, const ConvexPoly2& K2, const ConvexPoly2& K3);
// variant over precomputed pairwise intersections (i23 = K2 ∩ K3 etc.);
// the caller guarantees they are the stated nonempty intersections
TripleAnalysis analyze_triple_cached(const ConvexPoly2& K3, const ConvexPoly2& i23,
                                     const ConvexPoly2& i13, const ConvexPoly2& i12);
TriOrient triple_orientation(const ConvexPoly2& K1, const ConvexPoly2& K2, const ConvexPoly2& K3);
TripleCat triple_category(const ConvexPoly2& K1, const ConvexPoly2& K2, const ConvexPoly2& K3);

// The unique bounded component of the complement of a strictly
// 2-intersecting triple, described by its three corner points and the
// boundary arcs between them. arc1 runs along ∂K1 from v12 to v13, arc2
// along ∂K2 from v12 to v23, arc3 along ∂K3 from v23 to v13.
struct HoleDescriptor {
  Point2 v12, v23, v13;
  std::vector<Point2> arc1, arc2, arc3;
  bool degenerate = false;  // hole collapsed to a point or segment
};

HoleDescriptor hole_region(const ConvexPoly2& K1, const ConvexPoly2& K2, const ConvexPoly2& K3);

struct Lemma4Result {
  enum class Kind { ConclusionHolds, ConclusionViolated, HypothesisFails };
  Kind kind;
  std::string reason;           // failed hypothesis, when HypothesisFails
  Point2 vac, vbc, vad, vbd;    // hole corners used by the conclusion check
};

// Checks the hypotheses of the 4-set crossing lemma on the ordered family
// (Ka, Kb | Kc, Kd) and, when they hold, checks the conclusion
// v_ac v_bc ∩ v_ad v_bd != ∅ exactly.
Lemma4Result check_lemma_4sets(const ConvexPoly2& Ka, const ConvexPoly2& Kb,
                               const ConvexPoly2& Kc, const ConvexPoly2& Kd);

// Mutual tangency: intersecting with disjoint relative interiors.
bool mutually_tangent(const ConvexPoly2& A, const ConvexPoly2& B);

ConvexPoly2 reflect_poly_y(const ConvexPoly2& K);  // (x, y) -> (x, -y)
ConvexPoly2 reflect_poly_x(const ConvexPoly2& K);  // (x, y) -> (-x, y)

}  // namespace tlab
