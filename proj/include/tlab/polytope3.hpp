#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tlab/geom.hpp"
#include "tlab/poly2.hpp"

namespace tlab {

// Compact convex polytope in R^3 with both descriptions: extreme points and
// an irredundant halfspace list (K = ∩ { eval <= 0 }). Degenerate intrinsic
// dimensions (point, segment, planar polygon) are first-class; equalities
// appear as opposite halfspace pairs. Desk-scale exact enumeration at
// construction: facet candidates from vertex triples, vertices of halfspace
// systems from plane triples.
class Polytope3 {
 public:
  static Polytope3 hull_of(std::vector<Point3> pts);

  int dim() const { return dim_; }
  const std::vector<Point3>& vertices() const { return verts_; }
  const std::vector<Plane3>& halfspaces() const { return hs_; }

  bool contains(const Point3& p) const;
  ConvexPoly2 shadow() const;  // vertical projection

  friend bool operator==(const Polytope3& a, const Polytope3& b) {
    return a.verts_ == b.verts_;  // vertices are stored sorted
  }

 private:
  std::vector<Point3> verts_;
  std::vector<Plane3> hs_;
  int dim_ = -1;
};

// All vertices of the (assumed bounded) region ∩ { eval <= 0 }: candidate
// points from plane triples, filtered by feasibility. Empty result means an
// empty region for bounded inputs.
std::vector<Point3> halfspace_vertices(const std::vector<Plane3>& hs);

// Some point of A ∩ B, or nullopt when the polytopes are disjoint. Tries
// cheap exact candidates (vertices, shadow fibers) before falling back to
// full vertex enumeration of the combined halfspace system.
std::optional<Point3> polytope_common_point(const Polytope3& A, const Polytope3& B);

// Parameter interval of { base + t dir } inside K, closed; nullopt if the
// line misses K.
std::optional<std::pair<Scalar, Scalar>> clip_line3(const Polytope3& K, const Line3& l);
// z-interval of the vertical line through (x, y) inside K.
std::optional<std::pair<Scalar, Scalar>> clip_vertical3(const Polytope3& K,
                                                        const Scalar& x, const Scalar& y);

// Halfspace list of the vertical prism over a planar convex region.
std::vector<Plane3> prism_halfspaces(const ConvexPoly2& base);

// The two halves of the vertical join: vertices of A ∩ prism(B*) and of
// B ∩ prism(A*). Both empty iff the shadows are disjoint.
struct JoinPieces {
  std::vector<Point3> in_a;  // points of A over the common shadow
  std::vector<Point3> in_b;
  bool empty() const { return in_a.empty() || in_b.empty(); }
};
JoinPieces join_pieces(const Polytope3& A, const Polytope3& B);

// Convex hull of all closed vertical segments between A and B; nullopt when
// the shadows are disjoint.
std::optional<Polytope3> vertical_join(const Polytope3& A, const Polytope3& B);

// True iff H crosses the vertical join of A and B (false on empty join).
// Decided by the signed extremes of H over the two join pieces.
bool separates_sets(const Plane3& h, const Polytope3& A, const Polytope3& B);
bool separates_sets(const Plane3& h, const JoinPieces& pieces);

struct VerticalSegment {
  Point3 a;  // in A
  Point3 b;  // in B, same (x, y)
};

// A closed vertical segment between A and B met by H, whenever one exists
// (equivalently, whenever H separates A and B); nullopt otherwise.
std::optional<VerticalSegment> vertical_segment_witness(const Plane3& h, const Polytope3& A,
                                                        const Polytope3& B);

// Oriented line a*x + b*y = c; (a, b) points into the positive side.
struct OrientedLine2 {
  Scalar a, b, c;
  Scalar eval(const Point2& p) const { return a * p.x + b * p.y - c; }
  friend bool operator==(const OrientedLine2& u, const OrientedLine2& v) {
    return u.a == v.a && u.b == v.b && u.c == v.c;
  }
};

struct TangentLines2 {
  std::vector<OrientedLine2> lines;  // all oriented common tangents
  bool nongeneric = false;           // some tangent meets a set in more than a point
};

// All oriented lines tangent to both disjoint full-dimensional polygons,
// by vertex-pair enumeration with an exact tangency filter. A good pair in
// the plane supports exactly 8 of them.
TangentLines2 common_tangent_lines2(const ConvexPoly2& P, const ConvexPoly2& Q);

struct GoodFamilyCert {
  bool good = false;
  std::optional<Line3> witness;          // a line crossing all three
  std::optional<Point2> vertical_witness_xy;  // when only a vertical witness exists
};

// Decides whether some line crosses all three full-dimensional polytopes.
// A triple admits a transversal iff one of the sets meets the convex hull
// of the other two's union, which reduces the decision to exact polytope
// intersection tests; the witness is reconstructed from that hull point.
GoodFamilyCert is_good_family3(const Polytope3& C1, const Polytope3& C2, const Polytope3& C3);

struct TangentPlanes3 {
  std::vector<Plane3> planes;  // oriented
  bool nongeneric = false;
};

// All oriented planes tangent to all three polytopes of a good family, by
// vertex-triple enumeration with an exact tangency filter; a good triple
// supports exactly 16 oriented tangent planes.
TangentPlanes3 common_tangent_planes3(const Polytope3& C1, const Polytope3& C2,
                                      const Polytope3& C3);

}  // namespace tlab
