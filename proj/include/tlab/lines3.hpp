#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlab/caps.hpp"
#include "tlab/geom.hpp"

namespace tlab {

enum class PairRel { Above, Below, Meet };

// Everything the above/below machinery needs about one non-parallel pair:
// the common vertical line, the two feet on it, and the pair of parallel
// planes through each line. Both planes carry the same normal, oriented so
// that its z-component is positive (positive side = above).
struct LinePairFrame {
  Line3 l1, l2;
  Point2 vline_xy;
  Point3 foot1;   // l1 ∩ common vertical
  Point3 foot2;   // l2 ∩ common vertical
  Plane3 plane1;  // contains l1, parallel to l2
  Plane3 plane2;  // contains l2, parallel to l1
  PairRel relation = PairRel::Meet;  // Above iff foot1 strictly higher
};

// Throws ProjParallel when the projected directions coincide.
LinePairFrame pair_frame(const Line3& l1, const Line3& l2);

// True iff H meets the closed vertical segment between the two feet
// (endpoint contact counts; a vertical H containing the segment counts).
bool separates_lines(const Plane3& h, const Line3& l1, const Line3& l2);
bool separates_lines(const Plane3& h, const LinePairFrame& f);

struct MonotoneVerdict {
  bool monotone = false;
  ChainKind kind = ChainKind::Cap;  // of the projected sequence
  bool descending = true;           // chain direction under the above/below order
  bool strict = true;               // no Meet pair
  int bad_i = -1, bad_j = -1, bad_k = -1;
  std::string reason;
};

// Projected sequence must be a cap or cup, and the lines must form a chain
// under the above/below order. The chain is verified on all pairs, not just
// consecutive ones.
MonotoneVerdict is_monotone(const std::vector<Line3>& seq);

struct TripleType3 {
  bool t1 = false, t2 = false, t3 = false, t4 = false;
  bool any() const { return t1 || t2 || t3 || t4; }
};

// Classification of a strictly descending projected-cap triple against the
// prism between the two parallel planes of the outer pair.
TripleType3 classify_triple3(const Line3& li, const Line3& lj, const Line3& lk);

// First ordered quadruple of distinct indices (lexicographic) such that the
// plane through line k parallel to line l separates lines i and j.
std::optional<std::array<int, 4>> find_separating_quad(const std::vector<Line3>& seq);

enum class CandidateKind { PiPlanes, PiPlusVertexTriples };

struct SeparationSearch {
  Plane3 plane;
  int count = 0;
  std::vector<std::pair<int, int>> pairs;
  SeparationSearch() : plane(Scalar(0), Scalar(0), Scalar(1), Scalar(0)) {}
};

// Evaluates every candidate plane (all line-parallel planes over ordered
// pairs, optionally extended by planes through triples of feet) and returns
// a maximizer with its full separated-pair list. Ties break toward the
// lexicographically smallest normalized plane. Requires strictly skew pairs.
SeparationSearch best_separating_plane(const std::vector<Line3>& lines, CandidateKind kind);

// Fixed rational rotations of the xy-frame (Pythagorean-triple based).
int rotation_count();
Line3 rotate_line_xy(const Line3& l, int idx, bool inverse);
Plane3 rotate_plane_xy(const Plane3& h, int idx, bool inverse);
Point3 rotate_point_xy(const Point3& p, int idx, bool inverse);

struct GenericFrame {
  std::vector<Line3> lines;
  int rotation_index = -1;  // -1: identity
};

// Rotates the xy-frame until no projected line is vertical. Throws
// Degenerate when no listed rotation works (only finitely many are bad).
GenericFrame make_projection_generic(const std::vector<Line3>& lines);

}  // namespace tlab
