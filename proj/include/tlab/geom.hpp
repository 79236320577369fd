#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tlab/scalar.hpp"

namespace tlab {

enum class Orient { CW = -1, Collinear = 0, CCW = 1 };
enum class Side { Neg = -1, On = 0, Pos = 1 };

struct Point2 {
  Scalar x, y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  // lexicographic; used for canonical witness selection and dedup
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

struct Point3 {
  Scalar x, y, z;

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }
  friend bool operator<(const Point3& a, const Point3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
  std::string str() const {
    return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
  }
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Scalar& s, const Point2& p) { return {s * p.x, s * p.y}; }
inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(const Scalar& s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }

inline Scalar cross2(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot2(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline Point3 cross3(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Scalar dot3(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Sign of the 2x2 determinant of (q-p, r-p). Exact.
Orient orient2(const Point2& p, const Point2& q, const Point2& r);

// Non-vertical line y = slope*x + intercept.
struct Line2 {
  Scalar slope, intercept;

  Scalar y_at(const Scalar& x) const { return slope * x + intercept; }
  friend bool operator==(const Line2& a, const Line2& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
  friend bool operator<(const Line2& a, const Line2& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept < b.intercept;
  }
  static Line2 through(const Point2& p, const Point2& q);  // throws if vertical
};

// Vertical line x = const. Deliberately a distinct type from Line2.
struct VLine2 {
  Scalar x;
};

// Pos iff p strictly above l, Neg iff strictly below, On iff incident.
Side side_of_line(const Point2& p, const Line2& l);

// Unique intersection point, or nullopt when the slopes coincide (PARALLEL).
std::optional<Point2> line2_intersect(const Line2& l1, const Line2& l2);

// Non-vertical line in R^3: base point plus direction with (dx,dy) != (0,0).
// Canonical form so that structural equality equals geometric equality:
// dir is the lowest-term integer triple with lexicographically-positive sign,
// and base is the point of the line with x = 0 (or y = 0 when dx = 0).
class Line3 {
 public:
  Line3(const Point3& base, const Point3& dir);  // throws Degenerate if vertical
  static Line3 through(const Point3& p, const Point3& q);

  const Point3& base() const { return base_; }
  const Point3& dir() const { return dir_; }
  Point3 at(const Scalar& t) const { return base_ + t * dir_; }

  friend bool operator==(const Line3& a, const Line3& b) {
    return a.base_ == b.base_ && a.dir_ == b.dir_;
  }
  friend bool operator!=(const Line3& a, const Line3& b) { return !(a == b); }

 private:
  Point3 base_, dir_;
};

// Vertical line in R^3 through (x, y). Not a Line3 by construction; it shows
// up as the Stage-A transversal of the pipeline and in depth searches.
struct VLine3 {
  Scalar x, y;
};

// Oriented plane a*x + b*y + c*z = d with (a,b,c) pointing into the positive
// side. Canonicalized to lowest-term integer coefficients by a positive
// factor, which preserves orientation; equal tuples <=> equal oriented
// planes. unoriented_key() folds the two orientations together for dedup.
class Plane3 {
 public:
  Plane3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
  static Plane3 through(const Point3& p, const Point3& q, const Point3& r);
  static Plane3 from_point_normal(const Point3& p, const Point3& normal);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }
  Point3 normal() const { return {a_, b_, c_}; }
  bool vertical() const { return c_.is_zero(); }

  // a*x + b*y + c*z - d
  Scalar eval(const Point3& p) const { return a_ * p.x + b_ * p.y + c_ * p.z - d_; }

  Plane3 flipped() const { return Plane3(-a_, -b_, -c_, -d_); }
  std::array<Scalar, 4> unoriented_key() const;

  friend bool operator==(const Plane3& x, const Plane3& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Plane3& x, const Plane3& y) { return !(x == y); }
  friend bool operator<(const Plane3& x, const Plane3& y);

 private:
  Scalar a_, b_, c_, d_;
};

Side side_of_plane(const Point3& p, const Plane3& h);

inline Point2 project(const Point3& p) { return {p.x, p.y}; }

// Drops z. Throws Degenerate when dir.x = 0: the projected line is vertical
// and Line2 cannot represent it; callers rotate the frame first (lines3).
Line2 project_line(const Line3& l);

// Scales a rational vector to the lowest-term integer vector with the same
// direction;  lex_positive flips the sign so the first nonzero entry is > 0.
std::vector<Scalar> normalize_integer_vector(std::vector<Scalar> v, bool lex_positive);

}  // namespace tlab
