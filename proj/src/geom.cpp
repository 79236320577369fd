#include "tlab/geom.hpp"

#include "tlab/error.hpp"

namespace tlab {

Orient orient2(const Point2& p, const Point2& q, const Point2& r) {
  int s = cross2(q - p, r - p).sign();
  return s > 0 ? Orient::CCW : (s < 0 ? Orient::CW : Orient::Collinear);
}

Line2 Line2::through(const Point2& p, const Point2& q) {
  if (p.x == q.x) throw Error(ErrorCode::Degenerate, "vertical line is not a Line2");
  Scalar m = (q.y - p.y) / (q.x - p.x);
  return Line2{m, p.y - m * p.x};
}

Side side_of_line(const Point2& p, const Line2& l) {
  int s = (p.y - l.y_at(p.x)).sign();
  return s > 0 ? Side::Pos : (s < 0 ? Side::Neg : Side::On);
}

std::optional<Point2> line2_intersect(const Line2& l1, const Line2& l2) {
  if (l1.slope == l2.slope) return std::nullopt;
  Scalar x = (l2.intercept - l1.intercept) / (l1.slope - l2.slope);
  return Point2{x, l1.y_at(x)};
}

std::vector<Scalar> normalize_integer_vector(std::vector<Scalar> v, bool lex_positive) {
  mpz_class den_lcm(1);
  for (const auto& s : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), s.denominator().get_mpz_t());
  mpz_class g(0);
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (const auto& s : v) {
    mpz_class n = s.numerator() * (den_lcm / s.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  if (g == 0) return v;  // zero vector stays put
  int lead = 0;
  for (const auto& n : ints) {
    if (n != 0) { lead = sgn(n); break; }
  }
  if (lex_positive && lead < 0) g = -g;
  for (size_t i = 0; i < v.size(); ++i) v[i] = Scalar(mpq_class(ints[i] / g));
  return v;
}

Line3::Line3(const Point3& base, const Point3& dir) {
  if (dir.x.is_zero() && dir.y.is_zero())
    throw Error(ErrorCode::Degenerate, "vertical or null direction for Line3");
  auto nd = normalize_integer_vector({dir.x, dir.y, dir.z}, /*lex_positive=*/true);
  dir_ = {nd[0], nd[1], nd[2]};
  // canonical base: the point with x = 0 when possible, else y = 0
  if (!dir_.x.is_zero()) {
    base_ = base + (-base.x / dir_.x) * dir_;
  } else {
    base_ = base + (-base.y / dir_.y) * dir_;
  }
}

Line3 Line3::through(const Point3& p, const Point3& q) {
  if (p == q) throw Error(ErrorCode::BadInput, "coincident points define no line");
  return Line3(p, q - p);
}

Plane3::Plane3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw Error(ErrorCode::BadInput, "null plane normal");
  // positive scaling only: orientation survives canonicalization
  auto nv = normalize_integer_vector({a, b, c, d}, /*lex_positive=*/false);
  a_ = nv[0]; b_ = nv[1]; c_ = nv[2]; d_ = nv[3];
}

Plane3 Plane3::through(const Point3& p, const Point3& q, const Point3& r) {
  Point3 n = cross3(q - p, r - p);
  if (n.x.is_zero() && n.y.is_zero() && n.z.is_zero())
    throw Error(ErrorCode::Degenerate, "collinear points define no plane");
  return from_point_normal(p, n);
}

Plane3 Plane3::from_point_normal(const Point3& p, const Point3& normal) {
  return Plane3(normal.x, normal.y, normal.z, dot3(normal, p));
}

std::array<Scalar, 4> Plane3::unoriented_key() const {
  int lead = a_.sign();
  if (lead == 0) lead = b_.sign();
  if (lead == 0) lead = c_.sign();
  if (lead < 0) return {-a_, -b_, -c_, -d_};
  return {a_, b_, c_, d_};
}

bool operator<(const Plane3& x, const Plane3& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  if (x.c_ != y.c_) return x.c_ < y.c_;
  return x.d_ < y.d_;
}

Side side_of_plane(const Point3& p, const Plane3& h) {
  int s = h.eval(p).sign();
  return s > 0 ? Side::Pos : (s < 0 ? Side::Neg : Side::On);
}

Line2 project_line(const Line3& l) {
  if (l.dir().x.is_zero())
    throw Error(ErrorCode::Degenerate, "projected line is vertical");
  Scalar m = l.dir().y / l.dir().x;
  Point2 b = project(l.base());
  return Line2{m, b.y - m * b.x};
}

}  // namespace tlab
