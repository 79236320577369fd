#include "tlab/polytope3.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tlab/error.hpp"

namespace tlab {

namespace {

Scalar det3(const Point3& a, const Point3& b, const Point3& c) {
  return dot3(a, cross3(b, c));
}

// two equality halfspaces for plane n · x = d
void push_equality(std::vector<Plane3>& hs, const Point3& n, const Scalar& d) {
  hs.push_back(Plane3(n.x, n.y, n.z, d));
  hs.push_back(Plane3(-n.x, -n.y, -n.z, -d));
}

Point3 axis_not_parallel(const Point3& d) {
  if (!(d.y.is_zero() && d.z.is_zero())) return {Scalar(1), Scalar(0), Scalar(0)};
  return {Scalar(0), Scalar(1), Scalar(0)};
}

}  // namespace

Polytope3 Polytope3::hull_of(std::vector<Point3> pts) {
  if (pts.empty()) throw Error(ErrorCode::BadInput, "empty point set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope3 out;
  if (pts.size() == 1) {
    out.dim_ = 0;
    out.verts_ = pts;
    const Point3& p = pts[0];
    push_equality(out.hs_, {Scalar(1), Scalar(0), Scalar(0)}, p.x);
    push_equality(out.hs_, {Scalar(0), Scalar(1), Scalar(0)}, p.y);
    push_equality(out.hs_, {Scalar(0), Scalar(0), Scalar(1)}, p.z);
    return out;
  }

  Point3 d = pts[1] - pts[0];
  bool collinear = true;
  for (size_t i = 2; i < pts.size() && collinear; ++i) {
    Point3 cr = cross3(d, pts[i] - pts[0]);
    if (!(cr.x.is_zero() && cr.y.is_zero() && cr.z.is_zero())) collinear = false;
  }
  if (collinear) {
    out.dim_ = 1;
    // extremes along the carrier direction
    const Point3* lo = &pts[0];
    const Point3* hi = &pts[0];
    Scalar tlo(0), thi(0);
    for (const auto& p : pts) {
      Scalar t = dot3(p - pts[0], d);
      if (t < tlo) { tlo = t; lo = &p; }
      if (t > thi) { thi = t; hi = &p; }
    }
    out.verts_ = {*lo, *hi};
    std::sort(out.verts_.begin(), out.verts_.end());
    Point3 n1 = cross3(d, axis_not_parallel(d));
    Point3 n2 = cross3(d, n1);
    push_equality(out.hs_, n1, dot3(n1, pts[0]));
    push_equality(out.hs_, n2, dot3(n2, pts[0]));
    out.hs_.push_back(Plane3(d.x, d.y, d.z, dot3(d, *hi)));
    out.hs_.push_back(Plane3(-d.x, -d.y, -d.z, -dot3(d, *lo)));
    return out;
  }

  Point3 nrm;
  bool coplanar = true;
  {
    // first non-collinear witness fixes the candidate carrier plane
    size_t w = 2;
    while (true) {
      nrm = cross3(d, pts[w] - pts[0]);
      if (!(nrm.x.is_zero() && nrm.y.is_zero() && nrm.z.is_zero())) break;
      ++w;
    }
    for (size_t i = 2; i < pts.size() && coplanar; ++i)
      if (!dot3(nrm, pts[i] - pts[0]).is_zero()) coplanar = false;
  }

  if (coplanar) {
    out.dim_ = 2;
    // project out the dominant normal axis; the axis map is injective here
    int drop = !nrm.x.is_zero() ? 0 : (!nrm.y.is_zero() ? 1 : 2);
    auto flat = [&](const Point3& p) -> Point2 {
      if (drop == 0) return {p.y, p.z};
      if (drop == 1) return {p.x, p.z};
      return {p.x, p.y};
    };
    std::map<Point2, Point3> lift;
    std::vector<Point2> flats;
    for (const auto& p : pts) {
      Point2 f = flat(p);
      lift.emplace(f, p);
      flats.push_back(f);
    }
    ConvexPoly2 hull2 = ConvexPoly2::hull_of(flats);
    for (const auto& f : hull2.vertices()) out.verts_.push_back(lift.at(f));
    // carrier plane + one side plane per hull edge
    push_equality(out.hs_, nrm, dot3(nrm, pts[0]));
    const auto& vr = out.verts_;
    for (size_t i = 0; i < vr.size(); ++i) {
      const Point3& a = vr[i];
      const Point3& b = vr[(i + 1) % vr.size()];
      Point3 m = cross3(b - a, nrm);
      Scalar dd = dot3(m, a);
      // orient inward: every vertex on the non-positive side
      bool flip = false;
      for (const auto& v : vr)
        if ((dot3(m, v) - dd).sign() > 0) { flip = true; break; }
      if (flip) out.hs_.push_back(Plane3(-m.x, -m.y, -m.z, -dd));
      else out.hs_.push_back(Plane3(m.x, m.y, m.z, dd));
    }
    std::sort(out.verts_.begin(), out.verts_.end());
    return out;
  }

  out.dim_ = 3;
  const int n = static_cast<int>(pts.size());
  std::set<Plane3> facets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Point3 fn = cross3(pts[j] - pts[i], pts[k] - pts[i]);
        if (fn.x.is_zero() && fn.y.is_zero() && fn.z.is_zero()) continue;
        Scalar fd = dot3(fn, pts[i]);
        int lo = 0, hi = 0;
        for (const auto& p : pts) {
          int s = (dot3(fn, p) - fd).sign();
          lo = std::min(lo, s);
          hi = std::max(hi, s);
          if (lo < 0 && hi > 0) break;
        }
        if (lo < 0 && hi > 0) continue;
        if (hi > 0) facets.insert(Plane3(-fn.x, -fn.y, -fn.z, -fd));
        else facets.insert(Plane3(fn.x, fn.y, fn.z, fd));
      }
  out.hs_.assign(facets.begin(), facets.end());

  for (const auto& p : pts) {
    std::vector<Point3> tight;
    for (const auto& f : out.hs_)
      if (f.eval(p).is_zero()) tight.push_back(f.normal());
    if (tight.size() < 3) continue;
    bool spans = false;
    for (size_t a = 0; a < tight.size() && !spans; ++a)
      for (size_t b = a + 1; b < tight.size() && !spans; ++b)
        for (size_t c = b + 1; c < tight.size() && !spans; ++c)
          if (!det3(tight[a], tight[b], tight[c]).is_zero()) spans = true;
    if (spans) out.verts_.push_back(p);
  }
  std::sort(out.verts_.begin(), out.verts_.end());
  return out;
}

bool Polytope3::contains(const Point3& p) const {
  for (const auto& h : hs_)
    if (h.eval(p).sign() > 0) return false;
  return true;
}

ConvexPoly2 Polytope3::shadow() const {
  std::vector<Point2> pts;
  pts.reserve(verts_.size());
  for (const auto& v : verts_) pts.push_back(project(v));
  return ConvexPoly2::hull_of(std::move(pts));
}

std::vector<Point3> halfspace_vertices(const std::vector<Plane3>& hs) {
  const int m = static_cast<int>(hs.size());
  std::vector<Point3> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const Point3 a = hs[i].normal(), b = hs[j].normal(), c = hs[k].normal();
        Scalar det = det3(a, b, c);
        if (det.is_zero()) continue;
        // Cramer on n_i · x = d_i
        Point3 col_d{hs[i].d(), hs[j].d(), hs[k].d()};
        Point3 rx{a.x, b.x, c.x}, ry{a.y, b.y, c.y}, rz{a.z, b.z, c.z};
        Scalar x = det3(col_d, ry, rz) / det;
        Scalar y = det3(rx, col_d, rz) / det;
        Scalar z = det3(rx, ry, col_d) / det;
        Point3 p{x, y, z};
        bool ok = true;
        for (const auto& h : hs)
          if (h.eval(p).sign() > 0) { ok = false; break; }
        if (ok) out.push_back(p);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Point3> polytope_common_point(const Polytope3& A, const Polytope3& B) {
  for (const auto& v : A.vertices())
    if (B.contains(v)) return v;
  for (const auto& v : B.vertices())
    if (A.contains(v)) return v;
  auto lens = poly_intersect2(A.shadow(), B.shadow());
  if (!lens) return std::nullopt;
  std::vector<Point2> anchors = lens->vertices();
  anchors.push_back(lens->centroid());
  for (const auto& w : anchors) {
    auto fa = clip_vertical3(A, w.x, w.y);
    auto fb = clip_vertical3(B, w.x, w.y);
    if (!fa || !fb) continue;
    Scalar lo = max(fa->first, fb->first);
    Scalar hi = min(fa->second, fb->second);
    if (lo <= hi) return Point3{w.x, w.y, (lo + hi) / Scalar(2)};
  }
  std::vector<Plane3> hs = A.halfspaces();
  hs.insert(hs.end(), B.halfspaces().begin(), B.halfspaces().end());
  auto verts = halfspace_vertices(hs);
  if (verts.empty()) return std::nullopt;
  return verts.front();
}

std::optional<std::pair<Scalar, Scalar>> clip_line3(const Polytope3& K, const Line3& l) {
  bool has_lo = false, has_hi = false;
  Scalar lo(0), hi(0);
  for (const auto& h : K.halfspaces()) {
    Scalar alpha = dot3(h.normal(), l.dir());
    Scalar beta = h.eval(l.base());  // constraint: beta + alpha t <= 0
    if (alpha.is_zero()) {
      if (beta.sign() > 0) return std::nullopt;
      continue;
    }
    Scalar bound = -beta / alpha;
    if (alpha.sign() > 0) {
      if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
    } else {
      if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
    }
  }
  if (!has_lo || !has_hi || lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::optional<std::pair<Scalar, Scalar>> clip_vertical3(const Polytope3& K,
                                                        const Scalar& x, const Scalar& y) {
  bool has_lo = false, has_hi = false;
  Scalar lo(0), hi(0);
  for (const auto& h : K.halfspaces()) {
    Scalar alpha = h.c();
    Scalar beta = h.a() * x + h.b() * y - h.d();
    if (alpha.is_zero()) {
      if (beta.sign() > 0) return std::nullopt;
      continue;
    }
    Scalar bound = -beta / alpha;
    if (alpha.sign() > 0) {
      if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
    } else {
      if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
    }
  }
  if (!has_lo || !has_hi || lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::vector<Plane3> prism_halfspaces(const ConvexPoly2& base) {
  std::vector<Plane3> hs;
  switch (base.dim()) {
    case 0: {
      const Point2& p = base.vertices()[0];
      push_equality(hs, {Scalar(1), Scalar(0), Scalar(0)}, p.x);
      push_equality(hs, {Scalar(0), Scalar(1), Scalar(0)}, p.y);
      break;
    }
    case 1: {
      const Point2& u = base.vertices()[0];
      const Point2& v = base.vertices()[1];
      Point2 dir = v - u;
      Point3 n{-(dir.y), dir.x, Scalar(0)};
      push_equality(hs, n, n.x * u.x + n.y * u.y);
      hs.push_back(Plane3(dir.x, dir.y, Scalar(0), dir.x * v.x + dir.y * v.y));
      hs.push_back(Plane3(-dir.x, -dir.y, Scalar(0), -(dir.x * u.x + dir.y * u.y)));
      break;
    }
    default:
      for (int i = 0; i < base.edge_count(); ++i) {
        auto [u, v] = base.edge(i);
        // inside = left of the CCW edge: cross(v-u, p-u) >= 0
        Scalar a = v.y - u.y, b = -(v.x - u.x);
        hs.push_back(Plane3(a, b, Scalar(0), a * u.x + b * u.y));
      }
  }
  return hs;
}

JoinPieces join_pieces(const Polytope3& A, const Polytope3& B) {
  JoinPieces out;
  auto restrict_over = [](const Polytope3& K, const ConvexPoly2& shadow) {
    std::vector<Plane3> hs = K.halfspaces();
    auto prism = prism_halfspaces(shadow);
    hs.insert(hs.end(), prism.begin(), prism.end());
    return halfspace_vertices(hs);
  };
  out.in_a = restrict_over(A, B.shadow());
  out.in_b = restrict_over(B, A.shadow());
  return out;
}

std::optional<Polytope3> vertical_join(const Polytope3& A, const Polytope3& B) {
  JoinPieces p = join_pieces(A, B);
  if (p.empty()) return std::nullopt;
  std::vector<Point3> all = p.in_a;
  all.insert(all.end(), p.in_b.begin(), p.in_b.end());
  return Polytope3::hull_of(std::move(all));
}

bool separates_sets(const Plane3& h, const JoinPieces& pieces) {
  if (pieces.empty()) return false;
  int lo = 2, hi = -2;
  for (const auto* side : {&pieces.in_a, &pieces.in_b})
    for (const auto& p : *side) {
      int s = h.eval(p).sign();
      lo = std::min(lo, s);
      hi = std::max(hi, s);
      if (lo <= 0 && hi >= 0) return true;
    }
  return lo <= 0 && hi >= 0;
}

bool separates_sets(const Plane3& h, const Polytope3& A, const Polytope3& B) {
  return separates_sets(h, join_pieces(A, B));
}

std::optional<VerticalSegment> vertical_segment_witness(const Plane3& h, const Polytope3& A,
                                                        const Polytope3& B) {
  JoinPieces pieces = join_pieces(A, B);
  if (pieces.empty()) return std::nullopt;

  auto extremes = [&](const std::vector<Point3>& pts) {
    std::pair<const Point3*, const Point3*> arg{&pts[0], &pts[0]};
    Scalar mn = h.eval(pts[0]), mx = mn;
    for (const auto& p : pts) {
      Scalar v = h.eval(p);
      if (v < mn) { mn = v; arg.first = &p; }
      if (v > mx) { mx = v; arg.second = &p; }
    }
    return std::make_tuple(mn, mx, arg.first, arg.second);
  };
  auto [mn_a, mx_a, lo_a, hi_a] = extremes(pieces.in_a);
  auto [mn_b, mx_b, lo_b, hi_b] = extremes(pieces.in_b);
  if ((mn_a.sign() > 0 && mn_b.sign() > 0) || (mx_a.sign() < 0 && mx_b.sign() < 0))
    return std::nullopt;

  auto fiber_point = [](const Polytope3& K, const Point2& xy) -> Point3 {
    auto z = clip_vertical3(K, xy.x, xy.y);
    if (!z)
      throw Error(ErrorCode::VerifyFailed, "vertical fiber unexpectedly empty");
    return {xy.x, xy.y, z->first};
  };
  auto finish = [&](const Point3& a, const Point3& b) -> VerticalSegment {
    if (!(project(a) == project(b)) || !A.contains(a) || !B.contains(b) ||
        h.eval(a).sign() * h.eval(b).sign() > 0)
      throw Error(ErrorCode::VerifyFailed, "witness segment failed its recheck");
    return VerticalSegment{a, b};
  };

  if (mn_a.sign() <= 0 && mx_a.sign() >= 0) {
    // H crosses the A-side piece: take the zero of H on a segment inside it
    Point3 m = *lo_a;
    if (!mn_a.is_zero() || !mx_a.is_zero()) {
      if (h.eval(*lo_a).is_zero()) m = *lo_a;
      else if (h.eval(*hi_a).is_zero()) m = *hi_a;
      else {
        Scalar t = -mn_a / (mx_a - mn_a);
        m = *lo_a + t * (*hi_a - *lo_a);
      }
    }
    return finish(m, fiber_point(B, project(m)));
  }
  if (mn_b.sign() <= 0 && mx_b.sign() >= 0) {
    Point3 m = *lo_b;
    if (!mn_b.is_zero() || !mx_b.is_zero()) {
      if (h.eval(*lo_b).is_zero()) m = *lo_b;
      else if (h.eval(*hi_b).is_zero()) m = *hi_b;
      else {
        Scalar t = -mn_b / (mx_b - mn_b);
        m = *lo_b + t * (*hi_b - *lo_b);
      }
    }
    return finish(fiber_point(A, project(m)), m);
  }
  // strictly opposite sides: every vertical segment over the common shadow works
  const Point3& u = pieces.in_a.front();
  return finish(u, fiber_point(B, project(u)));
}

TangentLines2 common_tangent_lines2(const ConvexPoly2& P, const ConvexPoly2& Q) {
  if (P.dim() != 2 || Q.dim() != 2)
    throw Error(ErrorCode::Degenerate, "tangent enumeration needs full-dimensional polygons");
  if (poly_intersect2(P, Q))
    throw Error(ErrorCode::NotGood, "polygons intersect");

  std::map<std::array<Scalar, 3>, std::array<Scalar, 3>> seen;
  TangentLines2 out;
  for (const auto& p : P.vertices())
    for (const auto& q : Q.vertices()) {
      Point2 d = q - p;
      Scalar a = -d.y, b = d.x;
      Scalar c = a * p.x + b * p.y;
      auto nv = normalize_integer_vector({a, b, c}, /*lex_positive=*/true);
      std::array<Scalar, 3> key{nv[0], nv[1], nv[2]};
      if (seen.count(key)) continue;
      seen[key] = key;

      auto tangency = [&](const ConvexPoly2& K, int* on_count) {
        int lo = 0, hi = 0, on = 0;
        for (const auto& v : K.vertices()) {
          int s = (key[0] * v.x + key[1] * v.y - key[2]).sign();
          lo = std::min(lo, s);
          hi = std::max(hi, s);
          if (s == 0) ++on;
        }
        *on_count = on;
        return on >= 1 && !(lo < 0 && hi > 0);
      };
      int on_p = 0, on_q = 0;
      if (!tangency(P, &on_p) || !tangency(Q, &on_q)) continue;
      if (on_p >= 2 || on_q >= 2) out.nongeneric = true;
      out.lines.push_back(OrientedLine2{key[0], key[1], key[2]});
      out.lines.push_back(OrientedLine2{-key[0], -key[1], -key[2]});
    }
  return out;
}

namespace {

// barycentric solve: x = sum lambda_t w_t with lambda >= 0 summing to 1
std::optional<std::vector<Scalar>> convex_coeffs(const Point3& x,
                                                 const std::vector<Point3>& w) {
  const int k = static_cast<int>(w.size());
  if (k == 1) {
    if (x == w[0]) return std::vector<Scalar>{Scalar(1)};
    return std::nullopt;
  }
  if (k == 2) {
    Point3 d = w[1] - w[0];
    Scalar dd = dot3(d, d);
    if (dd.is_zero()) return std::nullopt;
    Scalar t = dot3(x - w[0], d) / dd;
    if (t < Scalar(0) || t > Scalar(1)) return std::nullopt;
    if (!(w[0] + t * d == x)) return std::nullopt;
    return std::vector<Scalar>{Scalar(1) - t, t};
  }
  if (k == 3) {
    Point3 u = w[1] - w[0], v = w[2] - w[0], r = x - w[0];
    // solve r = s u + t v within the plane spanned by u, v
    Scalar uu = dot3(u, u), uv = dot3(u, v), vv = dot3(v, v);
    Scalar ru = dot3(r, u), rv = dot3(r, v);
    Scalar det = uu * vv - uv * uv;
    if (det.is_zero()) return std::nullopt;
    Scalar s = (ru * vv - rv * uv) / det;
    Scalar t = (uu * rv - uv * ru) / det;
    if (s < Scalar(0) || t < Scalar(0) || s + t > Scalar(1)) return std::nullopt;
    if (!(w[0] + s * u + t * v == x)) return std::nullopt;
    return std::vector<Scalar>{Scalar(1) - s - t, s, t};
  }
  // k == 4: full-dimensional barycentric coordinates
  Point3 u = w[1] - w[0], v = w[2] - w[0], z = w[3] - w[0], r = x - w[0];
  Scalar det = det3(u, v, z);
  if (det.is_zero()) return std::nullopt;
  Scalar s = det3(r, v, z) / det;
  Scalar t = det3(u, r, z) / det;
  Scalar q = det3(u, v, r) / det;
  if (s < Scalar(0) || t < Scalar(0) || q < Scalar(0) || s + t + q > Scalar(1))
    return std::nullopt;
  return std::vector<Scalar>{Scalar(1) - s - t - q, s, t, q};
}

bool line_crosses_all(const Line3& l, const Polytope3& a, const Polytope3& b,
                      const Polytope3& c) {
  return clip_line3(a, l) && clip_line3(b, l) && clip_line3(c, l);
}

}  // namespace

GoodFamilyCert is_good_family3(const Polytope3& C1, const Polytope3& C2, const Polytope3& C3) {
  const Polytope3* fam[3] = {&C1, &C2, &C3};
  for (const auto* c : fam)
    if (c->dim() != 3)
      throw Error(ErrorCode::Degenerate, "good-family test needs full-dimensional polytopes");

  GoodFamilyCert cert;
  for (int mid = 0; mid < 3; ++mid) {
    const Polytope3& M = *fam[mid];
    const Polytope3& O1 = *fam[(mid + 1) % 3];
    const Polytope3& O2 = *fam[(mid + 2) % 3];
    std::vector<Point3> union_pts = O1.vertices();
    union_pts.insert(union_pts.end(), O2.vertices().begin(), O2.vertices().end());
    Polytope3 hull = Polytope3::hull_of(union_pts);

    std::vector<Plane3> hs = M.halfspaces();
    hs.insert(hs.end(), hull.halfspaces().begin(), hull.halfspaces().end());
    std::vector<Point3> meet = halfspace_vertices(hs);
    if (meet.empty()) continue;
    const Point3& x2 = meet.front();  // lex-min: deterministic

    // cheap pass: a line through x2 and a vertex of the other two sets
    for (const auto* other : {&O1, &O2})
      for (const auto& w : other->vertices()) {
        if (w == x2 || project(w) == project(x2)) continue;
        Line3 l = Line3::through(w, x2);
        if (line_crosses_all(l, C1, C2, C3)) {
          cert.witness = l;
          return cert;
        }
      }

    // Caratheodory: x2 = convex combination of vertices of O1 ∪ O2, split
    // into one point per side; the line through the two points crosses all
    std::vector<std::pair<Point3, int>> w;  // (vertex, side)
    for (const auto& v : O1.vertices()) w.push_back({v, 0});
    for (const auto& v : O2.vertices()) w.push_back({v, 1});
    const int W = static_cast<int>(w.size());
    std::vector<std::vector<int>> subsets;
    for (int a = 0; a < W; ++a) {
      subsets.push_back({a});
      for (int b = a + 1; b < W; ++b) {
        subsets.push_back({a, b});
        for (int c = b + 1; c < W; ++c) {
          subsets.push_back({a, b, c});
          for (int d = c + 1; d < W; ++d) subsets.push_back({a, b, c, d});
        }
      }
    }
    std::optional<VLine3> vertical;
    for (const auto& sub : subsets) {
      std::vector<Point3> pts;
      for (int t : sub) pts.push_back(w[t].first);
      auto lam = convex_coeffs(x2, pts);
      if (!lam) continue;
      Scalar wa(0), wb(0);
      Point3 pa{Scalar(0), Scalar(0), Scalar(0)}, pb = pa;
      for (size_t t = 0; t < sub.size(); ++t) {
        if ((*lam)[t].is_zero()) continue;
        if (w[sub[t]].second == 0) { wa += (*lam)[t]; pa = pa + (*lam)[t] * w[sub[t]].first; }
        else { wb += (*lam)[t]; pb = pb + (*lam)[t] * w[sub[t]].first; }
      }
      Point3 a, b;
      if (wa.is_zero()) {  // x2 lies in O2 itself; aim at any point of O1
        a = O1.vertices().front();
        b = x2;
      } else if (wb.is_zero()) {
        a = x2;
        b = O2.vertices().front();
      } else {
        a = (Scalar(1) / wa) * pa;
        b = (Scalar(1) / wb) * pb;
      }
      if (a == b) {  // the whole mass sits on x2: any line through it works
        a = x2;
        for (const auto& v : O1.vertices())
          if (!(project(v) == project(x2))) { b = v; break; }
      }
      if (project(a) == project(b)) {
        vertical = VLine3{a.x, a.y};
        continue;
      }
      Line3 l = Line3::through(a, b);
      if (line_crosses_all(l, C1, C2, C3)) {
        cert.witness = l;
        return cert;
      }
    }
    if (vertical) {
      cert.vertical_witness_xy = Point2{vertical->x, vertical->y};
      return cert;
    }
    throw Error(ErrorCode::VerifyFailed, "transversal exists but no witness was constructed");
  }
  cert.good = true;
  return cert;
}

TangentPlanes3 common_tangent_planes3(const Polytope3& C1, const Polytope3& C2,
                                      const Polytope3& C3) {
  GoodFamilyCert cert = is_good_family3(C1, C2, C3);
  if (!cert.good) throw Error(ErrorCode::NotGood, "family is crossed by a line");

  const Polytope3* fam[3] = {&C1, &C2, &C3};
  std::set<std::array<Scalar, 4>> seen;
  TangentPlanes3 out;
  for (const auto& v1 : C1.vertices())
    for (const auto& v2 : C2.vertices())
      for (const auto& v3 : C3.vertices()) {
        Point3 n = cross3(v2 - v1, v3 - v1);
        if (n.x.is_zero() && n.y.is_zero() && n.z.is_zero()) continue;
        Plane3 h = Plane3::from_point_normal(v1, n);
        auto key = h.unoriented_key();
        if (!seen.insert(key).second) continue;
        Plane3 canon(key[0], key[1], key[2], key[3]);

        bool tangent = true, nongeneric_here = false;
        for (const auto* K : fam) {
          int lo = 0, hi = 0, on = 0;
          for (const auto& v : K->vertices()) {
            int s = canon.eval(v).sign();
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            if (s == 0) ++on;
          }
          if (on < 1 || (lo < 0 && hi > 0)) { tangent = false; break; }
          if (on >= 2) nongeneric_here = true;
        }
        if (!tangent) continue;
        if (nongeneric_here) out.nongeneric = true;
        out.planes.push_back(canon);
        out.planes.push_back(canon.flipped());
      }
  return out;
}

}  // namespace tlab
