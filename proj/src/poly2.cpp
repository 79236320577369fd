#include "tlab/poly2.hpp"

#include <algorithm>
#include <map>

#include "tlab/error.hpp"

namespace tlab {

namespace {

// rotate so the lexicographically smallest vertex comes first
void canonical_rotation(std::vector<Point2>& v) {
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
}

}  // namespace

ConvexPoly2 ConvexPoly2::hull_of(std::vector<Point2> pts) {
  if (pts.empty()) throw Error(ErrorCode::BadInput, "empty point set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  ConvexPoly2 out;
  if (pts.size() == 1) {
    out.verts_ = pts;
    return out;
  }
  bool all_collinear = true;
  for (size_t i = 2; i < pts.size(); ++i)
    if (orient2(pts[0], pts[1], pts[i]) != Orient::Collinear) {
      all_collinear = false;
      break;
    }
  if (all_collinear) {
    // lexicographic order is the order along the carrier line
    out.verts_ = {pts.front(), pts.back()};
    return out;
  }

  // Andrew monotone chain with strict turns: collinear points dropped
  std::vector<Point2> h;
  h.reserve(pts.size() + 1);
  for (const auto& p : pts) {  // lower hull
    while (h.size() >= 2 && orient2(h[h.size() - 2], h[h.size() - 1], p) != Orient::CCW)
      h.pop_back();
    h.push_back(p);
  }
  size_t lower = h.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper hull
    while (h.size() >= lower && orient2(h[h.size() - 2], h[h.size() - 1], *it) != Orient::CCW)
      h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();  // first point repeated
  canonical_rotation(h);
  out.verts_ = std::move(h);
  return out;
}

ConvexPoly2 ConvexPoly2::from_vertices(const std::vector<Point2>& pts) {
  ConvexPoly2 h = hull_of(pts);
  std::vector<Point2> dedup = pts;
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  if (dedup.size() != h.verts_.size())
    throw Error(ErrorCode::BadInput, "vertex list is not in strictly convex position");
  return h;
}

int ConvexPoly2::dim() const {
  if (verts_.size() == 1) return 0;
  if (verts_.size() == 2) return 1;
  return 2;
}

int ConvexPoly2::edge_count() const {
  if (verts_.size() <= 1) return 0;
  if (verts_.size() == 2) return 1;
  return static_cast<int>(verts_.size());
}

std::pair<Point2, Point2> ConvexPoly2::edge(int i) const {
  return {verts_[i], verts_[(i + 1) % verts_.size()]};
}

bool point_on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orient2(a, b, p) != Orient::Collinear) return false;
  return dot2(p - a, b - a).sign() >= 0 && dot2(p - b, a - b).sign() >= 0;
}

bool ConvexPoly2::contains(const Point2& p) const {
  switch (dim()) {
    case 0: return p == verts_[0];
    case 1: return point_on_segment(p, verts_[0], verts_[1]);
    default:
      for (size_t i = 0; i < verts_.size(); ++i)
        if (orient2(verts_[i], verts_[(i + 1) % verts_.size()], p) == Orient::CW)
          return false;
      return true;
  }
}

bool ConvexPoly2::interior_contains(const Point2& p) const {
  if (dim() < 2) return false;
  for (size_t i = 0; i < verts_.size(); ++i)
    if (orient2(verts_[i], verts_[(i + 1) % verts_.size()], p) != Orient::CCW)
      return false;
  return true;
}

bool ConvexPoly2::relint_contains(const Point2& p) const {
  switch (dim()) {
    case 0: return p == verts_[0];
    case 1:
      if (orient2(verts_[0], verts_[1], p) != Orient::Collinear) return false;
      return dot2(p - verts_[0], verts_[1] - verts_[0]).sign() > 0 &&
             dot2(p - verts_[1], verts_[0] - verts_[1]).sign() > 0;
    default: return interior_contains(p);
  }
}

bool ConvexPoly2::on_boundary(const Point2& p) const {
  if (dim() < 2) return contains(p);
  return contains(p) && !interior_contains(p);
}

Scalar ConvexPoly2::min_x() const {
  Scalar m = verts_[0].x;
  for (const auto& v : verts_) m = min(m, v.x);
  return m;
}

Scalar ConvexPoly2::max_x() const {
  Scalar m = verts_[0].x;
  for (const auto& v : verts_) m = max(m, v.x);
  return m;
}

Point2 ConvexPoly2::centroid() const {
  Scalar sx(0), sy(0);
  for (const auto& v : verts_) { sx += v.x; sy += v.y; }
  Scalar n(static_cast<long long>(verts_.size()));
  return {sx / n, sy / n};
}

std::vector<Point2> seg_intersect(const Point2& a, const Point2& b,
                                  const Point2& c, const Point2& d) {
  // degenerate operands
  if (a == b && c == d) {
    if (a == c) return {a};
    return {};
  }
  if (a == b) return point_on_segment(a, c, d) ? std::vector<Point2>{a} : std::vector<Point2>{};
  if (c == d) return point_on_segment(c, a, b) ? std::vector<Point2>{c} : std::vector<Point2>{};

  Point2 r = b - a, s = d - c;
  Scalar denom = cross2(r, s);
  if (denom.is_zero()) {
    if (orient2(a, b, c) != Orient::Collinear) return {};
    // collinear overlap: order the four points along the carrier line
    auto key = [&](const Point2& p) { return dot2(p - a, r); };
    Scalar lo1(0), hi1 = dot2(r, r);
    Scalar lo2 = key(c), hi2 = key(d);
    if (lo2 > hi2) std::swap(lo2, hi2);
    Scalar lo = max(lo1, lo2), hi = min(hi1, hi2);
    if (lo > hi) return {};
    Scalar rr = dot2(r, r);
    Point2 p1 = a + (lo / rr) * r;
    Point2 p2 = a + (hi / rr) * r;
    if (p1 == p2) return {p1};
    return {p1, p2};
  }
  Scalar t = cross2(c - a, s) / denom;
  Scalar u = cross2(c - a, r) / denom;
  if (t < Scalar(0) || t > Scalar(1) || u < Scalar(0) || u > Scalar(1)) return {};
  return {a + t * r};
}

bool segments_meet(const Segment2& s, const Segment2& t) {
  return !seg_intersect(s.a, s.b, t.a, t.b).empty();
}

std::optional<ConvexPoly2> poly_intersect2(const ConvexPoly2& P, const ConvexPoly2& Q) {
  std::vector<Point2> cand;
  for (const auto& v : P.vertices())
    if (Q.contains(v)) cand.push_back(v);
  for (const auto& v : Q.vertices())
    if (P.contains(v)) cand.push_back(v);
  for (int i = 0; i < P.edge_count(); ++i) {
    auto [a, b] = P.edge(i);
    for (int j = 0; j < Q.edge_count(); ++j) {
      auto [c, d] = Q.edge(j);
      for (auto& p : seg_intersect(a, b, c, d)) cand.push_back(p);
    }
  }
  if (cand.empty()) return std::nullopt;
  return ConvexPoly2::hull_of(std::move(cand));
}

std::optional<Segment2> clip_line2(const ConvexPoly2& K, const Line2& l) {
  auto at = [&](const Scalar& t) { return Point2{t, l.y_at(t)}; };
  switch (K.dim()) {
    case 0: {
      const Point2& v = K.vertices()[0];
      if (side_of_line(v, l) == Side::On) return Segment2{v, v};
      return std::nullopt;
    }
    case 1: {
      const Point2& u = K.vertices()[0];
      const Point2& v = K.vertices()[1];
      Scalar fu = u.y - l.y_at(u.x), fv = v.y - l.y_at(v.x);
      if (fu.is_zero() && fv.is_zero()) return Segment2{u, v};
      if ((fu.sign() > 0 && fv.sign() > 0) || (fu.sign() < 0 && fv.sign() < 0)) return std::nullopt;
      Scalar t = fu / (fu - fv);
      Point2 p = u + t * (v - u);
      return Segment2{p, p};
    }
    default: {
      bool has_lo = false, has_hi = false;
      Scalar lo(0), hi(0);
      for (int i = 0; i < K.edge_count(); ++i) {
        auto [u, v] = K.edge(i);
        Scalar dvx = v.x - u.x, dvy = v.y - u.y;
        Scalar alpha = dvx * l.slope - dvy;
        Scalar beta = dvx * (l.intercept - u.y) + dvy * u.x;
        // inside: alpha * t + beta >= 0
        if (alpha.is_zero()) {
          if (beta.sign() < 0) return std::nullopt;
          continue;
        }
        Scalar bound = -beta / alpha;
        if (alpha.sign() > 0) {
          if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
        } else {
          if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
        }
      }
      if (!has_lo || !has_hi || lo > hi) return std::nullopt;
      return Segment2{at(lo), at(hi)};
    }
  }
}

std::optional<std::pair<Scalar, Scalar>> clip_vline2(const ConvexPoly2& K, const Scalar& x0) {
  switch (K.dim()) {
    case 0: {
      const Point2& v = K.vertices()[0];
      if (v.x == x0) return std::make_pair(v.y, v.y);
      return std::nullopt;
    }
    case 1: {
      const Point2& u = K.vertices()[0];
      const Point2& v = K.vertices()[1];
      if (u.x == v.x) {
        if (u.x != x0) return std::nullopt;
        return std::make_pair(min(u.y, v.y), max(u.y, v.y));
      }
      if ((x0 < min(u.x, v.x)) || (x0 > max(u.x, v.x))) return std::nullopt;
      Scalar t = (x0 - u.x) / (v.x - u.x);
      Scalar y = u.y + t * (v.y - u.y);
      return std::make_pair(y, y);
    }
    default: {
      bool has_lo = false, has_hi = false;
      Scalar lo(0), hi(0);
      for (int i = 0; i < K.edge_count(); ++i) {
        auto [u, v] = K.edge(i);
        // inside: cross(v-u, p-u) >= 0 with p = (x0, y)
        Scalar alpha = v.x - u.x;  // coefficient of y
        Scalar beta = -(v.y - u.y) * (x0 - u.x) - alpha * u.y;
        if (alpha.is_zero()) {
          if (beta.sign() < 0) return std::nullopt;
          continue;
        }
        Scalar bound = -beta / alpha;
        if (alpha.sign() > 0) {
          if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
        } else {
          if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
        }
      }
      if (!has_lo || !has_hi || lo > hi) return std::nullopt;
      return std::make_pair(lo, hi);
    }
  }
}

bool segment_meets_poly(const Point2& a, const Point2& b, const ConvexPoly2& K) {
  if (K.contains(a) || K.contains(b)) return true;
  for (int i = 0; i < K.edge_count(); ++i) {
    auto [u, v] = K.edge(i);
    if (!seg_intersect(a, b, u, v).empty()) return true;
  }
  return false;
}

FamilyClass2 family_class2(const std::vector<ConvexPoly2>& F) {
  const int n = static_cast<int>(F.size());
  if (n < 2) throw Error(ErrorCode::BadInput, "family_class2 requires at least 2 sets");
  std::map<std::pair<int, int>, std::optional<ConvexPoly2>> pair_cache;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto I = poly_intersect2(F[i], F[j]);
      if (!I) return FamilyClass2::NotPairwise;
      pair_cache[{i, j}] = std::move(I);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (poly_intersect2(*pair_cache[{i, j}], F[k])) return FamilyClass2::HasTriple;
  return FamilyClass2::Strict2;
}

namespace {

struct TripleInters {
  // I[t] is the pairwise intersection omitting role t:
  // I[0] = K2∩K3, I[1] = K1∩K3, I[2] = K1∩K2
  std::array<ConvexPoly2, 3> I;
};

TripleInters strict2_intersections(const ConvexPoly2& K1, const ConvexPoly2& K2,
                                   const ConvexPoly2& K3) {
  auto i23 = poly_intersect2(K2, K3);
  auto i13 = poly_intersect2(K1, K3);
  auto i12 = poly_intersect2(K1, K2);
  if (!i23 || !i13 || !i12)
    throw Error(ErrorCode::NotStrict2, "triple is not pairwise intersecting");
  if (poly_intersect2(*i12, K3))
    throw Error(ErrorCode::NotStrict2, "triple has a common point");
  return TripleInters{{std::move(*i23), std::move(*i13), std::move(*i12)}};
}

}  // namespace

TripleAnalysis analyze_triple(const ConvexPoly2& K1, const ConvexPoly2& K2,
                              const ConvexPoly2& K3) {
  TripleInters ti = strict2_intersections(K1, K2, K3);
  return analyze_triple_cached(K3, ti.I[0], ti.I[1], ti.I[2]);
}

TripleAnalysis analyze_triple_cached(const ConvexPoly2& K3, const ConvexPoly2& i23,
                                     const ConvexPoly2& i13, const ConvexPoly2& i12) {
  if (poly_intersect2(i12, K3))
    throw Error(ErrorCode::NotStrict2, "triple has a common point");
  TripleInters ti{{i23, i13, i12}};
  TripleAnalysis out;
  out.w23 = ti.I[0].lex_min_vertex();
  out.w13 = ti.I[1].lex_min_vertex();
  out.w12 = ti.I[2].lex_min_vertex();

  // orientation of (w12, w23, w13); if the canonical witnesses are
  // collinear, scan all vertex combinations for a nondegenerate one
  Orient o = orient2(out.w12, out.w23, out.w13);
  if (o == Orient::Collinear) {
    for (const auto& a : ti.I[2].vertices())
      for (const auto& b : ti.I[0].vertices())
        for (const auto& c : ti.I[1].vertices()) {
          o = orient2(a, b, c);
          if (o != Orient::Collinear) goto found;
        }
  found:;
    if (o == Orient::Collinear)
      throw Error(ErrorCode::Degenerate, "all witness triples are collinear");
  }
  out.orientation = (o == Orient::CW) ? TriOrient::CW : TriOrient::CCW;

  std::array<Scalar, 3> lo, hi;
  for (int t = 0; t < 3; ++t) {
    lo[t] = ti.I[t].min_x();
    hi[t] = ti.I[t].max_x();
  }

  // pairwise disjoint x-ranges <=> no vertical line crosses two intersections
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lo[a] < lo[b]; });
  bool disjoint = hi[order[0]] < lo[order[1]] && hi[order[1]] < lo[order[2]];

  if (disjoint) {
    const ConvexPoly2& L = ti.I[order[0]];
    const ConvexPoly2& M = ti.I[order[1]];
    const ConvexPoly2& R = ti.I[order[2]];
    int sign = 0;  // -1 cap (middle above), +1 cup
    for (const auto& a : L.vertices())
      for (const auto& b : M.vertices())
        for (const auto& c : R.vertices()) {
          Orient w = orient2(a, b, c);
          if (w == Orient::Collinear)
            throw Error(ErrorCode::Degenerate, "collinear witness triple in cap/cup test");
          int s = static_cast<int>(w);
          if (sign == 0) sign = s;
          else if (sign != s)
            throw Error(ErrorCode::Degenerate, "witness triples disagree on cap/cup");
        }
    out.category = (sign < 0) ? TripleCat::Cap : TripleCat::Cup;
    // middle set = role missing from the middle intersection; A is missing
    // from the right intersection, B from the left one
    out.cap_roles = {order[2], order[1], order[0]};
    return out;
  }

  static const int pair_order[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pair_order) {
    int s = pr[0], t = pr[1];
    Scalar L = max(lo[s], lo[t]);
    Scalar H = min(hi[s], hi[t]);
    if (L > H) continue;
    int u = 3 - s - t;
    if (H < lo[u]) {
      out.category = TripleCat::VLeft;
    } else if (hi[u] < L) {
      out.category = TripleCat::VRight;
    } else {
      throw Error(ErrorCode::NotStrict2,
                  "a vertical line crosses all three pairwise intersections");
    }
    out.crossed_missing = {s, t};
    out.side_missing = u;
    out.vline_x = (L + H) / Scalar(2);
    return out;
  }
  throw Error(ErrorCode::Degenerate, "unclassifiable triple");  // unreachable
}

TriOrient triple_orientation(const ConvexPoly2& K1, const ConvexPoly2& K2,
                             const ConvexPoly2& K3) {
  return analyze_triple(K1, K2, K3).orientation;
}

TripleCat triple_category(const ConvexPoly2& K1, const ConvexPoly2& K2,
                          const ConvexPoly2& K3) {
  return analyze_triple(K1, K2, K3).category;
}

namespace {

// vertices of the pairwise intersection lying on both boundaries
std::vector<Point2> lens_tips(const ConvexPoly2& A, const ConvexPoly2& B,
                              const ConvexPoly2& lens) {
  std::vector<Point2> tips;
  for (const auto& v : lens.vertices())
    if (A.on_boundary(v) && B.on_boundary(v)) tips.push_back(v);
  if (tips.empty())
    throw Error(ErrorCode::Degenerate, "no boundary crossing between a lens pair");
  return tips;
}

bool in_closed_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
  Orient o = orient2(a, b, c);
  if (o == Orient::Collinear)
    return point_on_segment(p, a, b) || point_on_segment(p, b, c) || point_on_segment(p, a, c);
  const Point2 &u = (o == Orient::CCW) ? b : c, &w = (o == Orient::CCW) ? c : b;
  return orient2(a, u, p) != Orient::CW && orient2(u, w, p) != Orient::CW &&
         orient2(w, a, p) != Orient::CW;
}

// both walks along ∂K between two boundary points, corners included
std::array<std::vector<Point2>, 2> boundary_chains(const ConvexPoly2& K,
                                                   const Point2& from, const Point2& to) {
  if (K.dim() <= 1) {
    std::vector<Point2> chain{from, to};
    return {chain, chain};
  }
  // cycle of boundary points: polygon vertices with 'from'/'to' spliced in
  const auto& vs = K.vertices();
  const int n = static_cast<int>(vs.size());
  std::vector<Point2> cycle;
  for (int i = 0; i < n; ++i) {
    const Point2& u = vs[i];
    const Point2& v = vs[(i + 1) % n];
    cycle.push_back(u);
    std::vector<Point2> mids;
    for (const Point2* p : {&from, &to})
      if (*p != u && *p != v && point_on_segment(*p, u, v)) mids.push_back(*p);
    if (mids.size() == 2 && dot2(mids[1] - u, v - u) < dot2(mids[0] - u, v - u))
      std::swap(mids[0], mids[1]);
    for (auto& m : mids) cycle.push_back(m);
  }
  int fi = -1, ti = -1;
  for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
    if (cycle[i] == from && fi < 0) fi = i;
    if (cycle[i] == to && ti < 0) ti = i;
  }
  if (fi < 0 || ti < 0)
    throw Error(ErrorCode::Degenerate, "arc endpoint not on the boundary");
  const int m = static_cast<int>(cycle.size());
  std::vector<Point2> fwd, bwd;
  for (int i = fi;; i = (i + 1) % m) {
    fwd.push_back(cycle[i]);
    if (i == ti) break;
  }
  for (int i = fi;; i = (i - 1 + m) % m) {
    bwd.push_back(cycle[i]);
    if (i == ti) break;
  }
  return {fwd, bwd};
}

}  // namespace

HoleDescriptor hole_region(const ConvexPoly2& K1, const ConvexPoly2& K2,
                           const ConvexPoly2& K3) {
  TripleInters ti = strict2_intersections(K1, K2, K3);
  auto tips12 = lens_tips(K1, K2, ti.I[2]);
  auto tips23 = lens_tips(K2, K3, ti.I[0]);
  auto tips13 = lens_tips(K1, K3, ti.I[1]);

  // The hole's corner triangle is contained in the triangle of every witness
  // triple, so among tip combinations it has strictly minimal area; any
  // collinear combination forces a degenerate (flat) hole.
  HoleDescriptor out;
  bool have = false;
  Scalar best_area;
  for (const auto& a : tips12)
    for (const auto& b : tips23)
      for (const auto& c : tips13) {
        Scalar area2 = cross2(b - a, c - a).abs();
        if (area2.is_zero()) {
          out.v12 = a; out.v23 = b; out.v13 = c;
          out.degenerate = true;
          out.arc1 = {out.v12, out.v13};
          out.arc2 = {out.v12, out.v23};
          out.arc3 = {out.v23, out.v13};
          return out;
        }
        if (!have || area2 < best_area) {
          have = true;
          best_area = area2;
          out.v12 = a; out.v23 = b; out.v13 = c;
        }
      }

  auto pick_arc = [&](const ConvexPoly2& K, const ConvexPoly2& other1,
                      const ConvexPoly2& other2, const Point2& from, const Point2& to) {
    auto chains = boundary_chains(K, from, to);
    for (const auto& chain : {chains[0], chains[1]}) {
      bool ok = true;
      for (size_t i = 0; ok && i + 1 < chain.size(); ++i) {
        Point2 mid = Scalar(1, 2) * (chain[i] + chain[i + 1]);
        if (!in_closed_triangle(mid, out.v12, out.v23, out.v13) ||
            other1.contains(mid) || other2.contains(mid))
          ok = false;
      }
      if (ok) return chain;
    }
    throw Error(ErrorCode::Degenerate, "no boundary arc adjacent to the hole");
  };
  out.arc1 = pick_arc(K1, K2, K3, out.v12, out.v13);
  out.arc2 = pick_arc(K2, K1, K3, out.v12, out.v23);
  out.arc3 = pick_arc(K3, K1, K2, out.v23, out.v13);
  return out;
}

bool mutually_tangent(const ConvexPoly2& A, const ConvexPoly2& B) {
  auto I = poly_intersect2(A, B);
  if (!I) return false;  // disjoint sets are not tangent
  Point2 c = I->centroid();
  return !(A.relint_contains(c) && B.relint_contains(c));
}

namespace {

bool chain_meets_poly(const std::vector<Point2>& chain, const ConvexPoly2& K) {
  if (chain.size() == 1) return K.contains(chain[0]);
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (segment_meets_poly(chain[i], chain[i + 1], K)) return true;
  return false;
}

}  // namespace

Lemma4Result check_lemma_4sets(const ConvexPoly2& Ka, const ConvexPoly2& Kb,
                               const ConvexPoly2& Kc, const ConvexPoly2& Kd) {
  std::vector<ConvexPoly2> F{Ka, Kb, Kc, Kd};
  FamilyClass2 cls = family_class2(F);
  if (cls != FamilyClass2::Strict2)
    throw Error(ErrorCode::NotStrict2, "4-family is not strictly 2-intersecting");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (mutually_tangent(F[i], F[j]))
        throw Error(ErrorCode::TangentPair, "mutually tangent pair in 4-family");

  Lemma4Result res;
  res.kind = Lemma4Result::Kind::HypothesisFails;

  // Orientation hypothesis: some ordering of the four sets gives every
  // index-sorted triple the same orientation. Orientations are computed
  // once in argument order; reorderings act by triple parity only.
  int ref[4];  // +1 CCW / -1 CW per unordered triple, indexed by missing set
  try {
    ref[3] = triple_orientation(Ka, Kb, Kc) == TriOrient::CCW ? 1 : -1;
    ref[2] = triple_orientation(Ka, Kb, Kd) == TriOrient::CCW ? 1 : -1;
    ref[1] = triple_orientation(Ka, Kc, Kd) == TriOrient::CCW ? 1 : -1;
    ref[0] = triple_orientation(Kb, Kc, Kd) == TriOrient::CCW ? 1 : -1;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Degenerate) {
      res.reason = "orientation";
      return res;
    }
    throw;
  }
  bool orientable = false;
  {
    int perm[4] = {0, 1, 2, 3};
    std::sort(perm, perm + 4);
    do {
      int common = 0;
      bool ok = true;
      for (int missing = 0; missing < 4 && ok; ++missing) {
        // the triple omitting `missing`, listed in perm order
        int tri[3], k = 0;
        for (int p = 0; p < 4; ++p)
          if (perm[p] != missing) tri[k++] = perm[p];
        // parity of tri relative to ascending argument order
        int inversions = (tri[0] > tri[1]) + (tri[0] > tri[2]) + (tri[1] > tri[2]);
        int o = ref[missing] * ((inversions % 2) ? -1 : 1);
        if (missing == 0 && common == 0) common = o;
        if (common == 0) common = o;
        if (o != common) ok = false;
      }
      if (ok) orientable = true;
    } while (!orientable && std::next_permutation(perm, perm + 4));
  }
  if (!orientable) {
    res.reason = "orientation";
    return res;
  }

  HoleDescriptor hc = hole_region(Ka, Kb, Kc);
  HoleDescriptor hd = hole_region(Ka, Kb, Kd);
  if (hc.degenerate || hd.degenerate) {
    res.reason = "degenerate-hole";
    return res;
  }
  if (hc.v12 != hd.v12) {
    res.reason = "common-vertex";
    return res;
  }
  // with the shared corner v of ∂(Ka ∪ Kb), the two holes overlap in every
  // small neighborhood of v automatically: v lies in neither Kc nor Kd
  if (!chain_meets_poly(hc.arc3, Kd) && !chain_meets_poly(hd.arc3, Kc)) {
    res.reason = "no-cd-point-on-arc";
    return res;
  }

  res.vac = hc.v13;
  res.vbc = hc.v23;
  res.vad = hd.v13;
  res.vbd = hd.v23;
  bool crossing = !seg_intersect(res.vac, res.vbc, res.vad, res.vbd).empty();
  res.kind = crossing ? Lemma4Result::Kind::ConclusionHolds
                      : Lemma4Result::Kind::ConclusionViolated;
  res.reason.clear();
  return res;
}

ConvexPoly2 reflect_poly_y(const ConvexPoly2& K) {
  std::vector<Point2> v;
  v.reserve(K.vertices().size());
  for (const auto& p : K.vertices()) v.push_back({p.x, -p.y});
  return ConvexPoly2::hull_of(std::move(v));
}

ConvexPoly2 reflect_poly_x(const ConvexPoly2& K) {
  std::vector<Point2> v;
  v.reserve(K.vertices().size());
  for (const auto& p : K.vertices()) v.push_back({-p.x, p.y});
  return ConvexPoly2::hull_of(std::move(v));
}

}  // namespace tlab
