#include "tlab/lines3.hpp"

#include <algorithm>
#include <map>

#include "tlab/error.hpp"

namespace tlab {

LinePairFrame pair_frame(const Line3& l1, const Line3& l2) {
  const Point3 &p1 = l1.base(), &d1 = l1.dir();
  const Point3 &p2 = l2.base(), &d2 = l2.dir();
  // solve p1* + s d1* = p2* + t d2*
  Scalar det = d1.x * (-d2.y) - (-d2.x) * d1.y;  // = cross2(d2*, d1*)
  if (det.is_zero())
    throw Error(ErrorCode::ProjParallel, "projected directions are parallel");
  Scalar rx = p2.x - p1.x, ry = p2.y - p1.y;
  Scalar s = (rx * (-d2.y) - (-d2.x) * ry) / det;
  Scalar t = (d1.x * ry - rx * d1.y) / det;

  LinePairFrame f{l1, l2, {}, {}, {},
                  Plane3(Scalar(0), Scalar(0), Scalar(1), Scalar(0)),
                  Plane3(Scalar(0), Scalar(0), Scalar(1), Scalar(0)), PairRel::Meet};
  f.foot1 = l1.at(s);
  f.foot2 = l2.at(t);
  f.vline_xy = {f.foot1.x, f.foot1.y};

  Point3 n = cross3(d1, d2);
  if (n.z.sign() < 0) n = Scalar(-1) * n;  // positive side = above
  f.plane1 = Plane3::from_point_normal(f.foot1, n);
  f.plane2 = Plane3::from_point_normal(f.foot2, n);

  int cmp = (f.foot1.z - f.foot2.z).sign();
  f.relation = cmp > 0 ? PairRel::Above : (cmp < 0 ? PairRel::Below : PairRel::Meet);
  return f;
}

bool separates_lines(const Plane3& h, const LinePairFrame& f) {
  int s1 = h.eval(f.foot1).sign();
  int s2 = h.eval(f.foot2).sign();
  return s1 * s2 <= 0;
}

bool separates_lines(const Plane3& h, const Line3& l1, const Line3& l2) {
  return separates_lines(h, pair_frame(l1, l2));
}

MonotoneVerdict is_monotone(const std::vector<Line3>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 3) throw Error(ErrorCode::BadInput, "monotone check needs >= 3 lines");

  std::vector<Line2> proj;
  proj.reserve(seq.size());
  for (const auto& l : seq) proj.push_back(project_line(l));

  MonotoneVerdict v;

  // projected chain: locate the first violation for the witness
  bool dec = true, inc = true;
  for (int i = 0; i + 1 < n; ++i) {
    if (!(proj[i].slope > proj[i + 1].slope)) dec = false;
    if (!(proj[i].slope < proj[i + 1].slope)) inc = false;
  }
  if (!dec && !inc) {
    v.reason = "projected slopes are not monotone";
    for (int i = 0; i + 1 < n; ++i)
      if (proj[i].slope == proj[i + 1].slope)
        throw Error(ErrorCode::ProjParallel, "equal projected slopes");
    v.bad_i = 0;
    v.bad_j = 1;
    return v;
  }
  bool want_cap = dec;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto p = line2_intersect(proj[i], proj[k]);
        if (!p) throw Error(ErrorCode::ProjParallel, "parallel projected lines");
        Side s = side_of_line(*p, proj[j]);
        if (s == Side::On) throw Error(ErrorCode::Degenerate, "concurrent projected lines");
        if (s != (want_cap ? Side::Pos : Side::Neg)) {
          v.reason = "projected sequence is not a cap or cup";
          v.bad_i = i; v.bad_j = j; v.bad_k = k;
          return v;
        }
      }
  v.kind = want_cap ? ChainKind::Cap : ChainKind::Cup;

  // above/below chain over all pairs
  bool desc_ok = true, asc_ok = true;
  int first_desc_bad_i = -1, first_desc_bad_j = -1;
  int first_asc_bad_i = -1, first_asc_bad_j = -1;
  v.strict = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PairRel r = pair_frame(seq[i], seq[j]).relation;
      if (r == PairRel::Meet) v.strict = false;
      if (r == PairRel::Below && desc_ok) {
        desc_ok = false;
        first_desc_bad_i = i; first_desc_bad_j = j;
      }
      if (r == PairRel::Above && asc_ok) {
        asc_ok = false;
        first_asc_bad_i = i; first_asc_bad_j = j;
      }
    }
  if (!desc_ok && !asc_ok) {
    v.reason = "above/below order is not a chain";
    v.bad_i = desc_ok ? first_asc_bad_i : first_desc_bad_i;
    v.bad_j = desc_ok ? first_asc_bad_j : first_desc_bad_j;
    return v;
  }
  v.monotone = true;
  v.descending = desc_ok;
  return v;
}

namespace {

bool strictly_above_chain(const std::vector<Line3>& seq) {
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (pair_frame(seq[i], seq[j]).relation != PairRel::Above) return false;
  return true;
}

}  // namespace

TripleType3 classify_triple3(const Line3& li, const Line3& lj, const Line3& lk) {
  if (pair_frame(li, lj).relation != PairRel::Above ||
      pair_frame(lj, lk).relation != PairRel::Above ||
      pair_frame(li, lk).relation != PairRel::Above)
    throw Error(ErrorCode::PreViolated, "triple is not strictly descending");
  Line2 pi = project_line(li), pj = project_line(lj), pk = project_line(lk);
  if (!is_cap_lines({pi, pj, pk}))
    throw Error(ErrorCode::PreViolated, "projections do not form a 3-cap");

  LinePairFrame fik = pair_frame(li, lk);
  const Plane3& top = fik.plane1;     // contains li, parallel lk
  const Plane3& bottom = fik.plane2;  // contains lk, parallel li
  Scalar dn = dot3(lj.dir(), top.normal());
  if (dn.is_zero())
    throw Error(ErrorCode::Degenerate, "middle line parallel to the facet planes");

  TripleType3 types;
  types.t1 = side_of_plane(pair_frame(lj, li).foot1, pair_frame(lk, li).plane1) == Side::Neg;
  types.t2 = side_of_plane(pair_frame(lj, lk).foot1, pair_frame(li, lk).plane1) == Side::Pos;

  auto plane_param = [&](const Plane3& h) {
    return (h.d() - dot3(h.normal(), lj.base())) / dn;
  };
  auto in_wedge = [&](const Point3& p) {
    Point2 q = project(p);
    return side_of_line(q, pi) == Side::Neg && side_of_line(q, pk) == Side::Neg;
  };
  Scalar t_top = plane_param(top), t_bottom = plane_param(bottom);
  bool crossed_top = in_wedge(lj.at(t_top));
  bool crossed_bottom = in_wedge(lj.at(t_bottom));
  if (!crossed_top && !crossed_bottom) {
    // orient lj by increasing x of its projection
    bool top_first = lj.dir().x.sign() > 0 ? (t_top < t_bottom) : (t_top > t_bottom);
    if (t_top == t_bottom)
      throw Error(ErrorCode::Degenerate, "facet planes met at one parameter");
    types.t3 = top_first;
    types.t4 = !top_first;
  }
  return types;
}

std::optional<std::array<int, 4>> find_separating_quad(const std::vector<Line3>& seq) {
  MonotoneVerdict v = is_monotone(seq);
  if (!v.monotone || !v.descending || !strictly_above_chain(seq))
    throw Error(ErrorCode::PreViolated, "sequence is not strictly descending monotone");
  const int n = static_cast<int>(seq.size());

  std::map<std::pair<int, int>, LinePairFrame> frames;
  auto frame = [&](int a, int b) -> const LinePairFrame& {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = frames.find(key);
    if (it == frames.end())
      it = frames.emplace(key, pair_frame(seq[key.first], seq[key.second])).first;
    return it->second;
  };
  auto plane_of = [&](int k, int l) -> const Plane3& {
    const LinePairFrame& f = frame(k, l);
    return k < l ? f.plane1 : f.plane2;
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (int l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          if (separates_lines(plane_of(k, l), frame(i, j)))
            return std::array<int, 4>{i, j, k, l};
        }
      }
    }
  return std::nullopt;
}

SeparationSearch best_separating_plane(const std::vector<Line3>& lines, CandidateKind kind) {
  const int n = static_cast<int>(lines.size());
  if (n < 2) throw Error(ErrorCode::BadInput, "need at least two lines");

  std::vector<std::vector<const LinePairFrame*>> fr(n, std::vector<const LinePairFrame*>(n, nullptr));
  std::vector<LinePairFrame> storage;
  storage.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      storage.push_back(pair_frame(lines[i], lines[j]));
      if (storage.back().relation == PairRel::Meet)
        throw Error(ErrorCode::Degenerate,
                    "meeting pair " + std::to_string(i) + "," + std::to_string(j) +
                        " in separation search");
    }
  {
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        fr[i][j] = &storage[idx];
        fr[j][i] = &storage[idx];
        ++idx;
      }
  }

  std::map<std::array<Scalar, 4>, Plane3> candidates;
  auto add = [&](const Plane3& h) {
    auto key = h.unoriented_key();
    candidates.emplace(key, Plane3(key[0], key[1], key[2], key[3]));
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      add(fr[i][j]->plane1);
      add(fr[i][j]->plane2);
    }
  if (kind == CandidateKind::PiPlusVertexTriples) {
    std::vector<Point3> feet;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        feet.push_back(fr[i][j]->foot1);
        feet.push_back(fr[i][j]->foot2);
      }
    std::sort(feet.begin(), feet.end());
    feet.erase(std::unique(feet.begin(), feet.end()), feet.end());
    const int f = static_cast<int>(feet.size());
    for (int a = 0; a < f; ++a)
      for (int b = a + 1; b < f; ++b)
        for (int c = b + 1; c < f; ++c) {
          Point3 nrm = cross3(feet[b] - feet[a], feet[c] - feet[a]);
          if (nrm.x.is_zero() && nrm.y.is_zero() && nrm.z.is_zero()) continue;
          add(Plane3::from_point_normal(feet[a], nrm));
        }
  }

  SeparationSearch best;
  bool have = false;
  for (const auto& [key, h] : candidates) {
    int count = 0;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (separates_lines(h, *fr[i][j])) {
          ++count;
          pairs.push_back({i, j});
        }
    if (!have || count > best.count) {
      have = true;
      best.plane = h;
      best.count = count;
      best.pairs = std::move(pairs);
    }
  }
  return best;
}

namespace {

struct Rot { long long c_num, s_num, den; };  // cos = c/den, sin = s/den
const Rot kRotations[] = {
    {4, 3, 5}, {3, 4, 5}, {12, 5, 13}, {5, 12, 13},
    {15, 8, 17}, {8, 15, 17}, {24, 7, 25}, {7, 24, 25},
    {21, 20, 29}, {20, 21, 29}, {40, 9, 41}, {9, 40, 41},
};

}  // namespace

int rotation_count() { return static_cast<int>(sizeof(kRotations) / sizeof(kRotations[0])); }

Point3 rotate_point_xy(const Point3& p, int idx, bool inverse) {
  const Rot& r = kRotations[idx];
  Scalar c(r.c_num, r.den), s(r.s_num, r.den);
  if (inverse) s = -s;
  return {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
}

Line3 rotate_line_xy(const Line3& l, int idx, bool inverse) {
  return Line3(rotate_point_xy(l.base(), idx, inverse), rotate_point_xy(l.dir(), idx, inverse));
}

Plane3 rotate_plane_xy(const Plane3& h, int idx, bool inverse) {
  Point3 nrm = rotate_point_xy(h.normal(), idx, inverse);
  return Plane3(nrm.x, nrm.y, nrm.z, h.d());
}

GenericFrame make_projection_generic(const std::vector<Line3>& lines) {
  auto ok = [](const std::vector<Line3>& ls) {
    for (const auto& l : ls)
      if (l.dir().x.is_zero()) return false;
    return true;
  };
  GenericFrame g;
  g.lines = lines;
  if (ok(g.lines)) return g;
  for (int idx = 0; idx < rotation_count(); ++idx) {
    std::vector<Line3> rot;
    rot.reserve(lines.size());
    for (const auto& l : lines) rot.push_back(rotate_line_xy(l, idx, false));
    if (ok(rot)) {
      g.lines = std::move(rot);
      g.rotation_index = idx;
      return g;
    }
  }
  throw Error(ErrorCode::Degenerate, "no listed rotation makes all projections generic");
}

}  // namespace tlab
