#include "tlab/transversal.hpp"

#include <algorithm>

#include "tlab/error.hpp"
#include "tlab/ramsey.hpp"

namespace tlab {

DepthSearch deepest_point2(const std::vector<ConvexPoly2>& F) {
  if (F.empty()) throw Error(ErrorCode::BadInput, "empty family");
  std::vector<Point2> cand;
  for (const auto& K : F)
    for (const auto& v : K.vertices()) cand.push_back(v);
  const int n = static_cast<int>(F.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int i = 0; i < F[a].edge_count(); ++i) {
        auto [p, q] = F[a].edge(i);
        for (int j = 0; j < F[b].edge_count(); ++j) {
          auto [r, s] = F[b].edge(j);
          for (auto& x : seg_intersect(p, q, r, s)) cand.push_back(x);
        }
      }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  DepthSearch best;
  bool have = false;
  for (const auto& p : cand) {
    int d = 0;
    for (const auto& K : F)
      if (K.contains(p)) ++d;
    if (!have || d > best.depth) {
      have = true;
      best.point = p;
      best.depth = d;
    }
  }
  for (int i = 0; i < n; ++i)
    if (F[i].contains(best.point)) best.ids.push_back(i);
  return best;
}

CrossingCount line_crossing_count3(const Line3& l, const std::vector<Polytope3>& F) {
  CrossingCount c;
  for (int i = 0; i < static_cast<int>(F.size()); ++i)
    if (clip_line3(F[i], l)) {
      ++c.count;
      c.ids.push_back(i);
    }
  return c;
}

CrossingCount line_crossing_count3(const VLine3& l, const std::vector<Polytope3>& F) {
  CrossingCount c;
  for (int i = 0; i < static_cast<int>(F.size()); ++i)
    if (clip_vertical3(F[i], l.x, l.y)) {
      ++c.count;
      c.ids.push_back(i);
    }
  return c;
}

CrossingCount line_crossing_count3(const StabLine& l, const std::vector<Polytope3>& F) {
  if (l.vertical()) return line_crossing_count3(*l.vline, F);
  return line_crossing_count3(*l.line, F);
}

namespace {

struct PlaneFrame {
  Point3 origin, u, v;  // origin + alpha u + beta v spans the plane
  Scalar uu, uv, vv, gram;

  explicit PlaneFrame(const Plane3& h) {
    if (!h.c().is_zero()) origin = {Scalar(0), Scalar(0), h.d() / h.c()};
    else if (!h.b().is_zero()) origin = {Scalar(0), h.d() / h.b(), Scalar(0)};
    else origin = {h.d() / h.a(), Scalar(0), Scalar(0)};
    Point3 n = h.normal();
    if (n.x.is_zero() && n.y.is_zero()) u = {Scalar(1), Scalar(0), Scalar(0)};
    else u = {n.y, -n.x, Scalar(0)};
    v = cross3(n, u);
    uu = dot3(u, u);
    uv = dot3(u, v);
    vv = dot3(v, v);
    gram = uu * vv - uv * uv;
  }

  Point2 coords(const Point3& p) const {
    Point3 r = p - origin;
    Scalar ru = dot3(r, u), rv = dot3(r, v);
    return {(ru * vv - rv * uv) / gram, (uu * rv - uv * ru) / gram};
  }
  Point3 lift(const Point2& q) const { return origin + q.x * u + q.y * v; }
};

}  // namespace

PlaneStab best_line_in_plane(const Plane3& h, const std::vector<Polytope3>& F) {
  PlaneFrame frame(h);
  const int n = static_cast<int>(F.size());
  std::vector<std::optional<ConvexPoly2>> sections(n);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) {
    std::vector<Plane3> hs = F[i].halfspaces();
    hs.push_back(h);
    hs.push_back(h.flipped());
    auto verts = halfspace_vertices(hs);
    if (verts.empty()) continue;
    std::vector<Point2> flat;
    flat.reserve(verts.size());
    for (const auto& p : verts) flat.push_back(frame.coords(p));
    sections[i] = ConvexPoly2::hull_of(flat);
    for (const auto& q : sections[i]->vertices()) pts.push_back(q);
  }
  if (pts.empty()) throw Error(ErrorCode::NoSections, "no set meets the plane");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto crossed = [&](const Point2& a, const Point2& b, const ConvexPoly2& K) {
    int lo = 2, hi = -2;
    for (const auto& w : K.vertices()) {
      int s = static_cast<int>(orient2(a, b, w));
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    return lo <= 0 && hi >= 0;
  };

  struct Cand { Point2 a, b; };
  std::vector<Cand> cands;
  if (pts.size() == 1) {
    cands.push_back({pts[0], pts[0] + Point2{Scalar(1), Scalar(0)}});
  } else {
    for (size_t a = 0; a < pts.size(); ++a)
      for (size_t b = a + 1; b < pts.size(); ++b) cands.push_back({pts[a], pts[b]});
  }

  PlaneStab best;
  bool have = false;
  std::array<Scalar, 3> best_key{};
  for (const auto& cd : cands) {
    Point3 p = frame.lift(cd.a), q = frame.lift(cd.b);
    if (project(p) == project(q)) continue;  // vertical in space: not a Line3
    int count = 0;
    std::vector<int> ids;
    for (int i = 0; i < n; ++i)
      if (sections[i] && crossed(cd.a, cd.b, *sections[i])) {
        ++count;
        ids.push_back(i);
      }
    Point2 d = cd.b - cd.a;
    auto key_v = normalize_integer_vector({-d.y, d.x, -d.y * cd.a.x + d.x * cd.a.y}, true);
    std::array<Scalar, 3> key{key_v[0], key_v[1], key_v[2]};
    if (!have || count > best.count || (count == best.count && key < best_key)) {
      have = true;
      best.count = count;
      best.ids = ids;
      best.line = Line3::through(p, q);
      best_key = key;
    }
  }
  if (!have) throw Error(ErrorCode::Degenerate, "no representable stabbing line in the plane");
  return best;
}

namespace {

Point3 interpolate_zero(const Plane3& h, const Point3& a, const Point3& b) {
  Scalar fa = h.eval(a), fb = h.eval(b);
  if (fa.is_zero()) return a;
  if (fb.is_zero()) return b;
  Scalar t = -fa / (fb - fa);
  return a + t * (b - a);
}

}  // namespace

ThreeCrossing three_crossing_line(const std::vector<Polytope3>& Q, const std::vector<Line3>& L,
                                  const Plane3& pi, const Scalar& c0) {
  const int q = static_cast<int>(Q.size());
  if (q != static_cast<int>(L.size()) || q < 3)
    throw Error(ErrorCode::BadInput, "need matching sets and lines, at least 3");
  if (pi.c().is_zero())
    throw Error(ErrorCode::PreViolated, "vertical plane cannot carry the construction");

  Scalar pairs_total(static_cast<long long>(q) * (q - 1) / 2);
  Scalar needed = c0 * pairs_total;
  if ((needed - Scalar(2 * q)) / Scalar(q) < Scalar(3))
    throw Error(ErrorCode::PreViolated, "q too small for the counting threshold");

  {
    std::vector<ConvexPoly2> shadows;
    shadows.reserve(Q.size());
    for (const auto& K : Q) shadows.push_back(K.shadow());
    if (family_class2(shadows) != FamilyClass2::Strict2)
      throw Error(ErrorCode::PreViolated, "family is not strictly 2-overlapping");
  }

  ThreeCrossing out;
  Lemma3setsTrace& tr = out.trace;

  // realization recheck: projected line segments must pairwise intersect
  std::vector<Segment2> proj_seg(q);
  for (int i = 0; i < q; ++i) {
    auto t = clip_line3(Q[i], L[i]);
    if (!t)
      throw Error(ErrorCode::PreViolated, "line " + std::to_string(i) + " misses its set");
    proj_seg[i] = Segment2{project(L[i].at(t->first)), project(L[i].at(t->second))};
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (!segments_meet(proj_seg[i], proj_seg[j]))
        throw Error(ErrorCode::PreViolated,
                    "projected segments " + std::to_string(i) + "," + std::to_string(j) +
                        " do not cross");

  // separated pairs, their vertical segments, and the path crossings
  int separated_count = 0;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      PairTrace pt;
      pt.i = i;
      pt.j = j;
      auto meet = polytope_common_point(Q[i], Q[j]);
      if (!meet)
        throw Error(ErrorCode::PreViolated, "sets are not pairwise intersecting");
      pt.pair_witness = *meet;

      auto seg = vertical_segment_witness(pi, Q[i], Q[j]);
      pt.separated = seg.has_value();
      if (seg) {
        ++separated_count;
        pt.seg_a = seg->a;
        pt.seg_b = seg->b;
        pt.plane_hit = interpolate_zero(pi, seg->a, seg->b);
        const Point3& y = pt.pair_witness;
        int sy = pi.eval(y).sign();
        if (sy == 0) {
          pt.path_hit = y;
        } else if (sy * pi.eval(seg->a).sign() <= 0) {
          pt.path_hit = interpolate_zero(pi, y, seg->a);
        } else {
          pt.path_hit = interpolate_zero(pi, y, seg->b);
        }
        pt.path_hit_in_i = Q[i].contains(pt.path_hit);
        pt.path_hit_in_j = Q[j].contains(pt.path_hit);
        if (!pt.path_hit_in_i && !pt.path_hit_in_j)
          throw Error(ErrorCode::VerifyFailed, "path crossing escaped both sets");
      }
      tr.pairs.push_back(pt);
    }
  if (Scalar(separated_count) < needed)
    throw Error(ErrorCode::PreViolated,
                "plane separates " + std::to_string(separated_count) + " pairs, needs " +
                    needed.str());

  // lift the realizing lines onto the plane
  auto lift_xy = [&](const Point2& w) -> Point3 {
    Scalar z = (pi.d() - pi.a() * w.x - pi.b() * w.y) / pi.c();
    return {w.x, w.y, z};
  };
  for (int i = 0; i < q; ++i) {
    Point3 p0 = lift_xy(project(L[i].base()));
    Point3 p1 = lift_xy(project(L[i].at(Scalar(1))));
    tr.lifted.push_back(Line3::through(p0, p1));
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      tr.lift_vertex[{i, j}] = lift_xy(pair_frame(L[i], L[j]).vline_xy);

  auto vertex_of = [&](int i, int j) -> const Point3& {
    return tr.lift_vertex.at({std::min(i, j), std::max(i, j)});
  };

  // V_i: partners whose path crossing lies in K_i
  tr.interval_members.assign(q, {});
  for (const auto& pt : tr.pairs) {
    if (!pt.separated) continue;
    if (pt.path_hit_in_i) tr.interval_members[pt.i].push_back(pt.j);
    if (pt.path_hit_in_j) tr.interval_members[pt.j].push_back(pt.i);
  }
  tr.interval_ends.assign(q, {-1, -1});
  std::vector<std::map<int, Scalar>> param(q);  // partner -> position along the lift
  for (int i = 0; i < q; ++i) {
    for (int h : tr.interval_members[i])
      param[i][h] = dot3(vertex_of(i, h) - tr.lifted[i].base(), tr.lifted[i].dir());
    if (tr.interval_members[i].size() >= 2) {
      auto lo = std::min_element(param[i].begin(), param[i].end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
      auto hi = std::max_element(param[i].begin(), param[i].end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
      tr.interval_ends[i] = {lo->first, hi->first};
    }
  }

  // pick the lift crossing the most open intervals at member vertices
  int best_h = -1, best_count = 0;
  std::vector<std::vector<int>> hits(q);
  for (int i = 0; i < q; ++i) {
    auto [a_i, b_i] = tr.interval_ends[i];
    if (a_i < 0) continue;
    for (int h : tr.interval_members[i]) {
      if (h == a_i || h == b_i) continue;
      hits[h].push_back(i);
    }
  }
  for (int h = 0; h < q; ++h)
    if (static_cast<int>(hits[h].size()) > best_count) {
      best_count = static_cast<int>(hits[h].size());
      best_h = h;
    }
  if (best_h < 0 || best_count < 3)
    throw Error(ErrorCode::VerifyFailed, "pigeonhole produced no 3-interval lift");

  tr.chosen = best_h;
  out.line = tr.lifted[best_h];
  for (int i : hits[best_h])
    if (clip_line3(Q[i], out.line)) out.ids.push_back(i);
  if (static_cast<int>(out.ids.size()) < 3)
    throw Error(ErrorCode::VerifyFailed, "selected lift failed the exact crossing recheck");
  return out;
}

std::vector<Polytope3> compactness_reduction(
    int n, const std::map<std::pair<int, int>, Point3>& witnesses) {
  if (n < 2) throw Error(ErrorCode::BadInput, "reduction needs at least two sets");
  std::vector<std::vector<Point3>> pts(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto it = witnesses.find({i, j});
      if (it == witnesses.end())
        throw Error(ErrorCode::BadInput,
                    "missing witness for pair " + std::to_string(i) + "," + std::to_string(j));
      pts[i].push_back(it->second);
      pts[j].push_back(it->second);
    }
  std::vector<Polytope3> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(Polytope3::hull_of(pts[i]));
  return out;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

TransversalReport run_pipeline(const std::vector<Polytope3>& F, const PipelineConfig& cfg) {
  const int n = static_cast<int>(F.size());
  if (n == 0) throw Error(ErrorCode::BadInput, "empty family");

  // pairwise witnesses double as the Stage C candidate anchors
  std::vector<Point3> witnesses;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto meet = polytope_common_point(F[i], F[j]);
      if (!meet)
        throw Error(ErrorCode::NotPairwise,
                    "sets " + std::to_string(i) + "," + std::to_string(j) + " are disjoint");
      witnesses.push_back(*meet);
    }
  if (n == 1) witnesses.push_back(F[0].vertices().front());

  struct Candidate {
    StabLine line;
    CrossingCount cc;
    std::string stage;
  };
  std::vector<Candidate> results;
  TransversalReport report;
  auto note = [&](const std::string& k, const std::string& v) {
    report.diagnostics.push_back({k, v});
  };

  // Stage A: deepest shadow point
  std::vector<ConvexPoly2> shadows;
  shadows.reserve(F.size());
  for (const auto& K : F) shadows.push_back(K.shadow());
  DepthSearch depth = deepest_point2(shadows);
  note("stage_a.depth", std::to_string(depth.depth));
  if (depth.depth >= cfg.depth_threshold) {
    StabLine l;
    l.vline = VLine3{depth.point.x, depth.point.y};
    results.push_back({l, line_crossing_count3(l, F), "VERTICAL_DEPTH"});
  }

  // Stage B: realization, lift, monotone subsequence, separating plane
  if (n >= 3) {
    try {
      std::vector<int> sub_ids(n);
      for (int i = 0; i < n; ++i) sub_ids[i] = i;
      std::vector<ConvexPoly2> sub = shadows;
      while (family_class2(sub) == FamilyClass2::HasTriple && sub.size() > 3) {
        // drop the set in the most shadow triples
        const int m = static_cast<int>(sub.size());
        std::vector<int> score(m, 0);
        for (int a = 0; a < m; ++a)
          for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
              auto I = poly_intersect2(sub[a], sub[b]);
              if (I && poly_intersect2(*I, sub[c])) {
                score[a]++; score[b]++; score[c]++;
              }
            }
        int worst = static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
        sub.erase(sub.begin() + worst);
        sub_ids.erase(sub_ids.begin() + worst);
      }
      note("stage_b.strict2_subfamily", std::to_string(sub.size()));

      auto realization = extract_realizable(sub, 3);
      if (!realization) throw Error(ErrorCode::GenFailed, "no realizable subsequence found");
      note("stage_b.realization_length", std::to_string(realization->size()));

      // lift each 2D line through the fibers over its segment endpoints
      std::vector<Line3> lifted;
      std::vector<int> lifted_ids;
      for (size_t t = 0; t < realization->size(); ++t) {
        int orig = sub_ids[realization->set_ids[t]];
        const Segment2& s = realization->segments[t];
        if (s.is_point()) continue;
        auto fa = clip_vertical3(F[orig], s.a.x, s.a.y);
        auto fb = clip_vertical3(F[orig], s.b.x, s.b.y);
        if (!fa || !fb) continue;
        Point3 pa{s.a.x, s.a.y, (fa->first + fa->second) / Scalar(2)};
        Point3 pb{s.b.x, s.b.y, (fb->first + fb->second) / Scalar(2)};
        lifted.push_back(Line3::through(pa, pb));
        lifted_ids.push_back(orig);
      }
      if (lifted.size() < 3) throw Error(ErrorCode::GenFailed, "too few liftable lines");

      // monotone subsequence under the above/below order
      auto rel_color = [&](const std::vector<int>& pr) {
        PairRel r = pair_frame(lifted[pr[0]], lifted[pr[1]]).relation;
        return (r == PairRel::Below) ? 1 : 0;
      };
      std::vector<int> mono_pos;
      for (int m1 = static_cast<int>(lifted.size()); m1 >= 3; --m1) {
        MonoSearch s = monochromatic_subset(static_cast<int>(lifted.size()), 2, rel_color, m1);
        if (s.found()) {
          mono_pos = s.subset;
          break;
        }
      }
      if (mono_pos.size() < 3) throw Error(ErrorCode::GenFailed, "no monotone subsequence");

      std::vector<Line3> mono_lines;
      std::vector<Polytope3> mono_sets;
      std::vector<int> mono_ids;
      for (int p : mono_pos) {
        mono_lines.push_back(lifted[p]);
        mono_sets.push_back(F[lifted_ids[p]]);
        mono_ids.push_back(lifted_ids[p]);
      }
      note("stage_b.monotone_length", std::to_string(mono_lines.size()));

      SeparationSearch sep = best_separating_plane(mono_lines, CandidateKind::PiPlanes);
      note("stage_b.separated_line_pairs", std::to_string(sep.count));

      try {
        ThreeCrossing tc = three_crossing_line(mono_sets, mono_lines, sep.plane, cfg.c0);
        StabLine l;
        l.line = tc.line;
        results.push_back({l, line_crossing_count3(l, F), "PLANE_STAB"});
      } catch (const Error& e) {
        note("stage_b.three_crossing", e.what());
      }
      try {
        PlaneStab ps = best_line_in_plane(sep.plane, F);
        StabLine l;
        l.line = ps.line;
        results.push_back({l, line_crossing_count3(l, F), "PLANE_STAB"});
        note("stage_b.plane_stab_count", std::to_string(ps.count));
      } catch (const Error& e) {
        note("stage_b.plane_stab", e.what());
      }
    } catch (const Error& e) {
      note("stage_b.abort", e.what());
    }
  }

  // Stage C: candidate lines through pairs of pairwise witnesses. It is a
  // fallback: it runs only while no earlier stage reached 3 crossings.
  int best_so_far = 0;
  for (const auto& c : results) best_so_far = std::max(best_so_far, c.cc.count);
  if (best_so_far < std::max(3, cfg.depth_threshold) || n <= 3) {
    std::vector<Point3> ws = witnesses;
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    Candidate best;
    bool have = false;
    auto consider = [&](const StabLine& l) {
      Candidate c{l, line_crossing_count3(l, F), "FALLBACK"};
      if (!have || c.cc.count > best.cc.count) {
        have = true;
        best = c;
      }
    };
    for (const auto& w : ws) consider(StabLine{std::nullopt, VLine3{w.x, w.y}});
    for (size_t a = 0; a < ws.size(); ++a)
      for (size_t b = a + 1; b < ws.size(); ++b) {
        if (project(ws[a]) == project(ws[b])) continue;
        consider(StabLine{Line3::through(ws[a], ws[b]), std::nullopt});
      }
    if (have) results.push_back(best);
    note("stage_c.candidates", std::to_string(ws.size() * (ws.size() + 1) / 2));
  } else {
    note("stage_c.skipped", "earlier stage reached the crossing threshold");
  }

  if (results.empty()) throw Error(ErrorCode::VerifyFailed, "no stage produced a line");
  const Candidate* best = &results[0];
  for (const auto& c : results)
    if (c.cc.count > best->cc.count) best = &c;

  report.line = best->line;
  report.crossed_ids = best->cc.ids;
  report.fraction = Scalar(best->cc.count) / Scalar(n);
  report.stage = best->stage;
  note("crossed", join_ints(best->cc.ids));
  return report;
}

}  // namespace tlab
