#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlab/error.hpp"
#include "tlab/generators.hpp"
#include "tlab/lines3.hpp"
#include "tlab/transversal.hpp"

using namespace tlab;

namespace {

Point2 pt(long long x, long long y) { return {Scalar(x), Scalar(y)}; }

ConvexPoly2 box(long long x0, long long y0, long long x1, long long y1) {
  return ConvexPoly2::hull_of({pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)});
}

Polytope3 unit_cube_at(long long x, long long y, long long z) {
  std::vector<Point3> pts;
  for (int dx : {-1, 1})
    for (int dy : {-1, 1})
      for (int dz : {-1, 1})
        pts.push_back({Scalar(x) + Scalar(dx, 2), Scalar(y) + Scalar(dy, 2),
                       Scalar(z) + Scalar(dz, 2)});
  return Polytope3::hull_of(pts);
}

}  // namespace

TEST_CASE("deepest_point2 examples") {
  DepthSearch d = deepest_point2({box(-1, -1, 1, 1), box(-1, 0, 1, 2), box(0, -1, 2, 1)});
  CHECK(d.depth == 3);
  CHECK(d.ids == std::vector<int>{0, 1, 2});

  // a strictly 2-intersecting family has depth exactly 2
  ConvexPoly2 k1 = ConvexPoly2::hull_of({pt(0, 0), pt(4, 0)});
  ConvexPoly2 k2 = ConvexPoly2::hull_of({pt(0, 0), pt(2, 4)});
  ConvexPoly2 k3 = ConvexPoly2::hull_of({pt(4, 0), pt(2, 4)});
  CHECK(deepest_point2({k1, k2, k3}).depth == 2);

  CHECK(deepest_point2({box(0, 0, 1, 1)}).depth == 1);
}

TEST_CASE("line_crossing_count3 examples") {
  std::vector<Polytope3> cubes = {unit_cube_at(0, 0, 0), unit_cube_at(4, 0, 0),
                                  unit_cube_at(8, 0, 0)};
  Line3 x_axis({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)});
  CrossingCount c = line_crossing_count3(x_axis, cubes);
  CHECK(c.count == 3);

  Line3 above({Scalar(0), Scalar(0), Scalar(5)}, {Scalar(1), Scalar(0), Scalar(0)});
  CHECK(line_crossing_count3(above, cubes).count == 0);

  CHECK(line_crossing_count3(VLine3{Scalar(4), Scalar(0)}, cubes).count == 1);
}

TEST_CASE("best_line_in_plane examples and monotonicity") {
  std::vector<Polytope3> cubes = {unit_cube_at(0, 0, 0), unit_cube_at(4, 0, 0),
                                  unit_cube_at(8, 0, 0)};
  Plane3 z0(Scalar(0), Scalar(0), Scalar(1), Scalar(0));
  PlaneStab ps = best_line_in_plane(z0, cubes);
  CHECK(ps.count == 3);

  // single set meeting the plane
  PlaneStab one = best_line_in_plane(z0, {unit_cube_at(0, 0, 0)});
  CHECK(one.count == 1);

  // no set meets the plane
  CHECK_THROWS_AS(best_line_in_plane(Plane3(Scalar(0), Scalar(0), Scalar(1), Scalar(9)), cubes),
                  Error);

  // count never decreases when the family grows
  std::vector<Polytope3> more = cubes;
  more.push_back(unit_cube_at(12, 0, 0));
  CHECK(best_line_in_plane(z0, more).count >= ps.count);
}

TEST_CASE("three_crossing_line threshold gate") {
  Instance inst = gen_strict2_family3(6, Scalar(5), 3);
  SeparationSearch sep = best_separating_plane(inst.lines, CandidateKind::PiPlanes);
  // q = 6 is below the counting threshold for c0 = 1/2
  try {
    three_crossing_line(inst.sets3, inst.lines, sep.plane, Scalar(1, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreViolated);
    CHECK(std::string(e.what()).find("threshold") != std::string::npos);
  }
}

TEST_CASE("three_crossing_line end to end on one separated family") {
  Instance inst = gen_strict2_family3(24, Scalar(5), 70);
  SeparationSearch sep = best_separating_plane(inst.lines, CandidateKind::PiPlanes);
  ThreeCrossing tc = three_crossing_line(inst.sets3, inst.lines, sep.plane, Scalar(1, 2));
  CHECK(tc.ids.size() >= 3);
  // the line lies in the plane and the crossings recheck exactly
  for (const Scalar& t : {Scalar(0), Scalar(1), Scalar(-3)})
    CHECK(side_of_plane(tc.line.at(t), sep.plane) == Side::On);
  for (int id : tc.ids) CHECK(clip_line3(inst.sets3[id], tc.line).has_value());
  // the trace marks at least as many separated pairs as the threshold used
  int separated = 0;
  for (const auto& p : tc.trace.pairs) separated += p.separated;
  CHECK(Scalar(separated) >= Scalar(1, 2) * Scalar(24 * 23 / 2));
}

TEST_CASE("pipeline reports are internally consistent") {
  Instance inst = gen_strict2_family3(10, Scalar(5), 55);
  TransversalReport rep = run_pipeline(inst.sets3);
  CrossingCount recheck = line_crossing_count3(rep.line, inst.sets3);
  CHECK(recheck.ids == rep.crossed_ids);
  CHECK(rep.fraction == Scalar(recheck.count) / Scalar(10));
  CHECK(rep.fraction >= Scalar(3, 10));
}

TEST_CASE("compactness reduction keeps pairwise intersections") {
  // witnesses on a shifted grid; the shrunken sets are hulls of them
  std::map<std::pair<int, int>, Point3> w;
  int n = 4;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      w[{i, j}] = Point3{Scalar(i + j), Scalar(i * j), Scalar(i - j)};
  auto F = compactness_reduction(n, w);
  REQUIRE(F.size() == 4);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CHECK(F[i].contains(w[{i, j}]));
      CHECK(F[j].contains(w[{i, j}]));
    }
  std::map<std::pair<int, int>, Point3> missing = w;
  missing.erase({0, 1});
  CHECK_THROWS_AS(compactness_reduction(n, missing), Error);
}

TEST_CASE("pipeline depth threshold is configurable") {
  // three boxes sharing a column, threshold raised beyond reach
  std::vector<Polytope3> F = {unit_cube_at(0, 0, 0), unit_cube_at(0, 0, 0),
                              unit_cube_at(0, 0, 0)};
  PipelineConfig cfg;
  cfg.depth_threshold = 5;
  TransversalReport rep = run_pipeline(F, cfg);
  CHECK(rep.fraction == Scalar(1));  // any witness line crosses the coincident cubes

  PipelineConfig low;
  low.depth_threshold = 3;
  TransversalReport vertical = run_pipeline(F, low);
  CHECK(vertical.stage == "VERTICAL_DEPTH");
}
