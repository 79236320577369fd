#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tlab/error.hpp"
#include "tlab/lines3.hpp"

using namespace tlab;

namespace {

Point3 p3(long long x, long long y, long long z) { return {Scalar(x), Scalar(y), Scalar(z)}; }

Line3 horizontal(long long t, long long h) {
  // projection is the parabola tangent y = -2t x + t^2, constant height h
  return Line3({Scalar(0), Scalar(t) * Scalar(t), Scalar(h)}, {Scalar(1), Scalar(-2) * Scalar(t), Scalar(0)});
}

// tilted monotone family: parabola-tangent projections, strongly descending
// heights, small z-slopes (rational, deterministic from the seed). The
// curvature of the tilt profile drives the prism traversal order: concave
// tilts (curv < 0) make every triple type 4, convex ones type 3.
std::vector<Line3> monotone_family(int n, uint64_t seed, int curv) {
  std::mt19937_64 rng(seed);
  std::vector<Line3> out;
  for (int i = 0; i < n; ++i) {
    long long t = i + 1;
    long long h = 1000 * (n - i);
    long long jitter_s = static_cast<long long>(rng() % 100);
    Scalar s = Scalar(curv * t * t, 1000) + Scalar(jitter_s, 1000000);
    if (curv == 0) s = Scalar(static_cast<long long>(rng() % 101) - 50, 1000);
    long long jitter = static_cast<long long>(rng() % 100);
    out.push_back(Line3({Scalar(0), Scalar(t * t), Scalar(h) + Scalar(jitter, 97)},
                        {Scalar(1), Scalar(-2 * t), s}));
  }
  return out;
}

}  // namespace

TEST_CASE("pair_frame horizontal example") {
  Line3 l1({Scalar(0), Scalar(0), Scalar(2)}, {Scalar(1), Scalar(1), Scalar(0)});
  Line3 l2({Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(0)});
  LinePairFrame f = pair_frame(l1, l2);
  CHECK(f.foot1 == p3(0, 0, 2));
  CHECK(f.foot2 == p3(0, 0, 1));
  CHECK(f.relation == PairRel::Above);
  CHECK(f.plane1 == Plane3(Scalar(0), Scalar(0), Scalar(1), Scalar(2)));
  CHECK(f.plane2 == Plane3(Scalar(0), Scalar(0), Scalar(1), Scalar(1)));
}

TEST_CASE("pair_frame meet example") {
  Line3 l1({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)});
  Line3 l2({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)});
  LinePairFrame f = pair_frame(l1, l2);
  CHECK(f.relation == PairRel::Meet);
  CHECK(f.foot1 == f.foot2);

  Line3 par({Scalar(0), Scalar(5), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)});
  CHECK_THROWS_AS(pair_frame(l1, par), Error);
}

TEST_CASE("pair_frame planes: through first line, constant side along second") {
  std::mt19937_64 rng(31);
  auto rnd = [&]() { return Scalar(static_cast<long long>(rng() % 41) - 20, 1 + static_cast<long long>(rng() % 7)); };
  int done = 0;
  while (done < 50) {
    Line3 l1({rnd(), rnd(), rnd()}, {Scalar(1), rnd(), rnd()});
    Line3 l2({rnd(), rnd(), rnd()}, {Scalar(1), rnd(), rnd()});
    if (cross2(project(l1.dir()), project(l2.dir())).is_zero()) continue;
    LinePairFrame f = pair_frame(l1, l2);
    for (long long t : {-3, 0, 5}) {
      CHECK(side_of_plane(l1.at(Scalar(t)), f.plane1) == Side::On);
      CHECK(side_of_plane(l2.at(Scalar(t)), f.plane2) == Side::On);
    }
    Side s0 = side_of_plane(l2.at(Scalar(0)), f.plane1);
    for (long long t : {-7, 4}) CHECK(side_of_plane(l2.at(Scalar(t)), f.plane1) == s0);
    // antisymmetry of the relation
    LinePairFrame g = pair_frame(l2, l1);
    if (f.relation == PairRel::Above) CHECK(g.relation == PairRel::Below);
    if (f.relation == PairRel::Meet) CHECK(g.relation == PairRel::Meet);
    ++done;
  }
}

TEST_CASE("frame planes are parallel with the feet gap as vertical distance") {
  std::mt19937_64 rng(67);
  auto rnd = [&]() { return Scalar(static_cast<long long>(rng() % 31) - 15, 1 + static_cast<long long>(rng() % 5)); };
  int done = 0;
  while (done < 30) {
    Line3 l1({rnd(), rnd(), rnd()}, {Scalar(1), rnd(), rnd()});
    Line3 l2({rnd(), rnd(), rnd()}, {Scalar(1), rnd(), rnd()});
    if (cross2(project(l1.dir()), project(l2.dir())).is_zero()) continue;
    LinePairFrame f = pair_frame(l1, l2);
    // parallel: same normal direction (each plane is scaled by its own gcd)
    Point3 n1 = f.plane1.normal(), n2 = f.plane2.normal();
    auto dir1 = normalize_integer_vector({n1.x, n1.y, n1.z}, true);
    auto dir2 = normalize_integer_vector({n2.x, n2.y, n2.z}, true);
    CHECK(dir1 == dir2);
    Scalar gap = (f.foot1.z - f.foot2.z).abs();
    for (const Scalar& x : {Scalar(-2), Scalar(0), Scalar(3)}) {
      // z on each plane over the vertical through (x, x+1)
      Scalar y = x + Scalar(1);
      Scalar z1 = (f.plane1.d() - f.plane1.a() * x - f.plane1.b() * y) / f.plane1.c();
      Scalar z2 = (f.plane2.d() - f.plane2.a() * x - f.plane2.b() * y) / f.plane2.c();
      CHECK((z1 - z2).abs() == gap);
    }
    ++done;
  }
}

TEST_CASE("separates_lines examples") {
  Line3 l1({Scalar(0), Scalar(0), Scalar(2)}, {Scalar(1), Scalar(1), Scalar(0)});
  Line3 l2({Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(0)});
  CHECK(separates_lines(Plane3(Scalar(0), Scalar(0), Scalar(2), Scalar(3)), l1, l2));
  CHECK(!separates_lines(Plane3(Scalar(0), Scalar(0), Scalar(1), Scalar(3)), l1, l2));
  // vertical plane containing the segment counts as crossing
  CHECK(separates_lines(Plane3(Scalar(1), Scalar(0), Scalar(0), Scalar(0)), l1, l2));
  // symmetry
  CHECK(separates_lines(Plane3(Scalar(0), Scalar(0), Scalar(2), Scalar(3)), l2, l1));
}

TEST_CASE("is_monotone trivial example and perturbation") {
  std::vector<Line3> seq = {
      Line3({Scalar(0), Scalar(0), Scalar(2)}, {Scalar(1), Scalar(1), Scalar(0)}),
      Line3({Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(0)}),
      Line3({Scalar(0), Scalar(2), Scalar(0)}, {Scalar(1), Scalar(-1), Scalar(0)}),
  };
  MonotoneVerdict v = is_monotone(seq);
  CHECK(v.monotone);
  CHECK(v.kind == ChainKind::Cap);
  CHECK(v.descending);

  auto bad = seq;
  bad[1] = Line3({Scalar(0), Scalar(0), Scalar(3)}, {Scalar(1), Scalar(0), Scalar(0)});
  MonotoneVerdict w = is_monotone(bad);
  CHECK(!w.monotone);
  CHECK(w.bad_i == 0);
  CHECK(w.bad_j == 1);
}

TEST_CASE("generator families are monotone for all seeds") {
  for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    auto fam = monotone_family(6, seed, 0);
    MonotoneVerdict v = is_monotone(fam);
    CHECK(v.monotone);
    CHECK(v.descending);
    CHECK(v.kind == ChainKind::Cap);
    CHECK(v.strict);
  }
}

TEST_CASE("classify_triple3 degenerate horizontal input") {
  std::vector<Line3> seq = {horizontal(1, 2), horizontal(2, 1), horizontal(3, 0)};
  CHECK_THROWS_AS(classify_triple3(seq[0], seq[1], seq[2]), Error);
}

TEST_CASE("classify_triple3 nonempty on tilted monotone triples") {
  int trials = 0;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    auto fam = monotone_family(3, seed, (seed % 3) - 1);
    TripleType3 ty = classify_triple3(fam[0], fam[1], fam[2]);
    CHECK(ty.any());
    ++trials;
  }
  CHECK(trials == 40);
}

TEST_CASE("concave tilts give type 4, convex tilts give type 3") {
  auto concave = monotone_family(3, 11, -1);
  TripleType3 t4 = classify_triple3(concave[0], concave[1], concave[2]);
  CHECK(t4.t4);
  CHECK(!t4.t3);
  auto convex = monotone_family(3, 11, +1);
  TripleType3 t3 = classify_triple3(convex[0], convex[1], convex[2]);
  CHECK(t3.t3);
  CHECK(!t3.t4);
}

TEST_CASE("all-type-4 quintuple satisfies the case-4 separation") {
  int confirmed = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto fam = monotone_family(5, seed, -1);
    bool all_t4 = true;
    for (int i = 0; i < 5 && all_t4; ++i)
      for (int j = i + 1; j < 5 && all_t4; ++j)
        for (int k = j + 1; k < 5 && all_t4; ++k) {
          TripleType3 ty = classify_triple3(fam[i], fam[j], fam[k]);
          if (!ty.t4 || ty.t1 || ty.t2) all_t4 = false;
        }
    if (!all_t4) continue;
    // lines 2 and 4 are separated by the plane through 3 parallel to 5
    const Plane3& pi = pair_frame(fam[2], fam[4]).plane1;
    CHECK(separates_lines(pi, fam[1], fam[3]));
    ++confirmed;
  }
  CHECK(confirmed >= 5);
}

TEST_CASE("find_separating_quad on generator 5-sequences") {
  int found = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto fam = monotone_family(5, seed, static_cast<int>(seed % 3) - 1);
    auto quad = find_separating_quad(fam);
    if (quad) {
      ++found;
      auto [i, j, k, l] = *quad;
      const LinePairFrame f = pair_frame(fam[k], fam[l]);
      CHECK(separates_lines(f.plane1, fam[i], fam[j]));
    }
  }
  // empirical: the paper only guarantees existence for huge J, so log-only;
  // the generator families in practice always contain one
  CHECK(found == 20);
}

TEST_CASE("best_separating_plane trivial triple") {
  std::vector<Line3> seq = {
      Line3({Scalar(0), Scalar(0), Scalar(2)}, {Scalar(1), Scalar(1), Scalar(0)}),
      Line3({Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(0)}),
      Line3({Scalar(0), Scalar(2), Scalar(0)}, {Scalar(1), Scalar(-1), Scalar(0)}),
  };
  SeparationSearch s = best_separating_plane(seq, CandidateKind::PiPlanes);
  CHECK(s.count >= 1);
  CHECK(s.plane == Plane3(Scalar(0), Scalar(0), Scalar(1), Scalar(1)));
  bool has_13 = false;
  for (auto [a, b] : s.pairs) has_13 |= (a == 0 && b == 2);
  CHECK(has_13);
}

TEST_CASE("candidate growth never decreases the count") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto fam = monotone_family(5, seed, 0);
    SeparationSearch base = best_separating_plane(fam, CandidateKind::PiPlanes);
    SeparationSearch ext = best_separating_plane(fam, CandidateKind::PiPlusVertexTriples);
    CHECK(ext.count >= base.count);
  }
}

TEST_CASE("similarity invariance of relations, types and separation") {
  auto fam = monotone_family(5, 3, 0);
  Scalar lambda(7, 3);
  std::vector<Line3> scaled;
  for (const auto& l : fam)
    scaled.push_back(Line3(lambda * l.base(), l.dir()));

  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      CHECK(pair_frame(fam[i], fam[j]).relation == pair_frame(scaled[i], scaled[j]).relation);

  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) {
        TripleType3 a = classify_triple3(fam[i], fam[j], fam[k]);
        TripleType3 b = classify_triple3(scaled[i], scaled[j], scaled[k]);
        CHECK(a.t1 == b.t1);
        CHECK(a.t2 == b.t2);
        CHECK(a.t3 == b.t3);
        CHECK(a.t4 == b.t4);
      }

  CHECK(find_separating_quad(fam) == find_separating_quad(scaled));
  SeparationSearch s1 = best_separating_plane(fam, CandidateKind::PiPlanes);
  SeparationSearch s2 = best_separating_plane(scaled, CandidateKind::PiPlanes);
  CHECK(s1.count == s2.count);
  CHECK(s1.pairs == s2.pairs);
}

TEST_CASE("meet pairs are rejected by the separation search") {
  std::vector<Line3> seq = {
      Line3({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}),
      Line3({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}),
  };
  CHECK_THROWS_AS(best_separating_plane(seq, CandidateKind::PiPlanes), Error);
}

TEST_CASE("frame rotation fixes projected verticals") {
  Line3 vertical_proj({Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(2)});
  Line3 plain({Scalar(0), Scalar(0), Scalar(5)}, {Scalar(1), Scalar(0), Scalar(0)});
  GenericFrame g = make_projection_generic({vertical_proj, plain});
  CHECK(g.rotation_index >= 0);
  for (const auto& l : g.lines) CHECK(!l.dir().x.is_zero());

  // rotation round-trips exactly
  Line3 back = rotate_line_xy(g.lines[0], g.rotation_index, true);
  CHECK(back == vertical_proj);
  // relations survive rotation (rigid motion)
  CHECK(pair_frame(vertical_proj, plain).relation ==
        pair_frame(g.lines[0], g.lines[1]).relation);
}
