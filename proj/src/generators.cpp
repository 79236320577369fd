#include "tlab/generators.hpp"

#include <algorithm>

#include "tlab/error.hpp"
#include "tlab/lines3.hpp"
#include "tlab/rng.hpp"

namespace tlab {

namespace {

// tangent line of y = -x^2 at parameter t
Line2 tangent_at(const Scalar& t) { return Line2{Scalar(-2) * t, t * t}; }

std::vector<Scalar> random_parameters(int n, Rng& rng) {
  std::vector<Scalar> ts;
  for (int i = 0; i < n; ++i)
    ts.push_back(Scalar(100 * i + rng.uniform(10, 90), 100));
  return ts;
}

// hexagonal strip of half-width f around the tangent segment spanning the
// extreme crossings, with tips on the core line
ConvexPoly2 fattened_tangent(const Scalar& t, const Scalar& lo, const Scalar& hi,
                             const Scalar& f) {
  Line2 l = tangent_at(t);
  Scalar m(1, 2);
  Scalar tip_lo = lo - m, tip_hi = hi + m;
  return ConvexPoly2::hull_of({{tip_lo, l.y_at(tip_lo)},
                               {lo, l.y_at(lo) - f},
                               {hi, l.y_at(hi) - f},
                               {tip_hi, l.y_at(tip_hi)},
                               {hi, l.y_at(hi) + f},
                               {lo, l.y_at(lo) + f}});
}

void base_params(Instance& inst, int n, uint64_t seed) {
  inst.seed = seed;
  inst.params.push_back({"n", std::to_string(n)});
  inst.params.push_back({"seed", std::to_string(seed)});
}

}  // namespace

Instance gen_cap_family2(int n, const Scalar& fatness, uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::BadInput, "cap family needs n >= 3");
  if (fatness.sign() <= 0) throw Error(ErrorCode::BadInput, "fatness must be positive");
  Rng rng(seed);
  std::vector<Scalar> ts = random_parameters(n, rng);

  Instance inst;
  inst.dim = 2;
  inst.generator = "cap_family2";
  base_params(inst, n, seed);

  // shrink the fatness until the family is strictly 2-intersecting AND all
  // triples carry one color: a cap with a common orientation (the thin-strip
  // limit always is, since the lens x-ranges separate)
  Scalar f = fatness;
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<ConvexPoly2> sets;
    for (int i = 0; i < n; ++i) {
      Scalar lo, hi;
      bool first = true;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Scalar x = (ts[i] + ts[j]) / Scalar(2);
        if (first) { lo = hi = x; first = false; }
        lo = min(lo, x);
        hi = max(hi, x);
      }
      sets.push_back(fattened_tangent(ts[i], lo, hi, f));
    }
    if (family_class2(sets) == FamilyClass2::Strict2) {
      bool uniform = true;
      std::optional<Color8> ref;
      for (int i = 0; i < n && uniform; ++i)
        for (int j = i + 1; j < n && uniform; ++j)
          for (int k = j + 1; k < n && uniform; ++k) {
            Color8 c = eight_color(sets[i], sets[j], sets[k]);
            if (c.category != TripleCat::Cap) uniform = false;
            if (!ref) ref = c;
            else if (!(c == *ref)) uniform = false;
          }
      if (uniform) {
        inst.sets2 = std::move(sets);
        for (int i = 0; i < n; ++i) inst.ids.push_back("K" + std::to_string(i));
        inst.params.push_back({"fatness", f.str()});
        inst.certifies = {"strict2", "uniform_cap"};
        verify_instance(inst);
        return inst;
      }
    }
    f = f / Scalar(2);
  }
  throw Error(ErrorCode::GenFailed, "no fatness produced a uniformly colored strict family");
}

Instance gen_monotone_lines3(int n, uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::BadInput, "monotone family needs n >= 3");
  Rng rng(seed);
  int curv = static_cast<int>(seed % 3) - 1;

  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Scalar> ts = random_parameters(n, rng);
    std::vector<Line3> lines;
    for (int i = 0; i < n; ++i) {
      Scalar t = ts[i];
      Scalar h = Scalar(1000) * Scalar(n - i) + Scalar(rng.uniform(0, 96), 97);
      Scalar s = Scalar(curv) * t * t / Scalar(1000) + Scalar(rng.uniform(1, 99), 1000000);
      if (curv == 0) s = Scalar(rng.uniform(-50, 50), 1000) + Scalar(rng.uniform(1, 99), 1000000);
      lines.push_back(Line3({Scalar(0), t * t, h}, {Scalar(1), Scalar(-2) * t, s}));
    }
    MonotoneVerdict v = is_monotone(lines);
    if (!(v.monotone && v.descending && v.strict && v.kind == ChainKind::Cap)) continue;

    Instance inst;
    inst.dim = 3;
    inst.generator = "monotone_lines3";
    base_params(inst, n, seed);
    inst.params.push_back({"curvature", std::to_string(curv)});
    inst.lines = std::move(lines);
    for (int i = 0; i < n; ++i) inst.ids.push_back("L" + std::to_string(i));
    inst.certifies = {"monotone_cap_desc", "pairwise_skew"};
    verify_instance(inst);
    return inst;
  }
  throw Error(ErrorCode::GenFailed, "no monotone family after bounded retries");
}

namespace {

Scalar line_z_at_x(const Line3& l, const Scalar& x) {
  Scalar t = (x - l.base().x) / l.dir().x;
  return l.base().z + t * l.dir().z;
}

Scalar line_y_at_x(const Line3& l, const Scalar& x) {
  Scalar t = (x - l.base().x) / l.dir().x;
  return l.base().y + t * l.dir().y;
}

}  // namespace

Instance gen_strict2_family3(int n, const Scalar& height, uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::BadInput, "family needs n >= 3");
  if (height.sign() <= 0) throw Error(ErrorCode::BadInput, "height must be positive");
  Instance mono = gen_monotone_lines3(n, Rng::derive(seed, 1));
  const std::vector<Line3>& lines = mono.lines;

  std::vector<Scalar> lo(n), hi(n);
  Scalar max_gap(0);
  for (int i = 0; i < n; ++i) {
    bool first = true;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Scalar x = pair_frame(lines[i], lines[j]).vline_xy.x;
      if (first) { lo[i] = hi[i] = x; first = false; }
      lo[i] = min(lo[i], x);
      hi[i] = max(hi[i], x);
      Scalar gap = (line_z_at_x(lines[i], x) - line_z_at_x(lines[j], x)).abs();
      max_gap = max(max_gap, gap);
    }
  }
  Scalar h_used = max(height, max_gap / Scalar(2) + Scalar(1));

  Instance inst;
  inst.dim = 3;
  inst.generator = "strict2_family3";
  base_params(inst, n, seed);
  inst.params.push_back({"height", height.str()});
  inst.params.push_back({"height_used", h_used.str()});
  inst.lines = lines;
  inst.family_split = -1;

  Scalar m(1, 2);
  Scalar w(1, 8);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Polytope3> sets;
    std::vector<ConvexPoly2> shadows;
    for (int i = 0; i < n; ++i) {
      Scalar xa = lo[i] - m, xb = hi[i] + m;
      std::vector<Point3> corners;
      for (const Scalar& x : {xa, xb}) {
        Scalar y = line_y_at_x(lines[i], x);
        Scalar z = line_z_at_x(lines[i], x);
        for (int dy : {-1, 1})
          for (int dz : {-1, 1})
            corners.push_back({x, y + Scalar(dy) * w, z + Scalar(dz) * h_used});
      }
      sets.push_back(Polytope3::hull_of(corners));
      shadows.push_back(sets.back().shadow());
    }
    if (family_class2(shadows) == FamilyClass2::Strict2) {
      inst.sets3 = std::move(sets);
      for (int i = 0; i < n; ++i) inst.ids.push_back("B" + std::to_string(i));
      inst.params.push_back({"width", w.str()});
      inst.certifies = {"pairwise3", "strict2_overlap", "realized"};
      verify_instance(inst);
      return inst;
    }
    w = w / Scalar(2);
  }
  throw Error(ErrorCode::GenFailed, "no width produced a strictly 2-overlapping family");
}

Instance gen_paraboloid(int n, const Scalar& eps, uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::BadInput, "paraboloid family needs n >= 2");
  if (eps.sign() < 0) throw Error(ErrorCode::BadInput, "eps must be nonnegative");
  Rng rng(seed);
  auto offset = [&]() { return eps * Scalar(rng.uniform(-100, 100), 100); };

  Instance inst;
  inst.dim = 3;
  inst.generator = "paraboloid";
  base_params(inst, n, seed);
  inst.params.push_back({"eps", eps.str()});
  inst.family_split = n;

  std::vector<Line3> lines;
  for (int i = 1; i <= n; ++i) {
    Point3 base{Scalar(i) + offset(), offset(), offset()};
    Point3 dir{offset(), Scalar(1) + offset(), Scalar(i) + offset()};
    lines.push_back(Line3(base, dir));
    inst.ids.push_back("L1:" + std::to_string(i));
  }
  for (int j = 1; j <= n; ++j) {
    Point3 base{offset(), Scalar(j) + offset(), offset()};
    Point3 dir{Scalar(1) + offset(), offset(), Scalar(j) + offset()};
    lines.push_back(Line3(base, dir));
    inst.ids.push_back("L2:" + std::to_string(j));
  }

  // thin boxes around the truncated lines
  Scalar w(1, 100);
  for (int k = 0; k < 2 * n; ++k) {
    const Line3& l = lines[k];
    Point3 u1 = k < n ? Point3{Scalar(1), Scalar(0), Scalar(0)}
                      : Point3{Scalar(0), Scalar(1), Scalar(0)};
    Point3 u2{Scalar(0), Scalar(0), Scalar(1)};
    std::vector<Point3> corners;
    for (const Scalar& t : {Scalar(-1) * Scalar(n + 1), Scalar(2) * Scalar(n + 1)}) {
      Point3 p = l.at(t);
      for (int a : {-1, 1})
        for (int b : {-1, 1})
          corners.push_back(p + Scalar(a) * w * u1 + Scalar(b) * w * u2);
    }
    inst.sets3.push_back(Polytope3::hull_of(corners));
  }
  inst.lines = std::move(lines);
  inst.certifies = {eps.is_zero() ? "bicolored_meet" : "bicolored_defined"};
  verify_instance(inst);
  return inst;
}

void verify_instance(const Instance& inst) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::VerifyFailed, inst.generator + " instance: " + what);
  };
  {
    std::vector<std::string> ids = inst.ids;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) fail("duplicate ids");
  }
  for (const std::string& tag : inst.certifies) {
    if (tag == "strict2") {
      if (family_class2(inst.sets2) != FamilyClass2::Strict2)
        fail("family is not strictly 2-intersecting");
    } else if (tag == "uniform_cap") {
      std::optional<Color8> ref;
      for (size_t i = 0; i < inst.sets2.size(); ++i)
        for (size_t j = i + 1; j < inst.sets2.size(); ++j)
          for (size_t k = j + 1; k < inst.sets2.size(); ++k) {
            Color8 c = eight_color(inst.sets2[i], inst.sets2[j], inst.sets2[k]);
            if (c.category != TripleCat::Cap) fail("a triple is not a cap");
            if (!ref) ref = c;
            else if (!(c == *ref)) fail("triples carry mixed colors");
          }
    } else if (tag == "monotone_cap_desc") {
      MonotoneVerdict v = is_monotone(inst.lines);
      if (!(v.monotone && v.descending && v.kind == ChainKind::Cap))
        fail("lines are not a descending projected cap");
    } else if (tag == "pairwise_skew") {
      for (size_t i = 0; i < inst.lines.size(); ++i)
        for (size_t j = i + 1; j < inst.lines.size(); ++j)
          if (pair_frame(inst.lines[i], inst.lines[j]).relation == PairRel::Meet)
            fail("meeting line pair");
    } else if (tag == "pairwise3") {
      for (size_t i = 0; i < inst.sets3.size(); ++i)
        for (size_t j = i + 1; j < inst.sets3.size(); ++j)
          if (!polytope_common_point(inst.sets3[i], inst.sets3[j]))
            fail("sets are not pairwise intersecting");
    } else if (tag == "strict2_overlap") {
      std::vector<ConvexPoly2> shadows;
      for (const auto& K : inst.sets3) shadows.push_back(K.shadow());
      if (family_class2(shadows) != FamilyClass2::Strict2)
        fail("shadows are not strictly 2-intersecting");
    } else if (tag == "realized") {
      if (inst.lines.size() != inst.sets3.size()) fail("line/set count mismatch");
      std::vector<Segment2> proj;
      for (size_t i = 0; i < inst.lines.size(); ++i) {
        auto t = clip_line3(inst.sets3[i], inst.lines[i]);
        if (!t) fail("a core line misses its set");
        proj.push_back(Segment2{project(inst.lines[i].at(t->first)),
                                project(inst.lines[i].at(t->second))});
      }
      for (size_t i = 0; i < proj.size(); ++i)
        for (size_t j = i + 1; j < proj.size(); ++j)
          if (!segments_meet(proj[i], proj[j])) fail("projected segments do not cross");
    } else if (tag == "bicolored_meet" || tag == "bicolored_defined") {
      int split = inst.family_split;
      if (split <= 0) fail("missing family split");
      for (int i = 0; i < split; ++i)
        for (size_t j = split; j < inst.lines.size(); ++j) {
          LinePairFrame f = pair_frame(inst.lines[i], inst.lines[j]);
          if (tag == "bicolored_meet" && f.relation != PairRel::Meet)
            fail("a bicolored pair does not meet");
        }
    } else {
      fail("unknown certificate tag '" + tag + "'");
    }
  }
}

}  // namespace tlab
