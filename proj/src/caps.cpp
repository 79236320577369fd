#include "tlab/caps.hpp"

#include <algorithm>
#include <map>

#include "tlab/error.hpp"

namespace tlab {

namespace {

void check_point_chain_pre(const std::vector<Point2>& seq) {
  if (seq.size() < 3) throw Error(ErrorCode::BadInput, "point chain needs >= 3 points");
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!(seq[i].x < seq[i + 1].x))
      throw Error(ErrorCode::BadOrder, "x-coordinates not strictly increasing");
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      for (size_t k = j + 1; k < seq.size(); ++k)
        if (orient2(seq[i], seq[j], seq[k]) == Orient::Collinear)
          throw Error(ErrorCode::Degenerate, "collinear point triple");
}

bool point_chain_is(const std::vector<Point2>& seq, Orient want) {
  check_point_chain_pre(seq);
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      for (size_t k = j + 1; k < seq.size(); ++k)
        if (orient2(seq[i], seq[j], seq[k]) != want) return false;
  return true;
}

void check_line_chain_pre(const std::vector<Line2>& seq) {
  if (seq.size() < 3) throw Error(ErrorCode::BadInput, "line chain needs >= 3 lines");
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i].slope == seq[j].slope)
        throw Error(ErrorCode::Degenerate, "equal slopes");
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      for (size_t k = j + 1; k < seq.size(); ++k) {
        Point2 pij = *line2_intersect(seq[i], seq[j]);
        if (side_of_line(pij, seq[k]) == Side::On)
          throw Error(ErrorCode::Degenerate, "three concurrent lines");
      }
}

// cap: middle line below the outer crossing (Side::Pos); cup: above
bool line_chain_is(const std::vector<Line2>& seq, bool cap) {
  check_line_chain_pre(seq);
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    bool dec = seq[i].slope > seq[i + 1].slope;
    if (dec != cap) return false;
  }
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      for (size_t k = j + 1; k < seq.size(); ++k) {
        Side s = side_of_line(*line2_intersect(seq[i], seq[k]), seq[j]);
        if (s != (cap ? Side::Pos : Side::Neg)) return false;
      }
  return true;
}

}  // namespace

bool is_cap_points(const std::vector<Point2>& seq) { return point_chain_is(seq, Orient::CW); }
bool is_cup_points(const std::vector<Point2>& seq) { return point_chain_is(seq, Orient::CCW); }
bool is_cap_lines(const std::vector<Line2>& seq) { return line_chain_is(seq, true); }
bool is_cup_lines(const std::vector<Line2>& seq) { return line_chain_is(seq, false); }

namespace {

// Longest chain DP for one kind. Positions are sorted by slope (descending
// for caps, ascending for cups); a chain is any position-increasing
// subsequence whose consecutive triples satisfy the chain predicate, which
// extends to all triples by convex-chain transitivity.
ChainSearch longest_chain(const std::vector<Line2>& lines, bool cap) {
  const int n = static_cast<int>(lines.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lines[a].slope != lines[b].slope)
      return cap ? (lines[a].slope > lines[b].slope) : (lines[a].slope < lines[b].slope);
    return a < b;
  });

  auto ok_triple = [&](int a, int b, int c) {
    Side s = side_of_line(*line2_intersect(lines[order[a]], lines[order[c]]), lines[order[b]]);
    return s == (cap ? Side::Pos : Side::Neg);
  };

  // L[a][b]: longest chain starting with positions a then b
  std::vector<std::vector<int>> L(n, std::vector<int>(n, 0));
  for (int a = n - 2; a >= 0; --a)
    for (int b = a + 1; b < n; ++b) {
      int best = 2;
      for (int c = b + 1; c < n; ++c)
        if (ok_triple(a, b, c)) best = std::max(best, 1 + L[b][c]);
      L[a][b] = best;
    }

  ChainSearch res;
  res.kind = cap ? ChainKind::Cap : ChainKind::Cup;
  if (n == 0) return res;
  if (n == 1) { res.indices = {0}; return res; }

  int total = 2;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) total = std::max(total, L[a][b]);

  // lexicographically smallest original-index sequence among maximum chains
  auto better_start = [&](std::pair<int, int> x, std::pair<int, int> y) {
    if (order[x.first] != order[y.first]) return order[x.first] < order[y.first];
    return order[x.second] < order[y.second];
  };
  std::pair<int, int> start{-1, -1};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (L[a][b] == total && (start.first < 0 || better_start({a, b}, start)))
        start = {a, b};

  std::vector<int> pos{start.first, start.second};
  while (static_cast<int>(pos.size()) < total) {
    int a = pos[pos.size() - 2], b = pos.back();
    int pick = -1;
    for (int c = b + 1; c < n; ++c)
      if (ok_triple(a, b, c) && L[b][c] == L[a][b] - 1 &&
          (pick < 0 || order[c] < order[pick]))
        pick = c;
    pos.push_back(pick);
  }
  for (int p : pos) res.indices.push_back(order[p]);
  return res;
}

}  // namespace

ChainSearch longest_cap_or_cup(const std::vector<Line2>& lines) {
  if (lines.size() < 3) {
    ChainSearch res;
    res.kind = ChainKind::Cap;
    for (size_t i = 0; i < lines.size(); ++i) res.indices.push_back(static_cast<int>(i));
    if (lines.size() == 2 && lines[0].slope < lines[1].slope) std::swap(res.indices[0], res.indices[1]);
    return res;
  }
  {
    // preconditions shared by both kinds
    std::vector<Line2> seq = lines;
    check_line_chain_pre(seq);
  }
  ChainSearch cap = longest_chain(lines, true);
  ChainSearch cup = longest_chain(lines, false);
  if (cap.indices.size() != cup.indices.size())
    return cap.indices.size() > cup.indices.size() ? cap : cup;
  return cap.indices <= cup.indices ? cap : cup;
}

std::string RealizationFailure::str() const {
  switch (kind) {
    case Kind::EmptySegment: return "EMPTY_SEGMENT(" + std::to_string(i) + ")";
    case Kind::NoCross: return "NO_CROSS(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::NotChain: return "NOT_CHAIN";
  }
  return "?";
}

RealizationCheck check_realization2(const std::vector<ConvexPoly2>& sets,
                                    const std::vector<Line2>& lines,
                                    const std::vector<int>* ids) {
  const int n = static_cast<int>(sets.size());
  if (n != static_cast<int>(lines.size()) || n < 1)
    throw Error(ErrorCode::BadInput, "set/line count mismatch");

  Realization2 r;
  r.sets = sets;
  r.lines = lines;
  if (ids) {
    r.set_ids = *ids;
  } else {
    for (int i = 0; i < n; ++i) r.set_ids.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    auto s = clip_line2(sets[i], lines[i]);
    if (!s) return RealizationFailure{RealizationFailure::Kind::EmptySegment, i, -1};
    r.segments.push_back(*s);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!segments_meet(r.segments[i], r.segments[j]))
        return RealizationFailure{RealizationFailure::Kind::NoCross, i, j};

  if (n >= 3) {
    try {
      if (is_cap_lines(lines)) {
        r.kind = ChainKind::Cap;
      } else if (is_cup_lines(lines)) {
        r.kind = ChainKind::Cup;
      } else {
        return RealizationFailure{RealizationFailure::Kind::NotChain, -1, -1};
      }
    } catch (const Error&) {
      return RealizationFailure{RealizationFailure::Kind::NotChain, -1, -1};
    }
  } else if (n == 2) {
    if (lines[0].slope > lines[1].slope) r.kind = ChainKind::Cap;
    else if (lines[0].slope < lines[1].slope) r.kind = ChainKind::Cup;
    else return RealizationFailure{RealizationFailure::Kind::NotChain, -1, -1};
  } else {
    r.kind = ChainKind::Cap;
  }
  return r;
}

Color8 eight_color(const ConvexPoly2& Ki, const ConvexPoly2& Kj, const ConvexPoly2& Kk) {
  TripleAnalysis a = analyze_triple(Ki, Kj, Kk);
  return Color8{a.category, a.orientation};
}

namespace {

Realization2 expect_ok(RealizationCheck&& chk, const char* who) {
  if (auto* fail = std::get_if<RealizationFailure>(&chk))
    throw Error(ErrorCode::VerifyFailed, std::string(who) + " recheck failed: " + fail->str());
  return std::get<Realization2>(std::move(chk));
}

}  // namespace

Realization2 realize_case1(const std::vector<ConvexPoly2>& F, const ConvexPoly2& A,
                           const ConvexPoly2& B) {
  if (F.empty()) throw Error(ErrorCode::BadInput, "empty middle family");
  std::vector<ConvexPoly2> all{A, B};
  all.insert(all.end(), F.begin(), F.end());
  if (family_class2(all) != FamilyClass2::Strict2)
    throw Error(ErrorCode::NotStrict2, "case-1 family is not strictly 2-intersecting");

  std::optional<TriOrient> orient;
  struct Entry { int idx; Line2 line; Point2 a, b; };
  std::vector<Entry> entries;
  for (int j = 0; j < static_cast<int>(F.size()); ++j) {
    TripleAnalysis an = analyze_triple(A, F[j], B);
    if (an.category != TripleCat::Cap || an.cap_roles[1] != 1)
      throw Error(ErrorCode::PreViolated,
                  "(A, K_" + std::to_string(j) + ", B) is not a middle 3-cap");
    if (!orient) orient = an.orientation;
    else if (*orient != an.orientation)
      throw Error(ErrorCode::PreViolated, "mixed orientations in case-1 family");
    HoleDescriptor h = hole_region(A, F[j], B);
    // endpoints of the K_j arc: v12 on ∂A, v23 on ∂B
    entries.push_back(Entry{j, Line2::through(h.v12, h.v23), h.v12, h.v23});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.line.slope != y.line.slope) return x.line.slope > y.line.slope;
    return x.idx < y.idx;
  });
  std::vector<ConvexPoly2> sets;
  std::vector<Line2> lines;
  std::vector<int> ids;
  for (const auto& e : entries) {
    sets.push_back(F[e.idx]);
    lines.push_back(e.line);
    ids.push_back(e.idx);
  }
  return expect_ok(check_realization2(sets, lines, &ids), "case-1");
}

Realization2 realize_case2(const std::vector<ConvexPoly2>& F, const ConvexPoly2& A,
                           const VLine2& v) {
  const int m = static_cast<int>(F.size());
  if (m < 2) throw Error(ErrorCode::BadInput, "case-2 needs at least two petals");
  std::vector<ConvexPoly2> all{A};
  all.insert(all.end(), F.begin(), F.end());
  if (family_class2(all) != FamilyClass2::Strict2)
    throw Error(ErrorCode::NotStrict2, "case-2 family is not strictly 2-intersecting");

  std::optional<TriOrient> orient;
  for (size_t x = 0; x < all.size(); ++x)
    for (size_t y = x + 1; y < all.size(); ++y)
      for (size_t z = y + 1; z < all.size(); ++z) {
        TripleAnalysis an = analyze_triple(all[x], all[y], all[z]);
        if (an.category != TripleCat::VLeft)
          throw Error(ErrorCode::PreViolated, "triple is not of left-vertical type");
        if (!orient) orient = an.orientation;
        else if (*orient != an.orientation)
          throw Error(ErrorCode::PreViolated, "mixed orientations in case-2 family");
      }

  struct Petal { int idx; Scalar y; };
  std::vector<Petal> petals;
  for (int j = 0; j < m; ++j) {
    auto inter = poly_intersect2(A, F[j]);
    auto fiber = clip_vline2(*inter, v.x);
    if (!fiber)
      throw Error(ErrorCode::PreViolated,
                  "vertical line misses A ∩ K_" + std::to_string(j));
    petals.push_back(Petal{j, (fiber->first + fiber->second) / Scalar(2)});
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      auto I = poly_intersect2(F[j], F[k]);
      if (!(I && I->min_x() > v.x))
        throw Error(ErrorCode::PreViolated, "petal intersection touches the vertical line");
    }

  std::sort(petals.begin(), petals.end(), [](const Petal& a, const Petal& b) {
    return a.y < b.y;
  });
  const Petal& top = petals.back();
  struct Entry { int idx; Line2 line; };
  std::vector<Entry> entries;
  for (int t = 0; t + 1 < m; ++t) {
    const Petal& p = petals[t];
    Point2 a{v.x, p.y};
    Point2 b = poly_intersect2(F[top.idx], F[p.idx])->lex_min_vertex();
    entries.push_back(Entry{p.idx, Line2::through(a, b)});
  }
  std::vector<ConvexPoly2> sets;
  std::vector<Line2> lines;
  std::vector<int> ids;
  for (const auto& e : entries) {
    sets.push_back(F[e.idx]);
    lines.push_back(e.line);
    ids.push_back(e.idx);
  }
  return expect_ok(check_realization2(sets, lines, &ids), "case-2");
}

namespace {

struct Transform {
  bool flip_y = false;  // (x, y) -> (x, -y)
  bool flip_x = false;  // (x, y) -> (-x, y)

  ConvexPoly2 apply(const ConvexPoly2& K) const {
    ConvexPoly2 out = K;
    if (flip_y) out = reflect_poly_y(out);
    if (flip_x) out = reflect_poly_x(out);
    return out;
  }
  // maps a line of the transformed picture back to original coordinates
  Line2 back(const Line2& l) const {
    Line2 out = l;
    if (flip_x) out = Line2{-out.slope, out.intercept};
    if (flip_y) out = Line2{-out.slope, -out.intercept};
    return out;
  }
};

// first monochromatic m-subset whose triples all carry `want`; uses the
// kernel search with non-matching triples rainbowed to unique colors
std::optional<std::vector<int>> find_color_subset(int n, const std::vector<int>& color_by_rank,
                                                  const std::function<int(int, int, int)>& rank,
                                                  int want, int m) {
  if (m == 3) {
    for (int k = 2; k < n; ++k)  // colex order
      for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i)
          if (color_by_rank[rank(i, j, k)] == want) return std::vector<int>{i, j, k};
    return std::nullopt;
  }
  auto coloring = [&](const std::vector<int>& t) {
    int r = rank(t[0], t[1], t[2]);
    int c = color_by_rank[r];
    return c == want ? -1 : r;  // unique junk color per non-matching triple
  };
  MonoSearch s = monochromatic_subset(n, 3, coloring, m);
  if (s.status == MonoSearch::Status::BudgetExceeded)
    throw Error(ErrorCode::BudgetExceeded, "monochromatic search budget exhausted");
  if (!s.found()) return std::nullopt;
  // any monochromatic subset of size >= 4 under the rainbowed coloring is
  // all `want`: two distinct triples cannot share a junk color
  return s.subset;
}

// verified realization, mapped back through the transform and re-ordered
std::optional<Realization2> finalize(const std::vector<ConvexPoly2>& original,
                                     const Transform& tf, const Realization2& r) {
  struct Row { int id; Line2 line; };
  std::vector<Row> rows;
  for (size_t i = 0; i < r.size(); ++i) rows.push_back(Row{r.set_ids[i], tf.back(r.lines[i])});
  for (bool descending : {true, false}) {
    std::vector<Row> sorted = rows;
    std::sort(sorted.begin(), sorted.end(), [&](const Row& a, const Row& b) {
      if (a.line.slope != b.line.slope)
        return descending ? (a.line.slope > b.line.slope) : (a.line.slope < b.line.slope);
      return a.id < b.id;
    });
    std::vector<ConvexPoly2> sets;
    std::vector<Line2> lines;
    std::vector<int> ids;
    for (const auto& row : sorted) {
      sets.push_back(original[row.id]);
      lines.push_back(row.line);
      ids.push_back(row.id);
    }
    auto chk = check_realization2(sets, lines, &ids);
    if (auto* ok = std::get_if<Realization2>(&chk)) return *ok;
  }
  return std::nullopt;
}

// try to extend a case-1 realization of the middles with lines for the
// extreme sets A and B through the shared witness of A ∩ B
std::optional<Realization2> attach_extremes(const std::vector<ConvexPoly2>& fam, int ida,
                                            int idb, const Realization2& mid) {
  if (mid.size() == 0) return std::nullopt;
  auto iAB = poly_intersect2(fam[ida], fam[idb]);
  if (!iAB) return std::nullopt;
  Point2 w = iAB->lex_min_vertex();

  auto corner_on = [&](int extreme_id, const Realization2& r, bool first) -> std::optional<Point2> {
    // hole corner of (extreme, middle, other-extreme) lying on the extreme set
    int mid_id = first ? r.set_ids.front() : r.set_ids.back();
    int other = (extreme_id == ida) ? idb : ida;
    HoleDescriptor h = hole_region(fam[extreme_id], fam[mid_id], fam[other]);
    return h.v12;  // corner between the extreme's arc and the middle's arc
  };

  auto try_build = [&](bool with_a, bool with_b) -> std::optional<Realization2> {
    std::vector<int> ids = mid.set_ids;
    std::vector<Line2> lines = mid.lines;
    try {
      if (with_a) {
        auto ca = corner_on(ida, mid, true);
        if (!ca || *ca == w) return std::nullopt;
        ids.push_back(ida);
        lines.push_back(Line2::through(*ca, w));
      }
      if (with_b) {
        auto cb = corner_on(idb, mid, false);
        if (!cb || *cb == w) return std::nullopt;
        ids.push_back(idb);
        lines.push_back(Line2::through(*cb, w));
      }
    } catch (const Error&) {
      return std::nullopt;
    }
    struct Row { int id; Line2 line; };
    std::vector<Row> rows;
    for (size_t i = 0; i < ids.size(); ++i) rows.push_back({ids[i], lines[i]});
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
      if (x.line.slope != y.line.slope) return x.line.slope > y.line.slope;
      return x.id < y.id;
    });
    std::vector<ConvexPoly2> sets;
    std::vector<Line2> ls;
    std::vector<int> is;
    for (const auto& row : rows) {
      sets.push_back(fam[row.id]);
      ls.push_back(row.line);
      is.push_back(row.id);
    }
    auto chk = check_realization2(sets, ls, &is);
    if (auto* ok = std::get_if<Realization2>(&chk)) return *ok;
    return std::nullopt;
  };

  if (auto both = try_build(true, true)) return both;
  if (auto a = try_build(true, false)) return a;
  if (auto b = try_build(false, true)) return b;
  return std::nullopt;
}

}  // namespace

std::optional<Realization2> extract_realizable(const std::vector<ConvexPoly2>& F, int n) {
  const int N = static_cast<int>(F.size());
  if (n < 3) throw Error(ErrorCode::BadInput, "target length must be >= 3");
  if (family_class2(F) != FamilyClass2::Strict2)
    throw Error(ErrorCode::NotStrict2, "family is not strictly 2-intersecting");
  if (N < n) return std::nullopt;

  auto rank = [N](int i, int j, int k) { return (i * N + j) * N + k; };
  std::vector<int> color_by_rank(static_cast<size_t>(N) * N * N, -1);
  {
    // pairwise lenses once, triples from the cache
    std::map<std::pair<int, int>, ConvexPoly2> lens;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        auto I = poly_intersect2(F[i], F[j]);
        if (!I) throw Error(ErrorCode::NotStrict2, "family is not pairwise intersecting");
        lens.emplace(std::make_pair(i, j), std::move(*I));
      }
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        for (int k = j + 1; k < N; ++k) {
          TripleAnalysis an = analyze_triple_cached(F[k], lens.at({j, k}), lens.at({i, k}),
                                                    lens.at({i, j}));
          color_by_rank[rank(i, j, k)] = Color8{an.category, an.orientation}.id();
        }
  }

  static const Color8 kColors[8] = {
      {TripleCat::Cap, TriOrient::CW},    {TripleCat::Cap, TriOrient::CCW},
      {TripleCat::Cup, TriOrient::CW},    {TripleCat::Cup, TriOrient::CCW},
      {TripleCat::VLeft, TriOrient::CW},  {TripleCat::VLeft, TriOrient::CCW},
      {TripleCat::VRight, TriOrient::CW}, {TripleCat::VRight, TriOrient::CCW},
  };

  std::function<int(int, int, int)> rank_fn = rank;
  for (int m1 = N; m1 >= std::max(n, 3); --m1) {
    for (const Color8& color : kColors) {
      auto subset = find_color_subset(N, color_by_rank, rank_fn, color.id(), m1);
      if (!subset) continue;

      Transform tf;
      if (color.category == TripleCat::Cup) tf.flip_y = true;
      if (color.category == TripleCat::VRight) tf.flip_x = true;

      std::vector<ConvexPoly2> sub;
      for (int id : *subset) sub.push_back(tf.apply(F[id]));
      std::map<std::pair<int, int>, ConvexPoly2> sub_lens;
      for (size_t x = 0; x < sub.size(); ++x)
        for (size_t y = x + 1; y < sub.size(); ++y) {
          auto I = poly_intersect2(sub[x], sub[y]);
          if (I) sub_lens.emplace(std::make_pair((int)x, (int)y), std::move(*I));
        }
      auto sub_analyze = [&](int x, int y, int z) {
        return analyze_triple_cached(sub[z], sub_lens.at({y, z}), sub_lens.at({x, z}),
                                     sub_lens.at({x, y}));
      };

      try {
        if (color.category == TripleCat::Cap || color.category == TripleCat::Cup) {
          // pigeonhole the extreme pair: count middles per outer pair
          std::map<std::pair<int, int>, std::vector<int>> middles;
          const int m = static_cast<int>(sub.size());
          for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
              for (int z = y + 1; z < m; ++z) {
                TripleAnalysis an = sub_analyze(x, y, z);
                if (an.category != TripleCat::Cap) continue;
                int roles[3] = {x, y, z};
                int A = roles[an.cap_roles[0]], M = roles[an.cap_roles[1]], B = roles[an.cap_roles[2]];
                if (A > B) std::swap(A, B);
                middles[{A, B}].push_back(M);
              }
          std::pair<int, int> best{-1, -1};
          size_t best_count = 0;
          for (const auto& [pr, ms] : middles)
            if (ms.size() > best_count) { best_count = ms.size(); best = pr; }
          if (best.first < 0) continue;
          auto& ms = middles[best];
          std::sort(ms.begin(), ms.end());
          ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

          std::vector<ConvexPoly2> mids;
          std::vector<int> mid_orig_ids;
          for (int M : ms) {
            mids.push_back(sub[M]);
            mid_orig_ids.push_back((*subset)[M]);
          }
          Realization2 r = realize_case1(mids, sub[best.first], sub[best.second]);
          // rewrite local ids to original family ids
          for (auto& id : r.set_ids) id = mid_orig_ids[id];
          // attachment works in transformed coordinates over original ids
          std::vector<ConvexPoly2> tf_fam;
          tf_fam.reserve(F.size());
          for (const auto& K : F) tf_fam.push_back(tf.apply(K));
          if (auto ext = attach_extremes(tf_fam, (*subset)[best.first], (*subset)[best.second], r))
            r = *ext;
          if (static_cast<int>(r.size()) >= n)
            if (auto fin = finalize(F, tf, r)) return fin;
        } else {
          // vertical type: pick the centre set with the deepest petal line
          const int m = static_cast<int>(sub.size());
          std::vector<int> center_count(m, 0);
          for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
              for (int z = y + 1; z < m; ++z) {
                TripleAnalysis an = sub_analyze(x, y, z);
                if (an.category != TripleCat::VLeft) continue;
                int roles[3] = {x, y, z};
                center_count[roles[an.side_missing]]++;
              }
          std::vector<int> centers(m);
          for (int i = 0; i < m; ++i) centers[i] = i;
          std::sort(centers.begin(), centers.end(), [&](int a, int b) {
            if (center_count[a] != center_count[b]) return center_count[a] > center_count[b];
            return a < b;
          });
          for (int A : centers) {
            if (center_count[A] == 0 && m > 3) break;
            // deepest vertical line over the projected intersections with A
            std::vector<std::pair<Scalar, Scalar>> iv;
            std::vector<int> who;
            for (int j = 0; j < m; ++j) {
              if (j == A) continue;
              auto I = poly_intersect2(sub[A], sub[j]);
              if (!I) continue;
              iv.push_back({I->min_x(), I->max_x()});
              who.push_back(j);
            }
            Scalar best_x;
            int best_depth = -1;
            for (const auto& [lo, hi] : iv) {
              for (const Scalar& cand : {lo, hi}) {
                int d = 0;
                for (const auto& [l2, h2] : iv)
                  if (l2 <= cand && cand <= h2) ++d;
                if (d > best_depth) { best_depth = d; best_x = cand; }
              }
            }
            if (best_depth < 3) continue;
            std::vector<int> petals;
            for (size_t t = 0; t < iv.size(); ++t)
              if (iv[t].first <= best_x && best_x <= iv[t].second) petals.push_back(who[t]);
            // drop petals whose mutual intersections reach the line
            for (bool changed = true; changed;) {
              changed = false;
              std::vector<int> bad(petals.size(), 0);
              for (size_t x = 0; x < petals.size() && !changed; ++x)
                for (size_t y = x + 1; y < petals.size(); ++y) {
                  auto I = poly_intersect2(sub[petals[x]], sub[petals[y]]);
                  if (!I || !(I->min_x() > best_x)) {
                    bad[x]++; bad[y]++;
                  }
                }
              size_t worst = 0;
              for (size_t t = 1; t < petals.size(); ++t)
                if (bad[t] > bad[worst]) worst = t;
              if (!petals.empty() && bad[worst] > 0) {
                petals.erase(petals.begin() + static_cast<long>(worst));
                changed = true;
              }
            }
            if (static_cast<int>(petals.size()) < 2) continue;
            std::vector<ConvexPoly2> petal_polys;
            std::vector<int> petal_orig_ids;
            for (int p : petals) {
              petal_polys.push_back(sub[p]);
              petal_orig_ids.push_back((*subset)[p]);
            }
            try {
              Realization2 r = realize_case2(petal_polys, sub[A], VLine2{best_x});
              for (auto& id : r.set_ids) id = petal_orig_ids[id];
              if (static_cast<int>(r.size()) >= n)
                if (auto fin = finalize(F, tf, r)) return fin;
            } catch (const Error& e) {
              if (e.code() == ErrorCode::BudgetExceeded) throw;
              // fall through to other centres
            }
          }
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BudgetExceeded) throw;
        // this color/size combination did not produce a realization
      }
    }
  }
  return std::nullopt;
}

}  // namespace tlab
