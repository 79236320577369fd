#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tlab/error.hpp"
#include "tlab/geom.hpp"
#include "tlab/ramsey.hpp"
#include "tlab/scalar.hpp"

using namespace tlab;

TEST_CASE("scalar canonical arithmetic and strings") {
  Scalar a(1, 3), b(2, 6);
  CHECK(a == b);
  CHECK((a + b).str() == "2/3");
  CHECK(Scalar(-3, 6).str() == "-1/2");
  CHECK(Scalar(3, -6).str() == "-1/2");
  CHECK(Scalar(5, 1).str() == "5");
  CHECK(Scalar(0, 7).str() == "0");
  CHECK(Scalar::from_string("-22/4") == Scalar(-11, 2));
  CHECK(Scalar::from_string("17") == Scalar(17));
  CHECK_THROWS_AS(Scalar::from_string("1/0"), Error);
  CHECK_THROWS_AS(Scalar::from_string("x"), Error);
  CHECK_THROWS_AS(Scalar::from_string("1.5"), Error);
  CHECK_THROWS_AS(Scalar(1, 0), Error);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("scalar string round-trip is exact") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    long long num = static_cast<long long>(rng() % 2000001) - 1000000;
    long long den = static_cast<long long>(rng() % 999983) + 1;
    Scalar s(num, den);
    CHECK(Scalar::from_string(s.str()) == s);
  }
}

TEST_CASE("scalar field laws on random triples") {
  std::mt19937_64 rng(11);
  auto rnd = [&]() {
    return Scalar(static_cast<long long>(rng() % 401) - 200,
                  static_cast<long long>(rng() % 40) + 1);
  };
  for (int i = 0; i < 100; ++i) {
    Scalar a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("orient2 basics") {
  CHECK(orient2({Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}) == Orient::CCW);
  CHECK(orient2({Scalar(0), Scalar(0)}, {Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}) == Orient::Collinear);
  CHECK(orient2({Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}) == Orient::CW);
}

TEST_CASE("orient2 antisymmetry property") {
  std::mt19937_64 rng(5);
  auto rp = [&]() {
    return Point2{Scalar(static_cast<long long>(rng() % 41) - 20, 1 + static_cast<long long>(rng() % 5)),
                  Scalar(static_cast<long long>(rng() % 41) - 20, 1 + static_cast<long long>(rng() % 5))};
  };
  for (int i = 0; i < 300; ++i) {
    Point2 p = rp(), q = rp(), r = rp();
    CHECK(static_cast<int>(orient2(p, q, r)) == -static_cast<int>(orient2(p, r, q)));
  }
}

TEST_CASE("line2_intersect examples and symmetry") {
  Line2 yx{Scalar(1), Scalar(0)}, y0{Scalar(0), Scalar(0)};
  auto p = line2_intersect(yx, y0);
  REQUIRE(p.has_value());
  CHECK(*p == Point2{Scalar(0), Scalar(0)});

  CHECK(!line2_intersect(Line2{Scalar(1), Scalar(1)}, yx).has_value());

  auto q = line2_intersect(Line2{Scalar(2), Scalar(0)}, Line2{Scalar(-1), Scalar(3)});
  REQUIRE(q.has_value());
  CHECK(*q == Point2{Scalar(1), Scalar(2)});

  // symmetry and incidence
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Line2 a{Scalar(static_cast<long long>(rng() % 21) - 10, 1 + static_cast<long long>(rng() % 4)),
            Scalar(static_cast<long long>(rng() % 21) - 10, 1 + static_cast<long long>(rng() % 4))};
    Line2 b{Scalar(static_cast<long long>(rng() % 21) - 10, 1 + static_cast<long long>(rng() % 4)),
            Scalar(static_cast<long long>(rng() % 21) - 10, 1 + static_cast<long long>(rng() % 4))};
    auto ab = line2_intersect(a, b);
    auto ba = line2_intersect(b, a);
    CHECK(ab.has_value() == ba.has_value());
    if (ab) {
      CHECK(*ab == *ba);
      CHECK(side_of_line(*ab, a) == Side::On);
      CHECK(side_of_line(*ab, b) == Side::On);
    }
  }
}

TEST_CASE("side_of_line examples") {
  CHECK(side_of_line({Scalar(0), Scalar(1)}, Line2{Scalar(0), Scalar(0)}) == Side::Pos);
  CHECK(side_of_line({Scalar(5), Scalar(5)}, Line2{Scalar(1), Scalar(0)}) == Side::On);
  CHECK(side_of_line({Scalar(0), Scalar(-1)}, Line2{Scalar(0), Scalar(0)}) == Side::Neg);
}

TEST_CASE("side_of_plane examples") {
  Plane3 z1(Scalar(0), Scalar(0), Scalar(1), Scalar(1));
  CHECK(side_of_plane({Scalar(0), Scalar(0), Scalar(2)}, z1) == Side::Pos);
  CHECK(side_of_plane({Scalar(3), Scalar(4), Scalar(1)}, z1) == Side::On);
  CHECK(side_of_plane({Scalar(0), Scalar(0), Scalar(0)}, z1) == Side::Neg);
}

TEST_CASE("projection examples") {
  CHECK(project({Scalar(1), Scalar(2), Scalar(3)}) == Point2{Scalar(1), Scalar(2)});

  Line3 l({Scalar(0), Scalar(0), Scalar(5)}, {Scalar(1), Scalar(1), Scalar(0)});
  Line2 p = project_line(l);
  CHECK(p.slope == Scalar(1));
  CHECK(p.intercept == Scalar(0));

  Line3 deg({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)});
  CHECK_THROWS_AS(project_line(deg), Error);
}

TEST_CASE("Line3 canonical form: equal lines, equal representation") {
  Line3 a({Scalar(2), Scalar(3), Scalar(4)}, {Scalar(1, 2), Scalar(1), Scalar(3, 2)});
  Line3 b({Scalar(3), Scalar(5), Scalar(7)}, {Scalar(-1), Scalar(-2), Scalar(-3)});
  CHECK(a == b);
  CHECK(a.dir() == Point3{Scalar(1), Scalar(2), Scalar(3)});
  CHECK_THROWS_AS(Line3({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}), Error);
}

TEST_CASE("Plane3 canonical form keeps orientation") {
  Plane3 h(Scalar(-2), Scalar(0), Scalar(-4), Scalar(-6));
  CHECK(h.a() == Scalar(-1));
  CHECK(h.c() == Scalar(-2));
  CHECK(h.d() == Scalar(-3));
  CHECK(h.flipped().unoriented_key() == h.unoriented_key());
  CHECK(h.flipped() != h);
}

TEST_CASE("monochromatic_subset trivial examples") {
  auto constant = [](const std::vector<int>&) { return 0; };
  auto r = monochromatic_subset(4, 2, constant, 4);
  REQUIRE(r.found());
  CHECK(r.subset == std::vector<int>{0, 1, 2, 3});

  auto any3 = monochromatic_subset(3, 3, constant, 3);
  REQUIRE(any3.found());
  CHECK(any3.subset == std::vector<int>{0, 1, 2});
}

// Oracle: brute-force enumeration of all 3-subsets of {0..5} under the
// parity coloring confirms the monochromatic ones are the same-parity
// triples; the searched result must be one of them.
TEST_CASE("monochromatic_subset parity example against brute force") {
  auto parity = [](const std::vector<int>& s) { return (s[0] + s[1]) % 2; };
  std::set<std::set<int>> mono;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        int c1 = (a + b) % 2, c2 = (a + c) % 2, c3 = (b + c) % 2;
        if (c1 == c2 && c2 == c3) mono.insert({a, b, c});
      }
  // same-parity triples exactly
  for (const auto& s : mono) {
    std::vector<int> v(s.begin(), s.end());
    CHECK(v[0] % 2 == v[1] % 2);
    CHECK(v[1] % 2 == v[2] % 2);
  }
  auto r = monochromatic_subset(6, 2, parity, 3);
  REQUIRE(r.found());
  CHECK(mono.count(std::set<int>(r.subset.begin(), r.subset.end())) == 1);
  CHECK(r.subset == std::vector<int>{0, 2, 4});  // colex-first monochromatic triple
}

TEST_CASE("monochromatic_subset output passes independent recheck") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int ground = 6 + static_cast<int>(rng() % 4);
    uint64_t salt = rng();
    auto coloring = [salt](const std::vector<int>& s) {
      uint64_t h = salt;
      for (int e : s) h = h * 1099511628211ull + static_cast<uint64_t>(e) * 2654435761u;
      return static_cast<int>(h % 2);
    };
    auto r = monochromatic_subset(ground, 3, coloring, 4);
    if (!r.found()) continue;
    REQUIRE(r.subset.size() == 4);
    int color = -1;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int c = b + 1; c < 4; ++c) {
          int col = coloring({r.subset[a], r.subset[b], r.subset[c]});
          if (color < 0) color = col;
          CHECK(col == color);
        }
  }
}

TEST_CASE("monochromatic_subset none and budget paths") {
  // rainbow coloring of pairs: no monochromatic triple exists
  auto rainbow = [](const std::vector<int>& s) { return s[0] * 100 + s[1]; };
  auto r = monochromatic_subset(6, 2, rainbow, 3);
  CHECK(r.status == MonoSearch::Status::None);

  auto constant = [](const std::vector<int>&) { return 0; };
  auto b = monochromatic_subset(30, 2, constant, 20, /*budget=*/3);
  CHECK(b.status == MonoSearch::Status::BudgetExceeded);

  CHECK_THROWS_AS(monochromatic_subset(3, 4, constant, 4), Error);
}
