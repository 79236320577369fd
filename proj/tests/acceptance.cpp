// Acceptance suite: one test per criterion, each run at its stated trial
// count and tolerance, printing one PASS/FAIL line. Everything downstream
// of the generators is exact rational arithmetic; "0 failures" criteria
// are exact counts, not tolerances.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "tlab/scalar.hpp"
#include "tlab/suites.hpp"

using namespace tlab;

namespace {

constexpr uint64_t kSeed = 20260811;

std::string stat(const SuiteReport& r, const std::string& key) {
  for (const auto& [k, v] : r.stats)
    if (k == key) return v;
  return "";
}

int stat_int(const SuiteReport& r, const std::string& key) {
  std::string v = stat(r, key);
  return v.empty() ? 0 : std::stoi(v);
}

void print_line(int criterion, const char* name, bool pass, const std::string& detail) {
  std::printf("[criterion %2d] %s  %s (%s)\n", criterion, pass ? "PASS" : "FAIL", name,
              detail.c_str());
  std::fflush(stdout);
}

SuiteReport run(const std::string& suite, int trials) {
  return verify_suite(suite, trials, kSeed);
}

std::string basic_detail(const SuiteReport& r) {
  return std::to_string(r.passes) + "/" + std::to_string(r.trials) + " passed, " +
         stat(r, "excluded") + " excluded, " + std::to_string(r.seconds).substr(0, 5) + "s";
}

}  // namespace

TEST_CASE("criterion 1: vertical-hull equivalence on 500 triples") {
  SuiteReport r = run("vertical_hull_equiv", 500);
  bool pass = r.ok() && r.trials == 500;
  print_line(1, "separates_sets <=> vertical segment witness", pass, basic_detail(r));
  CHECK(r.trials == 500);
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 2: orientation witness-independence, 300 x 50") {
  SuiteReport r = run("orientation_witness_independence", 300);
  bool pass = r.ok() && r.trials == 300;
  print_line(2, "triple orientation constant over witness resamples", pass, basic_detail(r));
  CHECK(r.trials == 300);
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 3: hole-region corner structure on 200 triples") {
  SuiteReport r = run("hole_structure", 200);
  bool pass = r.ok() && r.trials == 200;
  print_line(3, "open corner segments inside their set, avoiding the others", pass,
             basic_detail(r));
  CHECK(r.trials == 200);
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 4: 4-set crossing conclusion on 100 satisfying families") {
  SuiteReport r = run("lemma_4sets", 100);
  bool pass = r.ok() && r.trials >= 100;
  print_line(4, "corner segment crossing under the 4-set hypotheses", pass,
             basic_detail(r) + ", attempts " + stat(r, "attempted"));
  CHECK(r.trials >= 100);
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 5: tangent counts (8 oriented lines, 16 oriented planes)") {
  SuiteReport r2 = run("tangent_count_2d", 200);
  SuiteReport r3 = run("tangent_count_3d", 25);
  int attempted2 = stat_int(r2, "attempted"), excluded2 = stat_int(r2, "excluded");
  int attempted3 = stat_int(r3, "attempted"), excluded3 = stat_int(r3, "excluded");
  bool degenerate_rate_ok =
      excluded2 * 10 < attempted2 && excluded3 * 10 < std::max(attempted3, 1);
  bool pass = r2.ok() && r3.ok() && r2.trials >= 200 && r3.trials >= 25 && degenerate_rate_ok;
  print_line(5, "pairs: 8 oriented tangent lines; good triples: 16 oriented planes", pass,
             "2d " + basic_detail(r2) + "; 3d " + basic_detail(r3));
  CHECK(r2.trials >= 200);
  CHECK(r2.failures.empty());
  CHECK(r3.trials >= 25);
  CHECK(r3.failures.empty());
  CHECK(degenerate_rate_ok);
}

TEST_CASE("criterion 6: triple classification exhaustive on 10^4 monotone triples") {
  SuiteReport r = run("triple3_exhaustive", 10000);
  bool pass = r.ok() && r.trials == 10000;
  print_line(6, "every monotone triple falls in a nonempty type set", pass, basic_detail(r));
  CHECK(r.trials == 10000);
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 7: quadratic separation growth over 50 seeds per size") {
  SuiteReport r = run("separation_growth", 50);
  bool pass = r.ok();
  print_line(7, "S(20) >= 3 S(10) and S(40) >= 3 S(20)", pass,
             "S(10)=" + stat(r, "S(10)") + " S(20)=" + stat(r, "S(20)") +
                 " S(40)=" + stat(r, "S(40)"));
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 8: three-crossing line on 50 separated families (q=24)") {
  SuiteReport r = run("three_crossing", 50);
  int attempted = stat_int(r, "attempted"), excluded = stat_int(r, "excluded");
  bool precond_rate_ok = excluded * 2 < attempted;
  bool pass = r.ok() && r.trials >= 50 && precond_rate_ok;
  print_line(8, "a verified in-plane line crossing >= 3 sets", pass,
             basic_detail(r) + ", precondition failures " + std::to_string(excluded) + "/" +
                 std::to_string(attempted));
  CHECK(r.trials >= 50);
  CHECK(r.failures.empty());
  CHECK(precond_rate_ok);
}

TEST_CASE("criterion 9: full-length realization extraction on 100 8-set families") {
  SuiteReport r = run("realization_extraction", 100);
  bool pass = r.ok() && r.trials == 100;
  print_line(9, "extract_realizable realizes all 8 strips, recheck passes", pass,
             basic_detail(r));
  CHECK(r.trials == 100);
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 10: paraboloid bipartite obstruction over 20 seeds") {
  SuiteReport r = run("paraboloid_obstruction", 20);
  bool pass = r.ok() && r.trials == 20;
  print_line(10, "no candidate plane strictly separates 3 disjoint bicolored pairs", pass,
             basic_detail(r));
  CHECK(r.trials == 20);
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 11: pipeline soundness on 50 20-set families") {
  SuiteReport r = run("pipeline_soundness", 50);
  bool pass = r.ok() && r.trials == 50;
  print_line(11, "verified line with fraction >= 3/20", pass,
             basic_detail(r) + ", median fraction " + stat(r, "median_fraction") + " (min " +
                 stat(r, "min_fraction") + ")");
  CHECK(r.trials == 50);
  CHECK(r.failures.empty());
}

TEST_CASE("criterion 12: oracle equivalences") {
  SuiteReport dp = run("oracle_caps_dp", 200);
  SuiteReport deep = run("oracle_deepest", 200);
  SuiteReport cross = run("oracle_crossing_count", 500);
  bool pass = dp.ok() && deep.ok() && cross.ok() && deep.trials == 200 && cross.trials == 500;
  print_line(12, "chain DP, deepest point and crossing count match their oracles", pass,
             "dp " + basic_detail(dp) + "; deepest " + basic_detail(deep) + "; crossing " +
                 basic_detail(cross));
  CHECK(dp.failures.empty());
  CHECK(dp.trials >= 150);  // degenerate line sets are excluded before the oracle runs
  CHECK(deep.trials == 200);
  CHECK(deep.failures.empty());
  CHECK(cross.trials == 500);
  CHECK(cross.failures.empty());
}
