#include "tlab/ramsey.hpp"

#include <algorithm>
#include <cstdlib>

#include "tlab/error.hpp"

namespace tlab {

long long default_search_budget() {
  if (const char* env = std::getenv("TLAB_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 10'000'000;
}

namespace {

struct MonoCtx {
  int ground, k, m;
  const SubsetColoring* coloring;
  long long budget;
  long long nodes = 0;
  bool out_of_budget = false;

  // chosen holds the partial subset in decreasing order (largest first),
  // which yields colex enumeration of the completed subsets.
  std::vector<int> chosen;
  bool color_set = false;
  int color = 0;

  std::vector<int> scratch;

  // All k-subsets of chosen+{e} containing e share the reference color?
  bool extension_monochromatic(int e) {
    int have = static_cast<int>(chosen.size());
    if (have + 1 < k) return true;
    // enumerate (k-1)-subsets of chosen via index combinations
    std::vector<int> idx(k - 1);
    for (int i = 0; i < k - 1; ++i) idx[i] = i;
    while (true) {
      scratch.clear();
      for (int i : idx) scratch.push_back(chosen[i]);
      scratch.push_back(e);
      std::sort(scratch.begin(), scratch.end());
      int c = (*coloring)(scratch);
      if (!color_set) {
        color_set = true;
        color = c;
      } else if (c != color) {
        return false;
      }
      // next combination
      int pos = k - 2;
      while (pos >= 0 && idx[pos] == have - (k - 1 - pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k - 1; ++i) idx[i] = idx[i - 1] + 1;
    }
    return true;
  }

  bool search(int need, int max_excl, std::vector<int>* result) {
    if (need == 0) {
      result->assign(chosen.rbegin(), chosen.rend());
      return true;
    }
    for (int e = need - 1; e < max_excl; ++e) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      bool had_color = color_set;
      if (extension_monochromatic(e)) {
        chosen.push_back(e);
        if (search(need - 1, e, result)) return true;
        chosen.pop_back();
        if (out_of_budget) return false;
      }
      if (!had_color) color_set = false;
    }
    return false;
  }
};

}  // namespace

MonoSearch monochromatic_subset(int ground_size, int k, const SubsetColoring& coloring,
                                int m, long long budget) {
  if (k <= 0 || m < k || m > ground_size)
    throw Error(ErrorCode::BadInput, "monochromatic_subset requires 0 < k <= m <= ground");
  MonoCtx ctx;
  ctx.ground = ground_size;
  ctx.k = k;
  ctx.m = m;
  ctx.coloring = &coloring;
  ctx.budget = budget;

  MonoSearch res;
  std::vector<int> found;
  // outer element ranges over possible maxima, ascending: colex order
  bool ok = ctx.search(m, ground_size, &found);
  res.nodes_visited = ctx.nodes;
  if (ok) {
    res.status = MonoSearch::Status::Found;
    res.subset = std::move(found);
  } else if (ctx.out_of_budget) {
    res.status = MonoSearch::Status::BudgetExceeded;
  } else {
    res.status = MonoSearch::Status::None;
  }
  return res;
}

}  // namespace tlab
