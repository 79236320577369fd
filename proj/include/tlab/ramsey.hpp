#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace tlab {

// Colors k-subsets of the ground set; receives indices sorted ascending.
using SubsetColoring = std::function<int(const std::vector<int>&)>;

struct MonoSearch {
  enum class Status { Found, None, BudgetExceeded };
  Status status = Status::None;
  std::vector<int> subset;  // ascending indices when Found
  long long nodes_visited = 0;

  bool found() const { return status == Status::Found; }
};

// Search budget: TLAB_BUDGET env var when set, otherwise 10^7 subsets.
long long default_search_budget();

// Exhaustive search for an m-subset of [0, ground) all of whose k-subsets
// share one color. Enumerates candidate subsets in colex order, extending a
// partial subset only while it stays monochromatic. This is a desk-scale
// stand-in for Ramsey existence, not a bound on R_k(m, c): None means no
// such subset exists among all m-subsets of this ground set.
MonoSearch monochromatic_subset(int ground_size, int k, const SubsetColoring& coloring,
                                int m, long long budget = default_search_budget());

}  // namespace tlab
