#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tlab/poly2.hpp"
#include "tlab/ramsey.hpp"

namespace tlab {

enum class ChainKind { Cap, Cup };

// A sequence of sets together with one line per set such that the segments
// s_i = K_i ∩ l_i pairwise intersect, and the lines form a cap or a cup.
struct Realization2 {
  std::vector<int> set_ids;
  std::vector<ConvexPoly2> sets;
  std::vector<Line2> lines;
  ChainKind kind = ChainKind::Cap;
  std::vector<Segment2> segments;

  size_t size() const { return lines.size(); }
};

// Point chains: strictly increasing x, every middle point strictly above
// (cap) / below (cup) the segment of any enclosing pair.
bool is_cap_points(const std::vector<Point2>& seq);
bool is_cup_points(const std::vector<Point2>& seq);

// Line chains: strictly decreasing (cap) / increasing (cup) slopes and
// l_i ∩ l_k strictly above (cap) / below (cup) l_j for all i < j < k.
bool is_cap_lines(const std::vector<Line2>& seq);
bool is_cup_lines(const std::vector<Line2>& seq);

struct ChainSearch {
  std::vector<int> indices;  // into the input list, in chain order
  ChainKind kind = ChainKind::Cap;
};

// Maximum-length subsequence forming a cap or cup, by dynamic programming
// over ordered pairs (state = last two chain members). Ties break toward
// the lexicographically smallest index sequence, cap before cup.
ChainSearch longest_cap_or_cup(const std::vector<Line2>& lines);

struct RealizationFailure {
  enum class Kind { EmptySegment, NoCross, NotChain };
  Kind kind;
  int i = -1, j = -1;
  std::string str() const;
};

using RealizationCheck = std::variant<Realization2, RealizationFailure>;

// Builds the segments, checks all pairwise crossings exactly, classifies the
// chain. Failures are reported in-band, not thrown.
RealizationCheck check_realization2(const std::vector<ConvexPoly2>& sets,
                                    const std::vector<Line2>& lines,
                                    const std::vector<int>* ids = nullptr);

struct Color8 {
  TripleCat category;
  TriOrient orientation;
  int id() const { return static_cast<int>(category) * 2 + static_cast<int>(orientation); }
  friend bool operator==(const Color8& a, const Color8& b) {
    return a.category == b.category && a.orientation == b.orientation;
  }
};

Color8 eight_color(const ConvexPoly2& Ki, const ConvexPoly2& Kj, const ConvexPoly2& Kk);

// Case 1: every (A, K_j, B) is a same-orientation 3-cap with K_j in the
// middle. Realizes F by the lines through the hole-corner pairs on ∂A / ∂B,
// sorted by decreasing slope.
Realization2 realize_case1(const std::vector<ConvexPoly2>& F, const ConvexPoly2& A,
                           const ConvexPoly2& B);

// Case 2: all triples of {A} ∪ F are vertical type with common orientation,
// v crosses every A ∩ K_j, and all K_j ∩ K_k lie strictly right of v.
// Realizes all of F but its top set.
Realization2 realize_case2(const std::vector<ConvexPoly2>& F, const ConvexPoly2& A,
                           const VLine2& v);

// Desk-scale realization extraction: 8-colors all triples, searches
// monochromatic subsets, dispatches to the case constructions (mirroring
// cups and right-vertical types onto their canonical cases), and returns
// the first verified realization of length >= n.
std::optional<Realization2> extract_realizable(const std::vector<ConvexPoly2>& F, int n);

}  // namespace tlab
