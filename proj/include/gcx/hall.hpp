#pragma once

#include <optional>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

// An ordered family of color lists over a palette. Hall's condition asks that
// every subfamily cover at least as many colors as it has members.
struct HallInstance {
  std::vector<int> palette;              // sorted, unique
  std::vector<std::vector<int>> lists;   // each a subset of palette
};

// Either a system of distinct representatives (sdr[i] is the color chosen for
// list i) or a violating index set A with |union of lists over A| < |A|.
struct HallResult {
  bool feasible = false;
  std::vector<int> sdr;
  std::vector<int> violator;
};

// Augmenting-path bipartite matching, lists scanned by ascending index and
// colors in ascending order. When the matching is not perfect the violator is
// read off the final alternating-reachability set, which witnesses the
// maximum deficiency. Both outcomes are re-validated before returning.
HallResult solve_sdr(const HallInstance& inst);

bool is_hall_feasible(const HallInstance& inst);

// Minimum-cardinality violating subfamily (increasing size, lexicographic
// within a size), or nullopt when the instance is feasible. Exhaustive by
// design; throws beyond 20 lists.
std::optional<std::vector<int>> min_violator(const HallInstance& inst);

}  // namespace gcx
