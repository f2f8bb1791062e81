#pragma once

#include <vector>

#include "gcx/graph.hpp"

namespace gcx::brute {

// Exhaustive reference implementations. These stay deliberately independent
// of the solver code paths (no DSATUR ordering, no flow) so that
// solver-vs-oracle equivalence tests mean something. Exponential; callers
// keep instances small.

// Plain exhaustive assignment search over colors 0..num_colors-1 in fixed
// vertex order, pruning only improper prefixes.
bool colorable(const Graph& g, int num_colors);

int chromatic_number(const Graph& g);

// Minimum size of a disconnecting vertex set, by enumerating all candidate
// cuts in ascending size; n-1 when no cut exists (complete graphs).
int vertex_connectivity(const Graph& g);

bool is_k_connected(const Graph& g, int k);

bool connected(const Graph& g);

// Max over all subfamilies A of |A| - |union of lists in A|; 0 when the
// family satisfies Hall's condition. Lists are given as color id sets.
int hall_max_deficiency(const std::vector<std::vector<int>>& lists);

}  // namespace gcx::brute
