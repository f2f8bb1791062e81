#pragma once

#include "gcx/graph.hpp"

namespace gcx {

// True iff g has more than k vertices and no vertex cut of size < k.
// Disconnected graphs are never k-connected for k >= 1, and K_n with n <= k
// fails the "> k vertices" requirement. Computed by unit-vertex-capacity
// max-flow on the split digraph, over the standard reduced pair set: one
// fixed source s against all non-neighbors, plus non-adjacent pairs inside
// N(s).
bool is_k_connected(const Graph& g, int k);

// Exact vertex connectivity (n-1 for complete graphs, 0 for disconnected or
// trivial graphs), same flow machinery.
int vertex_connectivity(const Graph& g);

}  // namespace gcx
