#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gcx {

// Sorts and deduplicates an int vector in place; returned by value for chaining.
std::vector<int> sorted_unique(std::vector<int> v);

// Simple undirected graph on vertex ids 0..n-1. Edges are normalized u < v,
// sorted; adjacency lists are sorted ascending. Construction rejects
// self-loops, duplicate edges and out-of-range endpoints.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool complete() const {
    return static_cast<long long>(edge_count()) * 2 == static_cast<long long>(n) * (n - 1);
  }
};

// Partial or total vertex coloring. color[v] == kUncolored means unassigned;
// properness is a property checked by operation, never assumed.
struct Coloring {
  static constexpr int kUncolored = -1;
  std::vector<int> color;
  std::vector<int> palette;  // sorted, unique

  bool complete() const;
  int colors_used() const;  // distinct colors among assigned vertices
};

struct StablePartition {
  std::vector<std::vector<int>> classes;
};

// True iff no edge is monochromatic. Throws "incomplete coloring" when some
// vertex is unassigned, and rejects colors outside the palette.
bool is_proper(const Graph& g, const Coloring& col);

// Color classes of a proper total coloring, ordered by ascending color id.
StablePartition stable_partition_from_coloring(const Graph& g, const Coloring& col);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new id -> original id, ascending
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// Maximal clique grown greedily over vertices in (degree desc, id asc) order.
std::vector<int> greedy_clique(const Graph& g);

}  // namespace gcx
