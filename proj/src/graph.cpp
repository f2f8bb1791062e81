#include "gcx/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gcx {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 0) throw std::runtime_error("vertex count must be nonnegative");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::runtime_error("vertex out of range");
    if (u == v) throw std::runtime_error("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end()) {
    throw std::runtime_error("duplicate edge");
  }
  Graph g;
  g.n = n;
  g.edges = std::move(edge_list);
  g.adj.assign(n, {});
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

bool Coloring::complete() const {
  for (int c : color) {
    if (c == kUncolored) return false;
  }
  return true;
}

int Coloring::colors_used() const {
  std::vector<int> used;
  for (int c : color) {
    if (c != kUncolored) used.push_back(c);
  }
  return static_cast<int>(sorted_unique(std::move(used)).size());
}

bool is_proper(const Graph& g, const Coloring& col) {
  if (static_cast<int>(col.color.size()) != g.n) throw std::runtime_error("coloring size mismatch");
  for (int v = 0; v < g.n; ++v) {
    if (col.color[v] == Coloring::kUncolored) throw std::runtime_error("incomplete coloring");
    if (!std::binary_search(col.palette.begin(), col.palette.end(), col.color[v])) {
      throw std::runtime_error("color outside palette");
    }
  }
  for (const auto& [u, v] : g.edges) {
    if (col.color[u] == col.color[v]) return false;
  }
  return true;
}

StablePartition stable_partition_from_coloring(const Graph& g, const Coloring& col) {
  if (!is_proper(g, col)) throw std::runtime_error("improper coloring");
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < g.n; ++v) by_color[col.color[v]].push_back(v);
  StablePartition part;
  for (auto& [c, verts] : by_color) part.classes.push_back(std::move(verts));
  return part;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  for (int v : verts) {
    if (v < 0 || v >= g.n) throw std::runtime_error("vertex out of range");
  }
  std::vector<int> keep = sorted_unique(verts);
  std::vector<int> new_id(g.n, -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) new_id[keep[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges) {
    if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
  }
  InducedSubgraph result;
  result.graph = Graph::from_edges(static_cast<int>(keep.size()), std::move(edges));
  result.vertex_map = std::move(keep);
  return result;
}

std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> clique;
  for (int v : order) {
    bool fits = true;
    for (int u : clique) {
      if (!g.adjacent(u, v)) {
        fits = false;
        break;
      }
    }
    if (fits) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace gcx
