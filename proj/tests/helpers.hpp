#pragma once

#include <utility>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/rng.hpp"

namespace gcx::test {

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  return Graph::from_edges(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph random_graph(int n, int percent, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(percent, 100)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

inline std::vector<int> iota_palette(int size, int first = 0) {
  std::vector<int> palette(size);
  for (int i = 0; i < size; ++i) palette[i] = first + i;
  return palette;
}

}  // namespace gcx::test
