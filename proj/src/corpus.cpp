#include "gcx/corpus.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "gcx/rng.hpp"

namespace gcx {

Graph complete_graph(int n) {
  if (n < 1) throw std::runtime_error("bad parameters: complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::runtime_error("bad parameters: cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

// Vertices 0..n-1 keep g; each shadow vertex n+i sees N(i); the apex 2n sees
// every shadow. Raises the chromatic number by exactly one.
Graph mycielski(const Graph& g) {
  if (g.n < 1) throw std::runtime_error("bad parameters: mycielski needs a nonempty graph");
  const int n = g.n;
  std::vector<std::pair<int, int>> edges = g.edges;
  for (const auto& [u, v] : g.edges) {
    edges.emplace_back(n + u, v);
    edges.emplace_back(n + v, u);
  }
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
  return Graph::from_edges(2 * n + 1, std::move(edges));
}

Graph kneser_graph(int n, int r) {
  if (r < 1 || n < 2 * r || n > 20) {
    throw std::runtime_error("bad parameters: kneser needs 1 <= r and 2r <= n <= 20");
  }
  std::vector<unsigned> sets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == r) sets.push_back(mask);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if ((sets[i] & sets[j]) == 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph::from_edges(static_cast<int>(sets.size()), std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::runtime_error("bad parameters: multipartite needs parts");
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw std::runtime_error("bad parameters: part sizes must be >= 1");
    for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
    n += parts[p];
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw std::runtime_error("bad parameters: gnp needs n >= 0, p in [0,1]");
  // Integer threshold comparison keeps seeded graphs identical across builds.
  const std::uint64_t threshold = static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((rng.next() >> 32) < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_corpus(const CorpusSpec& spec) {
  if (spec.generator == "complete") {
    if (spec.params.size() != 1) throw std::runtime_error("bad parameters: complete takes [n]");
    return complete_graph(spec.params[0]);
  }
  if (spec.generator == "mycielski") {
    if (spec.params.size() != 2) {
      throw std::runtime_error("bad parameters: mycielski takes [cycle length, iterations]");
    }
    if (spec.params[1] < 0) throw std::runtime_error("bad parameters: iterations must be >= 0");
    Graph g = cycle_graph(spec.params[0]);
    for (int i = 0; i < spec.params[1]; ++i) g = mycielski(g);
    return g;
  }
  if (spec.generator == "kneser") {
    if (spec.params.size() != 2) throw std::runtime_error("bad parameters: kneser takes [n, r]");
    return kneser_graph(spec.params[0], spec.params[1]);
  }
  if (spec.generator == "multipartite") {
    return complete_multipartite(spec.params);
  }
  if (spec.generator == "gnp") {
    if (spec.params.size() != 1) throw std::runtime_error("bad parameters: gnp takes [n]");
    return gnp(spec.params[0], spec.edge_prob, spec.seed);
  }
  throw std::runtime_error("bad parameters: unknown generator " + spec.generator);
}

}  // namespace gcx
