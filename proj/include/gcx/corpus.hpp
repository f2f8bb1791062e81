#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

// Deterministic test-graph constructions with known chromatic numbers:
// complete graphs, Mycielski iterates of a cycle (each iteration raises chi
// by one), Kneser graphs K(n,r) with chi = n - 2r + 2, complete multipartite
// graphs (chi = number of parts), and seeded G(n,p).
struct CorpusSpec {
  std::string generator;          // complete | mycielski | kneser | multipartite | gnp
  std::vector<int> params;
  double edge_prob = 0.0;         // gnp only
  std::uint64_t seed = 0;         // gnp only
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph mycielski(const Graph& g);
Graph kneser_graph(int n, int r);
Graph complete_multipartite(const std::vector<int>& parts);
Graph gnp(int n, double p, std::uint64_t seed);

Graph generate_corpus(const CorpusSpec& spec);

}  // namespace gcx
